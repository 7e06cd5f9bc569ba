"""Exact brute-force counting and enumeration of (maximal) independent sets.

All counts are exact Python integers; no floating point appears anywhere.

For a bipartite graph every maximal independent set (MIS) has the form
A u (R \\ N(A)) where A is a subset of the left part and A is *closed*:
A equals the set of left vertices with no neighbour outside N(A).  The
map A -> {v : N(v) subset of N(A)} is a closure operator, so the MIS of a
graph are exactly its closed sets and can be enumerated output-sensitively
with Ganter's next-closure procedure.  That makes the oracle cost
proportional to the answer rather than 2^{min part}, which is what lets
it verify the corona-based base table (parts up to 50) directly.

Two independent reference implementations are kept for cross-checking:
``count_mis_subsets`` iterates all subsets of the smaller part, and
``count_mis_naive`` checks every one of the 2^nu vertex subsets.
"""

from __future__ import annotations

from .bipartite import LEFT, RIGHT, BipartiteGraph, VertexSubset, delete_vertices

DEFAULT_MAX_SETS = 10_000_000
DEFAULT_ENUM_CAP = 1_000_000
SUBSET_PART_CAP = 26
NAIVE_VERTEX_CAP = 20

try:  # optional fast path; every public result is reproducible without it
    import numpy as _np
    from numba import njit as _njit
except ImportError:  # pragma: no cover
    _np = None
    _njit = None


class OracleCapError(RuntimeError):
    """The graph is too large for exhaustive verification; fall back to the ledger."""


def _ground_adj(g: BipartiteGraph):
    """Adjacency of the smaller part (the enumeration ground set).

    Returns (adj, ground_side) where adj[i] is the bitmask of opposite-part
    neighbours of ground vertex i.
    """
    if g.left_size <= g.right_size:
        return list(g.left_adj), LEFT
    return list(g.right_adj()), RIGHT


def closed_sets(adj):
    """Yield (A, N(A)) for every closed subset A of the ground set, as bitmasks.

    Next-closure enumeration in lectic order; O(n^2) bitmask operations per
    closed set, no memory beyond the current set.
    """
    n = len(adj)
    a = 0
    for v in range(n):
        if adj[v] == 0:
            a |= 1 << v
    yield a, 0
    while True:
        pre = [0] * (n + 1)
        for v in range(n):
            pre[v + 1] = pre[v] | (adj[v] if a >> v & 1 else 0)
        for i in range(n - 1, -1, -1):
            if a >> i & 1:
                continue
            na = pre[i] | adj[i]
            b = 0
            for v in range(n):
                if adj[v] & ~na == 0:
                    b |= 1 << v
            low = (1 << i) - 1
            if b & low == a & low:
                a = b
                yield a, na
                break
        else:
            return


if _njit is not None:

    @_njit(cache=True)
    def _count_closed_kernel(adj, cap):  # pragma: no cover - exercised via count_mis
        n, nw = adj.shape
        in_a = _np.zeros(n, _np.uint8)
        pre = _np.zeros((n + 1, nw), _np.uint64)
        xna = _np.zeros(nw, _np.uint64)
        for v in range(n):
            empty = True
            for w in range(nw):
                if adj[v, w] != 0:
                    empty = False
                    break
            if empty:
                in_a[v] = 1
        count = 1
        while True:
            for w in range(nw):
                pre[0, w] = 0
            for v in range(n):
                for w in range(nw):
                    if in_a[v] == 1:
                        pre[v + 1, w] = pre[v, w] | adj[v, w]
                    else:
                        pre[v + 1, w] = pre[v, w]
            advanced = False
            for i in range(n - 1, -1, -1):
                if in_a[i] == 1:
                    continue
                for w in range(nw):
                    xna[w] = pre[i, w] | adj[i, w]
                ok = True
                for v in range(i):
                    in_b = True
                    for w in range(nw):
                        if adj[v, w] & ~xna[w] != 0:
                            in_b = False
                            break
                    if in_b != (in_a[v] == 1):
                        ok = False
                        break
                if ok:
                    for v in range(n):
                        in_b = True
                        for w in range(nw):
                            if adj[v, w] & ~xna[w] != 0:
                                in_b = False
                                break
                        in_a[v] = 1 if in_b else 0
                    count += 1
                    if count > cap:
                        return -1
                    advanced = True
                    break
            if not advanced:
                return count

    def _count_closed_fast(adj, other_size, cap):
        n = len(adj)
        nw = max(1, (other_size + 63) // 64)
        words = _np.zeros((n, nw), dtype=_np.uint64)
        lowmask = (1 << 64) - 1
        for v, mask in enumerate(adj):
            for w in range(nw):
                words[v, w] = (mask >> (64 * w)) & lowmask
        return _count_closed_kernel(words, cap)

else:  # pragma: no cover
    _count_closed_fast = None


def count_mis(g: BipartiteGraph, max_sets: int = DEFAULT_MAX_SETS) -> int:
    """Exact number of maximal independent sets of g.

    Raises OracleCapError once more than max_sets MIS have been seen, at
    which point the caller should trust the construction ledger instead.
    """
    adj, _ = _ground_adj(g)
    if not adj:
        return 1
    if _count_closed_fast is not None:
        other = g.num_vertices - len(adj)
        result = _count_closed_fast(adj, other, max_sets)
        if result < 0:
            raise OracleCapError(f"more than {max_sets} maximal independent sets")
        return result
    count = 0
    for _ in closed_sets(adj):
        count += 1
        if count > max_sets:
            raise OracleCapError(f"more than {max_sets} maximal independent sets")
    return count


def enumerate_mis(g: BipartiteGraph, max_sets: int = DEFAULT_ENUM_CAP):
    """Yield every MIS as a (left_indices, right_indices) frozenset pair."""
    adj, side = _ground_adj(g)
    other_size = g.right_size if side == LEFT else g.left_size
    full = (1 << other_size) - 1
    count = 0
    for a, na in closed_sets(adj):
        count += 1
        if count > max_sets:
            raise OracleCapError(f"more than {max_sets} maximal independent sets")
        b = full & ~na
        ground = frozenset(_bits(a))
        opposite = frozenset(_bits(b))
        if side == LEFT:
            yield ground, opposite
        else:
            yield opposite, ground


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def count_is(g: BipartiteGraph, max_part: int = SUBSET_PART_CAP) -> int:
    """Exact number of independent sets of g, the empty set included.

    Sums 2^{|R \\ N(A)|} over subsets A of the smaller part, with a twin
    shortcut: once a vertex's neighbourhood is already covered both branches
    coincide and contribute a factor of 2.
    """
    adj, _ = _ground_adj(g)
    n = len(adj)
    if n > max_part:
        raise OracleCapError(f"smaller part {n} exceeds oracle cap {max_part}")
    other = g.num_vertices - n
    full = (1 << other) - 1

    def rec(i, na):
        if i == n:
            return 1 << (full & ~na).bit_count()
        if adj[i] & ~na == 0:
            return 2 * rec(i + 1, na)
        return rec(i + 1, na) + rec(i + 1, na | adj[i])

    return rec(0, 0)


def count_mis_hitting(g: BipartiteGraph, u1: VertexSubset, u2: VertexSubset,
                      max_sets: int = DEFAULT_MAX_SETS) -> int:
    """Number of MIS of g intersecting both u1 (left side) and u2 (right side).

    Zero whenever either subset is empty: no set meets an empty subset.
    """
    if u1.side != LEFT or u2.side != RIGHT:
        raise ValueError("u1 must be a left subset and u2 a right subset")
    u1.check_against(g)
    u2.check_against(g)
    if not u1.members or not u2.members:
        return 0
    adj, side = _ground_adj(g)
    other_size = g.num_vertices - len(adj)
    full = (1 << other_size) - 1
    if side == LEFT:
        ground_need, other_need = u1.mask, u2.mask
    else:
        ground_need, other_need = u2.mask, u1.mask
    count = 0
    seen = 0
    for a, na in closed_sets(adj):
        seen += 1
        if seen > max_sets:
            raise OracleCapError(f"more than {max_sets} maximal independent sets")
        if a & ground_need and (full & ~na) & other_need:
            count += 1
    return count


def h_values(g: BipartiteGraph, u1: VertexSubset, u2: VertexSubset,
             max_sets: int = DEFAULT_MAX_SETS):
    """The gadget multiplier/offset pair (h', h'') for g with marked subsets.

    h'  = MIS count of g with U1 and U2 deleted;
    h'' = [count without U1] + [count without U2] + [count hitting both]
          - 2 * [count without U1 and U2],
    where deletion means the induced subgraph on the remaining vertices.
    """
    if u1.side != LEFT or u2.side != RIGHT:
        raise ValueError("u1 must be a left subset and u2 a right subset")
    u1.check_against(g)
    u2.check_against(g)
    h_prime = count_mis(delete_vertices(g, u1.members, u2.members), max_sets)
    no_u1 = count_mis(delete_vertices(g, u1.members, ()), max_sets)
    no_u2 = count_mis(delete_vertices(g, (), u2.members), max_sets)
    hit = count_mis_hitting(g, u1, u2, max_sets)
    return h_prime, no_u1 + no_u2 + hit - 2 * h_prime


# ---------------------------------------------------------------------------
# independent reference implementations (cross-checked in the test suite)


def count_mis_subsets(g: BipartiteGraph, max_part: int = SUBSET_PART_CAP) -> int:
    """Reference MIS count: iterate every subset A of the smaller part and
    keep those that are exactly the closure witness of their own neighbourhood."""
    adj, _ = _ground_adj(g)
    n = len(adj)
    if n > max_part:
        raise OracleCapError(f"smaller part {n} exceeds oracle cap {max_part}")
    count = 0
    for a in range(1 << n):
        na = 0
        rest = a
        while rest:
            low = rest & -rest
            na |= adj[low.bit_length() - 1]
            rest ^= low
        closure = 0
        for v in range(n):
            if adj[v] & ~na == 0:
                closure |= 1 << v
        if closure == a:
            count += 1
    return count


def count_mis_naive(g: BipartiteGraph, max_vertices: int = NAIVE_VERTEX_CAP) -> int:
    """Second reference: test all 2^nu vertex subsets for independence and
    maximality directly."""
    if g.num_vertices > max_vertices:
        raise OracleCapError(f"{g.num_vertices} vertices exceed naive cap {max_vertices}")
    nl, nr = g.left_size, g.right_size
    adj = g.left_adj
    full_r = (1 << nr) - 1
    count = 0
    for a in range(1 << nl):
        na = 0
        rest = a
        while rest:
            low = rest & -rest
            na |= adj[low.bit_length() - 1]
            rest ^= low
        for b in range(1 << nr):
            if na & b:
                continue  # not independent
            # right-maximal: every right vertex outside b is dominated by a
            if (full_r & ~b) & ~na:
                continue
            # left-maximal: every left vertex outside a has a neighbour in b
            ok = True
            for v in range(nl):
                if not a >> v & 1 and adj[v] & b == 0:
                    ok = False
                    break
            if ok:
                count += 1
    return count
