"""Exhaustive search for marked-gadget families.

Enumerates small bipartite graphs without isolated vertices up to
within-part permutation symmetry, tags every choice of marked subsets with
its oracle-computed (h', h'') pair, and assembles covering families whose
arithmetic progressions h'*k + h'' (k >= 2) reach every sufficiently large
integer.  This is how the shipped eight-gadget family was found in the
first place, and it doubles as the recovery path should a stored gadget
ever fail validation.
"""

from __future__ import annotations

from functools import cmp_to_key
from itertools import combinations, permutations
from math import lcm

from .bipartite import BipartiteGraph, VertexSubset
from .gadgets import GadgetFamily, MarkedGadget, ratio_cmp
from .oracle import h_values

SEARCH_VERTEX_GUARD = 14


def _canonical(rows, b):
    """Minimal row-tuple over all column permutations (rows sorted)."""
    best = None
    cols = list(range(b))
    for perm in permutations(cols):
        permuted = []
        for mask in rows:
            out = 0
            for new, old in enumerate(perm):
                if mask >> old & 1:
                    out |= 1 << new
            permuted.append(out)
        permuted = tuple(sorted(permuted))
        if best is None or permuted < best:
            best = permuted
    return best


def _transpose(rows, a, b):
    cols = [0] * b
    for i, mask in enumerate(rows):
        for j in range(b):
            if mask >> j & 1:
                cols[j] |= 1 << i
    return tuple(cols)


def enumerate_bipartite_graphs(max_vertices: int, max_part: int = None):
    """All bipartite graphs without isolated vertices, up to part-internal
    permutations, oriented with |L| <= |R|.  Yields BipartiteGraph."""
    if max_vertices > SEARCH_VERTEX_GUARD:
        raise ValueError(f"search guarded at {SEARCH_VERTEX_GUARD} vertices")
    if max_part is None:
        max_part = max_vertices - 1
    for a in range(1, max_vertices // 2 + 1):
        for b in range(a, min(max_part, max_vertices - a) + 1):
            full = (1 << b) - 1
            for rows in _row_tuples(a, b):
                covered = 0
                for m in rows:
                    covered |= m
                if covered != full:
                    continue  # isolated right vertex
                if _canonical(rows, b) != rows:
                    continue
                if a == b and _canonical(_transpose(rows, a, b), b) < rows:
                    continue  # the flipped orientation is canonical
                yield BipartiteGraph(a, b, rows)


def _row_tuples(a, b):
    """Sorted a-tuples of non-zero b-bit masks (rows already in order)."""
    def rec(prefix, low):
        if len(prefix) == a:
            yield tuple(prefix)
            return
        for mask in range(low, 1 << b):
            prefix.append(mask)
            yield from rec(prefix, mask)
            prefix.pop()
    yield from rec([], 1)


def enumerate_marked_gadgets(max_vertices: int, max_part: int = None):
    """Stream every marked gadget on at most max_vertices vertices.

    Each canonical graph is emitted once per choice of (U1, U2), tagged
    with its exact oracle (h', h'') pair.
    """
    for g in enumerate_bipartite_graphs(max_vertices, max_part):
        left_sets = list(_subsets(g.left_size))
        right_sets = list(_subsets(g.right_size))
        for u1 in left_sets:
            for u2 in right_sets:
                s1 = VertexSubset.left(u1)
                s2 = VertexSubset.right(u2)
                hp, hpp = h_values(g, s1, s2)
                yield MarkedGadget(g, s1, s2, hp, hpp)


def _subsets(n):
    items = list(range(n))
    for size in range(n + 1):
        yield from (frozenset(c) for c in combinations(items, size))


# ---------------------------------------------------------------------------
# covering families

_LCM_CAP = 10 ** 6


def coverage_threshold(members, scan_to: int):
    """Largest integer not of the form h'*k + h'' (k >= 2) for any member,
    or None when no finite threshold exists.

    Finiteness certificate: every residue class modulo lcm{h'} must be hit
    by some member's progression; then every n past the scan window is
    covered with k >= 2 automatically.
    """
    if not members:
        return None
    mod = 1
    for m in members:
        mod = lcm(mod, m.h_prime)
        if mod > _LCM_CAP:
            return None
    for c in range(mod):
        if not any((c - m.h_dprime) % m.h_prime == 0 for m in members):
            return None
    horizon = max(scan_to, max(2 * m.h_prime + m.h_dprime for m in members) + mod)
    covered = bytearray(horizon + 1)
    for m in members:
        start = 2 * m.h_prime + m.h_dprime
        covered[start::m.h_prime] = b"\x01" * len(range(start, horizon + 1, m.h_prime))
    threshold = 0
    for n in range(1, horizon + 1):
        if not covered[n]:
            threshold = n
    return threshold


def find_covering_families(pool, n0_max: int):
    """Assemble minimal-gamma covering families from a gadget pool.

    Keeps the cheapest gadget per (h', h'') pair, adds gadgets in order of
    increasing nu/log2(h') until the progressions cover everything beyond a
    finite threshold at most n0_max, then prunes redundant members from the
    expensive end.  Returns the families found (possibly none), sorted by
    gamma.
    """
    best = {}
    for g in pool:
        if g.h_prime < 2:
            continue
        key = (g.h_prime, g.h_dprime)
        kept = best.get(key)
        if kept is None or g.num_vertices < kept.num_vertices:
            best[key] = g
    candidates = sorted(best.values(), key=cmp_to_key(ratio_cmp))
    scan_to = 18 * n0_max
    for end in range(1, len(candidates) + 1):
        subset = candidates[:end]
        threshold = coverage_threshold(subset, scan_to)
        if threshold is None or threshold > n0_max:
            continue
        pruned = list(subset)
        for member in reversed(subset):
            trial = [m for m in pruned if m is not member]
            t = coverage_threshold(trial, scan_to)
            if t is not None and t <= n0_max:
                pruned = trial
        n0 = coverage_threshold(pruned, scan_to)
        return [GadgetFamily(tuple(pruned), n0)]
    return []
