"""Construction operators: graph transformers with predicted MIS counts.

Every operator returns the new graph together with a ledger step carrying
the algebraically predicted count (exact, arbitrary precision) and the new
vertex count.  Within oracle reach the predictions are verified exactly by
the test suite; beyond it the ledger is the certificate.

The core recurrence: attaching a marked gadget with parameters (h', h'')
to a graph with n maximal independent sets produces h'*n + h'' of them.
Everything else here is a packaged special case or combination of that
attachment, plus the staircase multiplier gadget which realises counts of
the form 2^{st}*a + ((2^{st}-1)/(2^t-1))*b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bipartite import (BipartiteGraph, GraphError, VertexSubset, add_biclique,
                        add_matching, disjoint_union, flip, path, star)
from .gadgets import MarkedGadget


@dataclass(frozen=True)
class ConstructionStep:
    kind: str
    params: dict
    predicted_count: int
    vertex_count: int

    def to_json_dict(self):
        return {"kind": self.kind, "params": self.params,
                "predicted_count": str(self.predicted_count),
                "vertex_count": self.vertex_count}


def step_from_json_dict(d: dict) -> ConstructionStep:
    return ConstructionStep(d["kind"], dict(d["params"]),
                            int(d["predicted_count"]), int(d["vertex_count"]))


def _require_usable(g: BipartiteGraph, op: str):
    if g.has_isolated_vertices():
        raise GraphError(f"{op}: input graph has isolated vertices")


# the two fixed P_4 gadgets: U1 = {central left vertex} gives (h', h'') = (2, 1),
# U1 = {the two non-adjacent left vertices} gives (1, 2)
_P4 = path(4)
_DOUBLE_PLUS_ONE_GADGET = MarkedGadget(_P4, VertexSubset.left({1}), VertexSubset.right(), 2, 1)
_PLUS_TWO_GADGET = MarkedGadget(_P4, VertexSubset.left({0, 1}), VertexSubset.right(), 1, 2)


def attach_gadget(g: BipartiteGraph, g_count: int, gadget: MarkedGadget):
    """Attach a marked gadget: U1 is joined to all of L_g and U2 to all of R_g.

    The gadget's parts land on the opposite sides of the result (its left
    part is appended to g's right part) so that the joins stay cross-part.
    g's vertex numbering is preserved.
    """
    _require_usable(g, "attach_gadget")
    if g_count < 2:
        raise GraphError("attach_gadget needs a ledger count of at least 2")
    u = disjoint_union(g, flip(gadget.graph))
    u = add_biclique(u, range(g.left_size),
                     (g.right_size + i for i in gadget.u1.members))
    u = add_biclique(u, (g.left_size + j for j in gadget.u2.members),
                     range(g.right_size))
    predicted = gadget.h_prime * g_count + gadget.h_dprime
    step = ConstructionStep(
        "attach_gadget",
        {"h_prime": gadget.h_prime, "h_dprime": gadget.h_dprime,
         "gadget_vertices": gadget.num_vertices},
        predicted, u.num_vertices)
    return u, step


def add_matching_step(g: BipartiteGraph, g_count: int, m: int):
    """Append m disjoint edges; multiplies the MIS count by 2^m."""
    out = add_matching(g, m)
    step = ConstructionStep("add_matching", {"m": m},
                            g_count << m, out.num_vertices)
    return out, step


def double_plus_one(g: BipartiteGraph, g_count: int):
    """n -> 2n + 1 at the cost of four vertices (P_4 attachment)."""
    _require_usable(g, "double_plus_one")
    out, _ = attach_gadget(g, g_count, _DOUBLE_PLUS_ONE_GADGET)
    step = ConstructionStep("double_plus_one", {}, 2 * g_count + 1, out.num_vertices)
    return out, step


def plus_two(g: BipartiteGraph, g_count: int):
    """n -> n + 2 at the cost of four vertices (P_4 attachment)."""
    _require_usable(g, "plus_two")
    out, _ = attach_gadget(g, g_count, _PLUS_TWO_GADGET)
    step = ConstructionStep("plus_two", {}, g_count + 2, out.num_vertices)
    return out, step


def sum_graphs(g: BipartiteGraph, g_count: int, h: BipartiteGraph, h_count: int):
    """n, m -> n + m using nu(g) + nu(h) + 4 vertices.

    Attaching h with both of its whole parts marked yields n + m - 2
    (the two whole-part sets of h are lost), then plus_two restores them.
    """
    _require_usable(g, "sum_graphs")
    _require_usable(h, "sum_graphs")
    if h.num_vertices == 0:
        raise GraphError("sum_graphs: second graph must be non-empty")
    marked = MarkedGadget(h, VertexSubset.left(range(h.left_size)),
                          VertexSubset.right(range(h.right_size)),
                          1, h_count - 2)
    mid, _ = attach_gadget(g, g_count, marked)
    out, _ = plus_two(mid, g_count + h_count - 2)
    step = ConstructionStep("sum_graphs", {}, g_count + h_count, out.num_vertices)
    return out, step


def staircase_graph(s: int, t: int) -> BipartiteGraph:
    """The grid-with-matching gadget on 2(s-1)(t+1) vertices whose MIS count
    is (2^{st} - 1) / (2^t - 1).

    Vertices u_{i,j} (left) and v_{i,j} (right) for 1 <= i <= s-1,
    1 <= j <= t+1; edges u_{i,j}v_{i,j} for j <= t plus u_{i,j}v_{k,t+1}
    for every i <= k and every j.
    """
    if s < 2:
        raise GraphError("staircase needs s >= 2")
    if t < 1:
        raise GraphError("staircase needs t >= 1")
    rows = s - 1
    cols = t + 1
    n = rows * cols
    adj = [0] * n

    def idx(i, j):  # i in [1, rows], j in [1, cols]
        return (i - 1) * cols + (j - 1)

    for i in range(1, rows + 1):
        tail = 0
        for k in range(i, rows + 1):
            tail |= 1 << idx(k, cols)
        for j in range(1, cols + 1):
            if j <= t:
                adj[idx(i, j)] |= 1 << idx(i, j)
            adj[idx(i, j)] |= tail
    return BipartiteGraph(n, n, tuple(adj))


def staircase_count(s: int, t: int) -> int:
    return ((1 << (s * t)) - 1) // ((1 << t) - 1)


def multiply_shift_add(g: BipartiteGraph, g_count: int,
                       h: BipartiteGraph, h_count: int, s: int, t: int):
    """n, m -> 2^{st} * n + ((2^{st}-1)/(2^t-1)) * m.

    For s = 1 the multiplier is 1, so a 2t-vertex matching on g followed by
    sum_graphs suffices.  For s >= 2 the full construction is built: an apex
    vertex, a t-edge matching, the staircase grid, and the complete joins
    wiring them to g and h; that yields the target minus 2, and plus_two
    finishes.  The vertex count never exceeds nu(g) + nu(h) + 2s(t+1) + 3.
    """
    _require_usable(g, "multiply_shift_add")
    _require_usable(h, "multiply_shift_add")
    if g.num_vertices == 0 or h.num_vertices == 0:
        raise GraphError("multiply_shift_add: both graphs must be non-empty")
    if s < 1 or t < 1:
        raise GraphError("multiply_shift_add needs s, t >= 1")
    multiplier = ((1 << (s * t)) - 1) // ((1 << t) - 1)
    predicted = (g_count << (s * t)) + multiplier * h_count
    if s == 1:
        gm, _ = add_matching_step(g, g_count, t)
        out, _ = sum_graphs(gm, g_count << t, h, h_count)
    else:
        core = _shift_add_core(g, h, s, t)
        out, _ = plus_two(core, predicted - 2)
    budget = g.num_vertices + h.num_vertices + 2 * s * (t + 1) + 3
    assert out.num_vertices <= budget, \
        f"multiply_shift_add used {out.num_vertices} vertices, budget {budget}"
    step = ConstructionStep("multiply_shift_add", {"s": s, "t": t},
                            predicted, out.num_vertices)
    return out, step


def _shift_add_core(g: BipartiteGraph, h: BipartiteGraph, s: int, t: int) -> BipartiteGraph:
    """The s >= 2 construction before the final plus_two."""
    gl, gr = g.left_size, g.right_size
    hl, hr = h.left_size, h.right_size
    rows, cols = s - 1, t + 1
    # left layout: L_g | L_h | apex | t matching tops | grid tops
    apex = gl + hl
    ubase = apex + 1
    ugrid = ubase + t
    nl = ugrid + rows * cols
    # right layout: R_g | R_h | t matching bottoms | grid bottoms
    vbase = gr + hr
    vgrid = vbase + t
    nr = vgrid + rows * cols

    def u(i, j):
        return ugrid + (i - 1) * cols + (j - 1)

    def v(i, j):
        return vgrid + (i - 1) * cols + (j - 1)

    mask_rg = (1 << gr) - 1
    mask_rh = ((1 << hr) - 1) << gr
    mask_vtilde = ((1 << t) - 1) << vbase

    adj = [0] * nl
    for l in range(gl):
        adj[l] = g.left_adj[l]
    for l in range(hl):
        adj[gl + l] = h.left_adj[l] << gr
    # complete joins between g and h, crosswise
    for l in range(gl):
        adj[l] |= mask_rh
    for l in range(gl, gl + hl):
        adj[l] |= mask_rg | mask_vtilde
    # apex dominates both right parts
    adj[apex] = mask_rg | mask_rh
    # matching tops: own bottom plus all of R_h
    for i in range(t):
        adj[ubase + i] = (1 << (vbase + i)) | mask_rh
    # grid
    mask_vlast = 0
    for i in range(1, rows + 1):
        mask_vlast |= 1 << v(i, cols)
    for i in range(1, rows + 1):
        tail = 0
        for k in range(i, rows + 1):
            tail |= 1 << v(k, cols)
        for j in range(1, cols + 1):
            if j <= t:
                adj[u(i, j)] |= 1 << v(i, j)
            adj[u(i, j)] |= tail
        # last-column grid tops also dominate R_g
        adj[u(i, cols)] |= mask_rg
    # L_g dominates every last-column grid bottom
    for l in range(gl):
        adj[l] |= mask_vlast
    return BipartiteGraph(nl, nr, tuple(adj))


def mersenne_forest(t: int) -> BipartiteGraph:
    """Disjoint union of the stars K_{2^j,1} for j < t.

    Has 2^t + t - 1 vertices and 2^{2^t} - 1 independent sets in total.
    """
    if t < 1:
        raise GraphError("mersenne_forest needs t >= 1")
    g = star(1)
    for j in range(1, t):
        g = disjoint_union(g, star(1 << j))
    return g


def _ceil_sqrt_ratio(q: int, p: int) -> int:
    """Smallest k with k*k*p >= q."""
    k = math.isqrt((q + p - 1) // p)
    while k * k * p < q:
        k += 1
    return k


def append_periodic(g: BipartiteGraph, g_count: int, word: str, reps: int, realize_fn):
    """Append `word` repeated `reps` times to the binary representation of the count.

    realize_fn(n) must return a bipartite graph without isolated vertices
    having exactly n maximal independent sets; it supplies the helper graphs
    whose counts spell the periodic word.  Case split:

    * all-zero word: a 2*p*reps-vertex matching (pure power-of-two shift);
    * single rep of 0...01: matching on 2(p-1) vertices, then double_plus_one;
    * single rep, general: realise the word's value, multiply_shift_add with
      s = 1, t = p;
    * reps >= 2: with k = max(ceil(sqrt(reps/p)), 2), realise the value of
      word^(k), multiply_shift_add with t = p*k and s = reps // k, then
      append the remaining reps % k repetitions the same way.

    The vertex growth stays within 2*p*reps + 20*(p + sqrt(p*reps)).
    """
    if not word or set(word) - {"0", "1"}:
        raise GraphError(f"bad binary word {word!r}")
    if reps < 1:
        raise GraphError("reps must be at least 1")
    if g_count < 2:
        raise GraphError("append_periodic needs an existing binary prefix (count >= 2)")
    _require_usable(g, "append_periodic")
    p = len(word)
    start_nu = g.num_vertices
    target = (g_count << (p * reps)) | int(word * reps, 2)

    if "1" not in word:
        out, _ = add_matching_step(g, g_count, p * reps)
    elif reps == 1 and int(word, 2) == 1:  # word is 0...01
        mid, _ = add_matching_step(g, g_count, p - 1)
        out, _ = double_plus_one(mid, g_count << (p - 1))
    elif reps == 1:
        value = int(word, 2)
        out, _ = multiply_shift_add(g, g_count, realize_fn(value), value, 1, p)
    else:
        k = max(_ceil_sqrt_ratio(reps, p), 2)
        r = reps % k
        value = int(word * k, 2)
        out, _ = multiply_shift_add(g, g_count, realize_fn(value), value,
                                    reps // k, p * k)
        if r:
            mid_count = (g_count << (p * (reps - r))) | int(word * (reps - r), 2)
            out, _ = append_periodic(out, mid_count, word, r, realize_fn)

    grown = out.num_vertices - start_nu
    budget = 2 * p * reps + 20 * (p + math.sqrt(p * reps))
    assert grown <= budget + 1e-9, \
        f"append_periodic grew by {grown} vertices, budget {budget:.1f}"
    step = ConstructionStep("append_periodic", {"word": word, "reps": reps},
                            target, out.num_vertices)
    return out, step
