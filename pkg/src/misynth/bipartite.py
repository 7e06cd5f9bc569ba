"""Bipartite graph core: immutable two-part graphs and structural edit operations.

Bipartiteness is structural: a graph stores a left part, a right part and
cross edges only, so it can never contain a same-part edge.  Vertices are
addressed as (side, index) with dense indices; operations never renumber
existing vertices, they only append new ones.  Adjacency is kept as one
integer bitmask per left vertex (bits index the right part), which makes
the counting oracle and the large join constructions cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

LEFT = "left"
RIGHT = "right"


class GraphError(ValueError):
    """Raised for structurally invalid graphs, subsets or joins."""


@dataclass(frozen=True)
class BipartiteGraph:
    left_size: int
    right_size: int
    # left_adj[i] is the bitmask of right-neighbours of left vertex i
    left_adj: tuple[int, ...]

    def __post_init__(self):
        if self.left_size < 0 or self.right_size < 0:
            raise GraphError("negative part size")
        if len(self.left_adj) != self.left_size:
            raise GraphError("left_adj length does not match left_size")
        full = (1 << self.right_size) - 1
        for i, mask in enumerate(self.left_adj):
            if mask < 0 or mask & ~full:
                raise GraphError(f"left vertex {i} has neighbours outside the right part")

    @classmethod
    def from_edges(cls, left_size, right_size, edges):
        adj = [0] * left_size
        for l, r in edges:
            if not (0 <= l < left_size and 0 <= r < right_size):
                raise GraphError(f"edge ({l},{r}) out of range")
            adj[l] |= 1 << r
        return cls(left_size, right_size, tuple(adj))

    @property
    def num_vertices(self):
        return self.left_size + self.right_size

    @property
    def edge_count(self):
        return sum(m.bit_count() for m in self.left_adj)

    def edges(self):
        """All edges as (left, right) pairs in lexicographic order."""
        out = []
        for l, mask in enumerate(self.left_adj):
            while mask:
                low = mask & -mask
                out.append((l, low.bit_length() - 1))
                mask ^= low
        return out

    def right_adj(self):
        """Bitmask of left-neighbours per right vertex."""
        adj = [0] * self.right_size
        for l, mask in enumerate(self.left_adj):
            while mask:
                low = mask & -mask
                adj[low.bit_length() - 1] |= 1 << l
                mask ^= low
        return tuple(adj)

    def has_isolated_vertices(self):
        if any(m == 0 for m in self.left_adj):
            return True
        covered = 0
        for m in self.left_adj:
            covered |= m
        return covered != (1 << self.right_size) - 1

    def min_part(self):
        return min(self.left_size, self.right_size)


@dataclass(frozen=True)
class VertexSubset:
    """A set of vertex indices on one side of a bipartite graph."""

    side: str
    members: frozenset

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise GraphError(f"bad side {self.side!r}")
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def left(cls, members=()):
        return cls(LEFT, frozenset(members))

    @classmethod
    def right(cls, members=()):
        return cls(RIGHT, frozenset(members))

    @property
    def mask(self):
        m = 0
        for i in self.members:
            m |= 1 << i
        return m

    def check_against(self, g: BipartiteGraph):
        size = g.left_size if self.side == LEFT else g.right_size
        for i in self.members:
            if not 0 <= i < size:
                raise GraphError(f"subset member {i} outside the {self.side} part")


# ---------------------------------------------------------------------------
# builders


def empty_graph():
    return BipartiteGraph(0, 0, ())


def single_vertex():
    """K_1: one left vertex, empty right part."""
    return BipartiteGraph(1, 0, (0,))


def complete_bipartite(r, s):
    if r < 1 or s < 1:
        raise GraphError("complete_bipartite needs r, s >= 1")
    full = (1 << s) - 1
    return BipartiteGraph(r, s, (full,) * r)


def star(m):
    """K_{m,1}: m left vertices all joined to a single right vertex."""
    return complete_bipartite(m, 1)


def corona(r):
    """K_{r,r} minus a perfect matching; has exactly r + 2 maximal independent sets."""
    if r < 2:
        raise GraphError("corona needs r >= 2")
    full = (1 << r) - 1
    return BipartiteGraph(r, r, tuple(full & ~(1 << i) for i in range(r)))


def path(r):
    """P_r with path positions alternating left (even) / right (odd)."""
    if r < 1:
        raise GraphError("path needs r >= 1")
    left = (r + 1) // 2
    right = r // 2
    adj = [0] * left
    for i in range(left):
        if 2 * i + 1 < r:
            adj[i] |= 1 << i
        if i >= 1:
            adj[i] |= 1 << (i - 1)
    return BipartiteGraph(left, right, tuple(adj))


def matching(m):
    """m disjoint edges."""
    return BipartiteGraph(m, m, tuple(1 << i for i in range(m)))


# ---------------------------------------------------------------------------
# structural operations (all pure: inputs are never mutated)


def disjoint_union(a: BipartiteGraph, b: BipartiteGraph) -> BipartiteGraph:
    """Concatenate parts left-with-left and right-with-right; b's indices are
    offset by a's part sizes."""
    adj = list(a.left_adj)
    adj.extend(m << a.right_size for m in b.left_adj)
    return BipartiteGraph(a.left_size + b.left_size, a.right_size + b.right_size, tuple(adj))


def add_matching(g: BipartiteGraph, m: int) -> BipartiteGraph:
    """g plus m disjoint edges; multiplies the maximal-independent-set count by 2^m."""
    if m < 0:
        raise GraphError("matching size must be non-negative")
    if m == 0:
        return g
    return disjoint_union(g, matching(m))


def flip(g: BipartiteGraph) -> BipartiteGraph:
    """Swap the two parts."""
    return BipartiteGraph(g.right_size, g.left_size, g.right_adj())


def add_biclique(g: BipartiteGraph, left_members: Iterable[int], right_members: Iterable[int]) -> BipartiteGraph:
    """Add every edge between the named left vertices and right vertices."""
    rmask = 0
    for r in right_members:
        if not 0 <= r < g.right_size:
            raise GraphError(f"right index {r} out of range")
        rmask |= 1 << r
    adj = list(g.left_adj)
    for l in left_members:
        if not 0 <= l < g.left_size:
            raise GraphError(f"left index {l} out of range")
        adj[l] |= rmask
    return BipartiteGraph(g.left_size, g.right_size, tuple(adj))


def complete_join(a: BipartiteGraph, a_subset: VertexSubset,
                  b: BipartiteGraph, b_subset: VertexSubset) -> BipartiteGraph:
    """Disjoint union of a and b plus all edges between the two named subsets.

    The subsets must sit on opposite sides once the parts are concatenated
    (left of one graph against right of the other); a same-side pair would
    create a same-part edge and is rejected.
    """
    a_subset.check_against(a)
    b_subset.check_against(b)
    if a_subset.side == b_subset.side:
        raise GraphError("complete_join would create a same-part edge; flip one graph first")
    u = disjoint_union(a, b)
    if a_subset.side == LEFT:
        left = a_subset.members
        right = {a.right_size + r for r in b_subset.members}
    else:
        left = {a.left_size + l for l in b_subset.members}
        right = a_subset.members
    return add_biclique(u, left, right)


def delete_vertices(g: BipartiteGraph, left_remove=(), right_remove=()) -> BipartiteGraph:
    """Induced subgraph on the vertices outside the two removal sets.

    Remaining vertices are re-indexed densely in increasing order of their
    old indices.  Used by the oracle for the gadget parameter computations.
    """
    left_remove = set(left_remove)
    right_remove = set(right_remove)
    keep_right = [r for r in range(g.right_size) if r not in right_remove]
    rmap = {r: i for i, r in enumerate(keep_right)}
    adj = []
    for l in range(g.left_size):
        if l in left_remove:
            continue
        mask = g.left_adj[l]
        out = 0
        while mask:
            low = mask & -mask
            r = low.bit_length() - 1
            if r in rmap:
                out |= 1 << rmap[r]
            mask ^= low
        adj.append(out)
    return BipartiteGraph(len(adj), len(keep_right), tuple(adj))
