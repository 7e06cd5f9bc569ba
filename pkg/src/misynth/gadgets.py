"""Curated gadget families for the attachment recursion.

A marked gadget is a bipartite graph with marked subsets U1 (left) and U2
(right).  Attaching it to a graph with n maximal independent sets yields
h'*n + h'' of them, where (h', h'') are derived from four MIS counts of the
gadget alone.  The shipped family of eight gadgets realises the pairs
(2,0), (3,0), (6,1), (18,5), (18,7), (18,11), (18,13), (18,17); their
arithmetic progressions h'*k + h'' with k >= 2 cover every integer above 52.

Every stored parameter is re-derived from the counting oracle at load time;
a transcription error in the built-in data is a hard failure, never a wrong
answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import log2

from .bipartite import (BipartiteGraph, GraphError, VertexSubset, complete_bipartite,
                        corona, path, single_vertex)
from .oracle import count_mis, h_values
from .serialize import from_json_dict, to_json_dict

DEFAULT_N0 = 52
GAMMA_BOUND = Fraction(72, 25)  # 2.88


class GadgetValidationError(ValueError):
    """A stored gadget's declared parameters disagree with the oracle."""


@dataclass(frozen=True)
class MarkedGadget:
    graph: BipartiteGraph
    u1: VertexSubset
    u2: VertexSubset
    h_prime: int
    h_dprime: int

    @property
    def num_vertices(self):
        return self.graph.num_vertices

    def validate(self, name="gadget"):
        if self.graph.has_isolated_vertices():
            raise GadgetValidationError(f"{name}: gadget has isolated vertices")
        pair = h_values(self.graph, self.u1, self.u2)
        if pair != (self.h_prime, self.h_dprime):
            raise GadgetValidationError(
                f"{name}: declared ({self.h_prime}, {self.h_dprime}) "
                f"but oracle computed {pair}")


def ratio_cmp(a: MarkedGadget, b: MarkedGadget) -> int:
    """Exact comparison of nu/log2(h') without floating point.

    nu_a/log2(ha) < nu_b/log2(hb)  iff  hb^nu_a < ha^nu_b  (h' >= 2).
    """
    lhs = b.h_prime ** a.num_vertices
    rhs = a.h_prime ** b.num_vertices
    return (lhs > rhs) - (lhs < rhs)


def ratio_below(nu: int, h_prime: int, bound: Fraction) -> bool:
    """Certified check nu/log2(h') < bound, by integer power comparison."""
    return (1 << (bound.denominator * nu)) < h_prime ** bound.numerator


@dataclass(frozen=True)
class GadgetFamily:
    members: tuple
    n0: int

    def __post_init__(self):
        for m in self.members:
            if m.h_prime < 2:
                raise GadgetValidationError("family member with h' < 2 cannot drive the recursion")

    @property
    def gamma(self) -> float:
        return max(m.num_vertices / log2(m.h_prime) for m in self.members)

    def gamma_below(self, bound: Fraction) -> bool:
        """Exact certificate that every member has nu/log2(h') < bound."""
        return all(ratio_below(m.num_vertices, m.h_prime, bound) for m in self.members)

    def sorted_by_ratio(self):
        # stable sort: ties keep list order
        return sorted(self.members, key=cmp_to_key(ratio_cmp))


def select_gadget(family: GadgetFamily, n: int):
    """Pick (gadget, k) with n = h'*k + h'' and k >= 2, minimising nu/log2(h').

    The recursion needs k >= 2 because no bipartite graph without isolated
    vertices has a single maximal independent set.
    """
    if n <= family.n0:
        raise ValueError(f"select_gadget needs n > {family.n0}")
    for m in family.sorted_by_ratio():
        rem = n - m.h_dprime
        if rem >= 2 * m.h_prime and rem % m.h_prime == 0:
            return m, rem // m.h_prime
    raise AssertionError(f"validated family failed to cover n = {n}")


# ---------------------------------------------------------------------------
# the built-in eight-gadget family

# (left_size, right_size, edges, U1, U2); the (h', h'') pair each entry must
# reproduce is recorded alongside and re-checked by the oracle at load time.
_GAMMA_DATA = (
    ((1, 1, ((0, 0),), (), ()), (2, 0)),
    ((2, 2, ((0, 0), (1, 0), (1, 1)), (), ()), (3, 0)),
    ((4, 3, ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)), (1,), ()), (6, 1)),
    ((6, 6, ((0, 0), (1, 0), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3),
             (4, 3), (4, 4), (5, 3), (5, 5)), (1,), ()), (18, 5)),
    ((6, 6, ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3), (3, 2),
             (3, 4), (4, 3), (4, 5), (5, 5)), (2,), ()), (18, 7)),
    ((6, 6, ((0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 2),
             (3, 4), (3, 5), (4, 4), (5, 5)), (1,), ()), (18, 11)),
    ((6, 6, ((0, 0), (1, 0), (1, 1), (2, 1), (3, 2), (3, 3), (4, 3),
             (4, 4), (5, 4), (5, 5)), (0,), (3,)), (18, 13)),
    ((6, 6, ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3), (2, 4),
             (3, 2), (4, 3), (5, 4), (5, 5)), (0,), (4,)), (18, 17)),
)


def residues_covered(family: GadgetFamily, modulus: int) -> set:
    """Residue classes mod `modulus` reachable as h'*k + h'' for some member."""
    covered = set()
    for m in family.members:
        for k in range(modulus):
            covered.add((m.h_prime * k + m.h_dprime) % modulus)
    return covered


def load_gamma_family(validate: bool = True) -> GadgetFamily:
    """The built-in eight-gadget family with n0 = 52.

    With k >= 2 the worst entry point is 18*2 + 17 = 53, so every n > 52 is
    reachable; the residue argument (even, multiples of 3, 1 mod 6, and
    {5, 11, 17} mod 18) covers all integers.
    """
    members = []
    for idx, ((ls, rs, edges, u1, u2), (hp, hpp)) in enumerate(_GAMMA_DATA):
        g = BipartiteGraph.from_edges(ls, rs, edges)
        gadget = MarkedGadget(g, VertexSubset.left(u1), VertexSubset.right(u2), hp, hpp)
        if validate:
            gadget.validate(f"gamma family member {idx} ({hp},{hpp})")
        members.append(gadget)
    family = GadgetFamily(tuple(members), DEFAULT_N0)
    if validate:
        if residues_covered(family, 18) != set(range(18)):
            raise GadgetValidationError("gamma family does not cover all residues mod 18")
        if not family.gamma_below(GAMMA_BOUND):
            raise GadgetValidationError("gamma family exceeds the 2.88 per-bit budget")
    return family


# ---------------------------------------------------------------------------
# base table


@dataclass(frozen=True)
class BaseTable:
    entries: dict
    n0: int

    def __getitem__(self, n: int) -> BipartiteGraph:
        return self.entries[n]


def load_base_table(n0: int = DEFAULT_N0, validate: bool = True) -> BaseTable:
    """Graphs realising every count in [1, n0] directly.

    1 -> K_1, 2 -> K_{1,1}, 3 -> P_4, and n in [4, n0] -> corona(n-2).
    """
    if n0 < 4:
        raise ValueError("base table needs n0 >= 4")
    entries = {1: single_vertex(), 2: complete_bipartite(1, 1), 3: path(4)}
    for n in range(4, n0 + 1):
        entries[n] = corona(n - 2)
    if validate:
        for n, g in entries.items():
            got = count_mis(g)
            if got != n:
                raise GadgetValidationError(f"base table entry {n} counts {got}")
            if n >= 2 and g.has_isolated_vertices():
                raise GadgetValidationError(f"base table entry {n} has isolated vertices")
    return BaseTable(entries, n0)


# ---------------------------------------------------------------------------
# JSON interchange (shared with the gadget-search module)


def gadget_to_json_dict(m: MarkedGadget) -> dict:
    return {"graph": to_json_dict(m.graph),
            "u1": sorted(m.u1.members), "u2": sorted(m.u2.members),
            "h_prime": m.h_prime, "h_dprime": m.h_dprime}


def gadget_from_json_dict(d: dict, validate: bool = True) -> MarkedGadget:
    try:
        gadget = MarkedGadget(from_json_dict(d["graph"]),
                              VertexSubset.left(int(i) for i in d["u1"]),
                              VertexSubset.right(int(i) for i in d["u2"]),
                              int(d["h_prime"]), int(d["h_dprime"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad gadget JSON: {exc}") from exc
    if validate:
        gadget.validate("imported gadget")
    return gadget


def family_to_json_dict(f: GadgetFamily) -> dict:
    return {"n0": f.n0, "gamma": f.gamma,
            "members": [gadget_to_json_dict(m) for m in f.members]}


def family_from_json_dict(d: dict, validate: bool = True) -> GadgetFamily:
    members = tuple(gadget_from_json_dict(m, validate) for m in d["members"])
    return GadgetFamily(members, int(d["n0"]))
