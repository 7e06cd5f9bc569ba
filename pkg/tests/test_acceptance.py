"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Counting tolerances are exact everywhere; the only floating point appears in
the vertex-budget comparisons, whose slack (the additive constant 100 and the
ratio ceiling 2.2) dwarfs any rounding error.
"""

import math
import random

import pytest

from misynth.bipartite import (VertexSubset, complete_bipartite, corona,
                               delete_vertices, matching, path, star)
from misynth.constructions import (attach_gadget, mersenne_forest,
                                   multiply_shift_add, staircase_count,
                                   staircase_graph)
from misynth.gadgets import load_gamma_family
from misynth.oracle import count_is, count_mis, count_mis_hitting
from misynth.search import enumerate_marked_gadgets
from misynth.synthesizer import (BinaryPattern, NU0, realize, realize_pattern,
                                 sweep_vertex_counts)

from conftest import random_bipartite


@pytest.fixture
def announce(capsys, request):
    """Prints 'criterion N: PASS/FAIL' straight to the terminal."""
    label = request.node.name.replace("test_", "").replace("_", " ")
    outcome = {"ok": False}
    yield outcome
    status = "PASS" if outcome["ok"] else "FAIL"
    with capsys.disabled():
        print(f"[acceptance] {label}: {status}")


def test_criterion_01_gadget_table(announce):
    family = load_gamma_family(validate=True)  # oracle-recomputes every pair
    pairs = [(m.h_prime, m.h_dprime) for m in family.members]
    assert pairs == [(2, 0), (3, 0), (6, 1), (18, 5), (18, 7),
                     (18, 11), (18, 13), (18, 17)]
    assert family.gamma == max(12 / math.log2(18), 4 / math.log2(3), 7 / math.log2(6))
    assert family.gamma < 2.88
    announce["ok"] = True


def test_criterion_02_exactness_sweep(announce):
    for n in range(1, 301):
        result = realize(n)
        assert count_mis(result.graph) == n, f"realize({n}) miscounts"
    announce["ok"] = True


def test_criterion_03_ledger_sweep_to_million(announce):
    limit = 10 ** 6
    nu = sweep_vertex_counts(limit)
    assert nu[1] == 1
    for n in range(2, limit + 1):
        assert nu[n] <= 2.88 * math.log2(n) + 100, f"budget exceeded at n={n}"
    announce["ok"] = True


def test_criterion_04_attachment_formula(announce):
    rng = random.Random(404)
    checked = 0
    while checked < 200:
        g = random_bipartite(rng, max_left=4, max_right=4)
        h = random_bipartite(rng, max_left=4, max_right=4)
        u1 = VertexSubset.left(i for i in range(h.left_size) if rng.random() < 0.4)
        u2 = VertexSubset.right(i for i in range(h.right_size) if rng.random() < 0.4)
        n = count_mis(g)
        combined, _ = attach_gadget(g, n, _as_gadget(h, u1, u2))
        lhs = count_mis(combined)
        rhs = ((n - 2) * count_mis(delete_vertices(h, u1.members, u2.members))
               + count_mis(delete_vertices(h, u1.members, ()))
               + count_mis(delete_vertices(h, (), u2.members))
               + count_mis_hitting(h, u1, u2))
        assert lhs == rhs, f"four-term identity failed for sample {checked}"
        checked += 1
    announce["ok"] = True


def _as_gadget(h, u1, u2):
    from misynth.gadgets import MarkedGadget
    from misynth.oracle import h_values
    hp, hpp = h_values(h, u1, u2)
    return MarkedGadget(h, u1, u2, hp, hpp)


def test_criterion_05_multiplier_property(announce):
    pool = [path(2), path(4), corona(2), matching(2), complete_bipartite(2, 2),
            star(3), corona(3), complete_bipartite(3, 3)]
    assert all(g.num_vertices <= 8 for g in pool)
    for s in (1, 2, 3):
        for t in (1, 2, 3):
            for g in pool:
                for h in pool:
                    gc, hc = count_mis(g), count_mis(h)
                    out, step = multiply_shift_add(g, gc, h, hc, s, t)
                    mult = ((1 << (s * t)) - 1) // ((1 << t) - 1)
                    expected = (gc << (s * t)) + mult * hc
                    assert count_mis(out) == expected == step.predicted_count
                    budget = g.num_vertices + h.num_vertices + 2 * s * (t + 1) + 3
                    assert out.num_vertices <= budget
    announce["ok"] = True


def test_criterion_06_staircase_counts(announce):
    for s in range(2, 6):
        for t in range(1, 5):
            assert count_mis(staircase_graph(s, t)) == staircase_count(s, t)
    announce["ok"] = True


def test_criterion_07_pattern_mode(announce):
    rng = random.Random(707)

    # (a) 100 random patterns, expanded length <= 22 bits, oracle-exact
    for _ in range(100):
        blocks = []
        remaining = rng.randint(2, 22)
        first = True
        while remaining > 0:
            p = rng.randint(1, min(4, remaining))
            q = rng.randint(1, remaining // p)
            word = "".join(rng.choice("01") for _ in range(p))
            if first:
                word = "1" + word[1:]
                first = False
            blocks.append((word, q))
            remaining -= p * q
        pattern = BinaryPattern(tuple(blocks))
        result = realize_pattern(pattern)
        assert count_mis(result.graph) == pattern.value()

    # (b) 20 patterns with 64..512 expanded bits: ledger equality + overhead bound
    for _ in range(20):
        target_bits = rng.randint(64, 512)
        blocks = []
        remaining = target_bits
        first = True
        while remaining > 0:
            p = rng.randint(1, min(6, remaining))
            q = rng.randint(1, remaining // p)
            word = "".join(rng.choice("01") for _ in range(p))
            if first:
                word = "1" + word[1:]
                first = False
            blocks.append((word, q))
            remaining -= p * q
        pattern = BinaryPattern(tuple(blocks))
        result = realize_pattern(pattern)
        assert bin(result.target)[2:] == pattern.expanded()
        assert result.ledger[-1].predicted_count == pattern.value()
        overhead = sum(p + math.sqrt(p * q)
                       for p, q in ((len(w), r) for w, r in pattern.blocks))
        bound = 2 * pattern.expanded_length + 20 * overhead + NU0
        assert result.graph.num_vertices <= bound

    # (c) per-bit ratio <= 2.2 on a long-period family (p_i <= 4, q_i >= 64)
    for spec in ("1^4096", "10^2048", "110^1365", "1011^1024"):
        pattern = BinaryPattern.parse(spec)
        result = realize_pattern(pattern)
        ratio = result.graph.num_vertices / math.log2(result.target)
        assert ratio <= 2.2, f"{spec}: ratio {ratio:.3f}"
    announce["ok"] = True


def test_criterion_08_mersenne(announce):
    for t in range(1, 5):
        g = mersenne_forest(t)
        assert g.num_vertices == 2 ** t + t - 1
        assert count_is(g) == 2 ** (2 ** t) - 1
    announce["ok"] = True


def test_criterion_09_lower_bound(announce):
    rng = random.Random(909)
    for _ in range(200):
        n = rng.randint(1, 20000)
        g = realize(n).graph
        assert count_mis(g) <= 2 ** g.min_part()
    announce["ok"] = True


def test_criterion_10_search_rediscovery(announce):
    pairs = set()
    for gadget in enumerate_marked_gadgets(7):
        pairs.add((gadget.h_prime, gadget.h_dprime))
    for expected in ((2, 0), (3, 0), (6, 1)):
        assert expected in pairs, f"search did not rediscover {expected}"
    announce["ok"] = True
