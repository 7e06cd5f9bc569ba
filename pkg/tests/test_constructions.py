"""Every construction operator's predicted count is checked against the
brute-force oracle on inputs small enough to count."""

import random

import pytest

from misynth.bipartite import (GraphError, VertexSubset, complete_bipartite, corona,
                               matching, path, star)
from misynth.constructions import (ConstructionStep, add_matching_step,
                                   append_periodic, attach_gadget, double_plus_one,
                                   mersenne_forest, multiply_shift_add, plus_two,
                                   staircase_count, staircase_graph,
                                   step_from_json_dict, sum_graphs)
from misynth.gadgets import MarkedGadget, load_gamma_family
from misynth.oracle import count_is, count_mis

from conftest import random_bipartite


def oracle_attach(g, gadget):
    out, step = attach_gadget(g, count_mis(g), gadget)
    assert count_mis(out) == step.predicted_count
    return out, step


def test_attach_gadget_against_oracle():
    family = load_gamma_family(validate=False)
    rng = random.Random(31)
    for _ in range(30):
        g = random_bipartite(rng, max_left=4, max_right=4)
        for gadget in family.members[:3]:
            out, step = oracle_attach(g, gadget)
            assert step.predicted_count == gadget.h_prime * count_mis(g) + gadget.h_dprime
            assert out.num_vertices == g.num_vertices + gadget.num_vertices


def test_attach_gadget_rejects_bad_inputs():
    gadget = load_gamma_family(validate=False).members[0]
    with pytest.raises(GraphError):
        attach_gadget(star(2), 1, gadget)  # ledger count below 2
    from misynth.bipartite import BipartiteGraph
    isolated = BipartiteGraph(2, 1, (1, 0))
    with pytest.raises(GraphError):
        attach_gadget(isolated, 2, gadget)


def test_small_operators():
    rng = random.Random(13)
    for _ in range(30):
        g = random_bipartite(rng)
        n = count_mis(g)
        out, step = double_plus_one(g, n)
        assert count_mis(out) == step.predicted_count == 2 * n + 1
        out, step = plus_two(g, n)
        assert count_mis(out) == step.predicted_count == n + 2
        out, step = add_matching_step(g, n, 3)
        assert count_mis(out) == step.predicted_count == 8 * n


def test_sum_graphs():
    rng = random.Random(17)
    for _ in range(25):
        g = random_bipartite(rng)
        h = random_bipartite(rng)
        out, step = sum_graphs(g, count_mis(g), h, count_mis(h))
        assert count_mis(out) == step.predicted_count == count_mis(g) + count_mis(h)
        assert out.num_vertices == g.num_vertices + h.num_vertices + 4


@pytest.mark.parametrize("s", [2, 3, 4])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_staircase_counts_small(s, t):
    g = staircase_graph(s, t)
    assert g.num_vertices == 2 * (s - 1) * (t + 1)
    assert count_mis(g) == staircase_count(s, t)


def test_staircase_rejects_degenerate():
    with pytest.raises(GraphError):
        staircase_graph(1, 3)
    with pytest.raises(GraphError):
        staircase_graph(3, 0)


@pytest.mark.parametrize("s,t", [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_multiply_shift_add_oracle(s, t):
    pool = [path(4), corona(2), matching(2), complete_bipartite(2, 2), star(3)]
    for g in pool[:3]:
        for h in pool[2:]:
            gc, hc = count_mis(g), count_mis(h)
            out, step = multiply_shift_add(g, gc, h, hc, s, t)
            multiplier = ((1 << (s * t)) - 1) // ((1 << t) - 1)
            expected = (gc << (s * t)) + multiplier * hc
            assert step.predicted_count == expected
            assert count_mis(out) == expected
            assert out.num_vertices <= g.num_vertices + h.num_vertices + 2 * s * (t + 1) + 3


def test_mersenne_forest_counts():
    for t in range(1, 5):
        g = mersenne_forest(t)
        assert g.num_vertices == 2 ** t + t - 1
        assert count_is(g) == 2 ** (2 ** t) - 1
    with pytest.raises(GraphError):
        mersenne_forest(0)


def _realize_small(n):
    from misynth.synthesizer import realize
    return realize(n).graph


@pytest.mark.parametrize("word,reps", [
    ("0", 3), ("00", 2), ("1", 1), ("01", 1), ("001", 1), ("101", 1),
    ("1", 4), ("10", 3), ("11", 2), ("011", 3), ("0101", 2),
])
def test_append_periodic_oracle(word, reps):
    g = path(4)  # count 3, binary 11
    out, step = append_periodic(g, 3, word, reps, _realize_small)
    expected = int("11" + word * reps, 2)
    assert step.predicted_count == expected
    assert count_mis(out) == expected


def test_append_periodic_rejects_bad_words():
    with pytest.raises(GraphError):
        append_periodic(path(4), 3, "", 1, _realize_small)
    with pytest.raises(GraphError):
        append_periodic(path(4), 3, "2", 1, _realize_small)
    with pytest.raises(GraphError):
        append_periodic(path(4), 3, "1", 0, _realize_small)
    with pytest.raises(GraphError):
        append_periodic(path(4), 1, "1", 1, _realize_small)


def test_step_json_round_trip():
    step = ConstructionStep("attach_gadget", {"h_prime": 18, "h_dprime": 5},
                            2 ** 200 + 5, 64)
    again = step_from_json_dict(step.to_json_dict())
    assert again == step
