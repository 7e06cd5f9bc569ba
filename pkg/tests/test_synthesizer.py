import math
import random

import pytest

from misynth.oracle import count_mis
from misynth.synthesizer import (BinaryPattern, ceil_2log2, gadget_chain, log2_big,
                                 realization_size, realize, realize_pattern,
                                 sweep_vertex_counts, vertex_report)


def test_realize_exact_small_range():
    for n in range(1, 120):
        result = realize(n)
        assert result.target == n
        assert count_mis(result.graph) == n
        assert result.graph.num_vertices == realization_size(n)


def test_realize_rejects_nonpositive():
    with pytest.raises(ValueError):
        realize(0)
    with pytest.raises(ValueError):
        realize(-5)


def test_realize_deterministic():
    a = realize(987654)
    b = realize(987654)
    assert a.graph == b.graph
    assert a.ledger == b.ledger


def test_ledger_replays_to_target():
    result = realize(123456789)
    count = None
    for step in result.ledger:
        if step.kind == "base":
            count = step.params["n"]
        else:
            count = step.params["h_prime"] * count + step.params["h_dprime"]
        assert step.predicted_count == count
    assert count == result.target
    assert result.ledger[-1].vertex_count == result.graph.num_vertices


def test_gadget_chain_bottoms_out_in_base_table():
    base_n, chain = gadget_chain(10 ** 9)
    assert base_n <= 52
    value = base_n
    for gadget in reversed(chain):
        value = gadget.h_prime * value + gadget.h_dprime
    assert value == 10 ** 9


def test_certificate_bounds():
    for n in (1, 5, 53, 10 ** 6, 2 ** 100 + 7):
        result = realize(n)
        cert = result.certificate
        assert cert.vertices == result.graph.num_vertices
        assert cert.vertices <= cert.budget
        if n > 1:
            assert cert.vertices >= math.floor(math.log2(n))  # weak sanity floor


def test_log_helpers():
    assert log2_big(8) == 3.0
    big = 3 ** 500
    assert abs(log2_big(big) - 500 * math.log2(3)) < 1e-6
    for n in (1, 2, 3, 4, 100, 2 ** 64 - 1, 2 ** 64):
        assert ceil_2log2(n) == math.ceil(2 * math.log2(n)) if n > 1 else True
    assert ceil_2log2(1) == 0
    assert ceil_2log2(3) == 4  # 2*log2(3) = 3.17 rounds up


def test_sweep_matches_realize():
    nu = sweep_vertex_counts(5000)
    rng = random.Random(99)
    for n in [1, 2, 3, 52, 53, 54] + [rng.randint(55, 5000) for _ in range(40)]:
        assert nu[n] == realization_size(n)


def test_pattern_parsing():
    p = BinaryPattern.parse("101^3,01^5")
    assert p.blocks == (("101", 3), ("01", 5))
    assert p.expanded() == "101" * 3 + "01" * 5
    assert p.value() == int(p.expanded(), 2)
    assert BinaryPattern.parse("110").blocks == (("110", 1),)
    for bad in ("", "2^3", "01^2", "1^0", "1^", "1,,1"):
        with pytest.raises(ValueError):
            BinaryPattern.parse(bad)


def test_realize_pattern_small_oracle():
    cases = ["1^1", "10", "11^2", "1^3", "101^2", "1,0^4", "110^2,01^3",
             "1^2,001^2", "10^5", "1,0^3,11^2", "111^3"]
    for spec in cases:
        p = BinaryPattern.parse(spec)
        result = realize_pattern(p)
        assert result.target == p.value()
        assert count_mis(result.graph) == p.value()


def test_realize_pattern_matches_plain_realize_value():
    p = BinaryPattern.parse("1101^2")
    assert realize_pattern(p).target == realize(int("11011101", 2)).target


def test_vertex_report_fields():
    report = vertex_report(realize(1000))
    assert report["target_bits"] == 10
    assert report["vertices"] >= report["lower_bound"]
    assert report["vertices"] <= report["budget"]
    assert report["ratio"] == report["vertices"] / math.log2(1000)
