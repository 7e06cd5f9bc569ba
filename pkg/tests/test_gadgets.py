import pytest
from fractions import Fraction

from misynth.bipartite import VertexSubset, path
from misynth.gadgets import (DEFAULT_N0, GAMMA_BOUND, GadgetFamily,
                             GadgetValidationError, MarkedGadget,
                             family_from_json_dict, family_to_json_dict,
                             gadget_from_json_dict, gadget_to_json_dict,
                             load_base_table, load_gamma_family, ratio_below,
                             ratio_cmp, residues_covered, select_gadget)
from misynth.oracle import count_mis


@pytest.fixture(scope="module")
def family():
    return load_gamma_family()


def test_family_pairs(family):
    pairs = [(m.h_prime, m.h_dprime) for m in family.members]
    assert pairs == [(2, 0), (3, 0), (6, 1), (18, 5), (18, 7),
                     (18, 11), (18, 13), (18, 17)]
    assert family.n0 == DEFAULT_N0 == 52


def test_family_gamma_certificate(family):
    assert family.gamma < 2.88
    assert family.gamma_below(GAMMA_BOUND)
    # but not below a tighter bound: the 12-vertex gadgets sit at 12/log2(18)
    assert not family.gamma_below(Fraction(28, 10))


def test_residue_coverage(family):
    assert residues_covered(family, 18) == set(range(18))


def test_select_gadget_examples(family):
    gadget, k = select_gadget(family, 100)
    assert (gadget.h_prime, gadget.h_dprime, k) == (2, 0, 50)
    gadget, k = select_gadget(family, 75)
    assert (gadget.h_prime, gadget.h_dprime, k) == (3, 0, 25)
    gadget, k = select_gadget(family, 59)
    assert (gadget.h_prime, gadget.h_dprime, k) == (18, 5, 3)
    with pytest.raises(ValueError):
        select_gadget(family, 52)


def test_select_gadget_total_above_n0(family):
    for n in range(53, 2000):
        gadget, k = select_gadget(family, n)
        assert gadget.h_prime * k + gadget.h_dprime == n
        assert k >= 2


def test_validation_catches_wrong_parameters():
    bad = MarkedGadget(path(4), VertexSubset.left({1}), VertexSubset.right(), 5, 0)
    with pytest.raises(GadgetValidationError):
        bad.validate()
    with pytest.raises(GadgetValidationError):
        GadgetFamily((MarkedGadget(path(4), VertexSubset.left({0, 1}),
                                   VertexSubset.right(), 1, 2),), 52)


def test_ratio_comparison_exact():
    a = MarkedGadget(path(4), VertexSubset.left(), VertexSubset.right(), 3, 0)
    b = MarkedGadget(path(4), VertexSubset.left(), VertexSubset.right(), 2, 0)
    # 4/log2(3) < 4/log2(2)
    assert ratio_cmp(a, b) < 0 and ratio_cmp(b, a) > 0 and ratio_cmp(a, a) == 0
    assert ratio_below(4, 3, Fraction(3, 1))
    assert not ratio_below(4, 3, Fraction(5, 2))


def test_base_table_counts():
    base = load_base_table()
    assert base.n0 == 52
    for n in (1, 2, 3, 4, 17, 52):
        assert count_mis(base[n]) == n
    with pytest.raises(ValueError):
        load_base_table(n0=3)


def test_gadget_json_round_trip(family):
    for m in family.members:
        again = gadget_from_json_dict(gadget_to_json_dict(m))
        assert (again.h_prime, again.h_dprime) == (m.h_prime, m.h_dprime)
        assert again.graph == m.graph
    f2 = family_from_json_dict(family_to_json_dict(family))
    assert f2.n0 == family.n0
    assert len(f2.members) == len(family.members)


def test_gadget_json_rejects_corrupted(family):
    d = gadget_to_json_dict(family.members[2])
    d["h_prime"] = 7
    with pytest.raises(GadgetValidationError):
        gadget_from_json_dict(d)
