from fractions import Fraction

import pytest

from dsjets.asymptotics import (
    DegreeClaimError,
    JetBundleSpec,
    _leading_from_values,
    character_sum,
    chern_form,
    chi_jets_exact,
    chi_jets_termwise,
    decomposition,
    difference_audit,
    leading_coefficient,
    leading_coefficient_poly_in_d,
    positivity_threshold,
)
from dsjets.intersection import ch_schur, chi_schur, chern_numbers_hypersurface_p4
from dsjets.poly import UsageError
from dsjets.reps import enumerate_ds3_dim3


def test_single_term_cases():
    assert chi_jets_exact(JetBundleSpec("ds", 3, degree=1), 1) == -1
    cn = chern_numbers_hypersurface_p4(9)
    assert chi_jets_exact(JetBundleSpec("ds", 2, degree=9), 2) == chi_schur((2, 0, 0), cn)
    assert len(decomposition("gg", 3, 3)) == 3


def test_term_count_matches_index_set():
    for m in (7, 20, 33):
        assert len(decomposition("ds", 3, m)) == len(enumerate_ds3_dim3(m))


@pytest.mark.parametrize("flavor,k", [("ds", 2), ("ds", 3), ("gg", 2), ("gg", 3)])
def test_summation_paths_agree(flavor, k):
    spec = JetBundleSpec(flavor, k, degree=11)
    for m in (0, 5, 13, 24):
        assert chi_jets_exact(spec, m) == chi_jets_termwise(spec, m)
        assert character_sum(flavor, k, m, "direct") == character_sum(flavor, k, m)


def test_fast_path_against_direct_for_ds3():
    for m in range(0, 40, 7):
        assert character_sum("ds", 3, m, "fast") == character_sum("ds", 3, m, "direct")


def test_no_fast_path_for_ds2():
    with pytest.raises(UsageError):
        character_sum("ds", 2, 4, "fast")


def test_ds2_leading_chern_form():
    assert chern_form("ds", 2) == (Fraction(-89, 1837080), Fraction(141, 1837080), Fraction(-52, 1837080))


def test_leading_coefficient_record():
    lead = leading_coefficient(JetBundleSpec("ds", 1, degree=7))
    assert lead.degree == 5
    assert lead.value == Fraction(5 * 7 * (3 * 7 - 7), 120)
    assert lead.residue_class_used != lead.second_residue_class or lead.period == 1


def test_termwise_leading_path():
    spec = JetBundleSpec("ds", 2, degree=10)
    assert leading_coefficient(spec, path="termwise").value == leading_coefficient(spec).value


def test_poly_in_d_ds1():
    assert leading_coefficient_poly_in_d("ds", 1) == (0, Fraction(-35, 120), Fraction(15, 120))
    assert leading_coefficient_poly_in_d("ds", 1, "log-p3") == (Fraction(-20, 120), Fraction(10, 120))


def test_degree_claim_failure_is_reported():
    values = [Fraction(m**3) for m in range(6)]
    with pytest.raises(DegreeClaimError):
        _leading_from_values(values, 2, 1, "cubic claimed quadratic")
    assert _leading_from_values(values, 3, 1, "cubic") == 1


def test_difference_audit():
    audit = difference_audit("gg", 2)
    assert audit["degree"] == 8 and audit["next_difference_vanishes"] and audit["residue_classes_agree"]


def test_thresholds():
    res = positivity_threshold("ds", 3)
    assert res.threshold == 43
    assert 42 not in res.positive and 43 in res.positive
    res = positivity_threshold("ds", 2)
    assert res.threshold is None and res.negative_tail
    assert not [d for d in res.positive if d >= 10]


def test_bad_bundle_spec():
    with pytest.raises(UsageError):
        JetBundleSpec("ds", 4)
    with pytest.raises(UsageError):
        JetBundleSpec("ds", 3, "p5")
    with pytest.raises(UsageError):
        chi_jets_exact(JetBundleSpec("ds", 3), 4)


def test_top_weight_of_large_signature():
    # m = 121 is one of the orders the finite differences use
    assert character_sum("ds", 3, 121) == character_sum("ds", 3, 121, "direct")
    assert ch_schur((3, 2, 1)).rank == 8
