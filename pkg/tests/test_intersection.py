from fractions import Fraction

import pytest

from dsjets.intersection import (
    C1,
    C2,
    ChowElement,
    ch_det_power,
    ch_schur,
    ch_schur_weights,
    ch_sym_direct,
    ch_sym_truncated,
    chern_numbers_explicit,
    chern_numbers_hypersurface_p4,
    chern_numbers_log_p3,
    chi,
    chi_p3_bundle,
    chi_p3_line_bundle,
    chi_schur,
    chi_structure_sheaf_surface,
    evaluate_character_polynomial,
    gt_weights,
    schur_character_polynomials,
    todd,
)
from dsjets.poly import UsageError
from dsjets.reps import weyl_dim


def sigs(top):
    for a in range(top + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                yield (a, b, c)


def test_truncation():
    assert C1 * C1 * C1 * C1 == ChowElement.zero()
    assert (C1 * C2)["c1c2"] == 1


def test_hypersurface_chern_numbers():
    assert chern_numbers_hypersurface_p4(1).as_tuple() == (64, 24, 4)
    assert chern_numbers_hypersurface_p4(6).as_tuple() == (-6, -96, -516)
    with pytest.raises(UsageError):
        chern_numbers_hypersurface_p4(0)


def test_log_chern_numbers():
    assert chern_numbers_log_p3(0).as_tuple() == (64, 24, 4)
    assert chern_numbers_log_p3(4).as_tuple() == (0, 0, -20)


def test_todd_genus_of_p3_and_quintic():
    assert chi(ChowElement.scalar(Fraction(1)), chern_numbers_hypersurface_p4(1)) == 1
    # a quintic threefold has c1 = 0, so chi(O) = c1c2/24 = 0
    assert chi(ChowElement.scalar(Fraction(1)), chern_numbers_hypersurface_p4(5)) == 0
    assert todd()["c1c2"] == Fraction(1, 24)


def test_cotangent_of_p3():
    p3 = chern_numbers_hypersurface_p4(1)
    assert chi_schur((1, 0, 0), p3) == -1
    assert chi_schur((1, 0, 0), chern_numbers_log_p3(0)) == -1
    assert chi_p3_bundle(-4, 6, -4, 3) == -1
    # canonical bundle of P^3 is Gamma^(1,1,1) and also O(-4)
    assert chi_schur((1, 1, 1), p3) == chi_p3_line_bundle(-4) == -1


def test_structure_sheaf_of_surfaces():
    assert [chi_structure_sheaf_surface(d) for d in range(1, 6)] == [1, 1, 1, 2, 5]
    for d in range(1, 21):
        assert chi_structure_sheaf_surface(d) == Fraction(d**3, 6) - d * d + Fraction(11 * d, 6)


def test_symmetric_powers_interpolated_vs_direct():
    for r in range(15):
        assert ch_sym_truncated(r) == ch_sym_direct(r)
    assert ch_sym_truncated(-1) == ChowElement.zero()


def test_jacobi_trudi_matches_weights():
    for s in sigs(5):
        assert ch_schur(s) == ch_schur_weights(s), s
        assert ch_schur(s).rank == weyl_dim(s)


def test_gelfand_tsetlin_count():
    for s in sigs(6):
        assert len(gt_weights(s)) == weyl_dim(s)


def test_determinant_twist():
    for l in range(4):
        assert ch_schur((l, l, l)) == ch_det_power(l)


def test_symbolic_character_polynomial():
    chp = schur_character_polynomials()
    for s in sigs(6):
        assert evaluate_character_polynomial(chp, s) == ch_schur(s)


def test_rank_two_signature_rejected():
    with pytest.raises(UsageError):
        ch_schur((2, 1))


def test_explicit_geometry_pairing():
    cn = chern_numbers_explicit(2, 3, 5)
    assert cn.top(C1 * C2) == 3
    assert chi(ChowElement.scalar(Fraction(1)), cn) == Fraction(3, 24)
