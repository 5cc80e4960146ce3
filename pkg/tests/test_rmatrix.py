import pytest

from superstab.combinat import Permutation, Subset, all_permutations, all_subsets
from superstab.exactalg import Polynomial, RationalFunction, RFMatrix, Ring
from superstab.rmatrix import (
    ZETA_RING,
    check_matrix,
    closed_form_R,
    embed,
    geometric_R,
    ltc_check,
    one_plus_uP,
    preserves_sectors,
    stab_matrix,
    unitarity_check,
    yang_baxter_check,
    yangian_identification,
    yangian_identification_up_to_signs,
    yangian_R,
)
from superstab.suite import displayed_matrix
from superstab.weightfn import GuardViolation
from tests.conftest import poly, rat

VERSIONS = ("00", "10", "01", "11")


def test_closed_form_corners():
    one = RationalFunction.constant(ZETA_RING, 1)
    corner = rat("(h + zeta)/(h - zeta)", ZETA_RING)
    assert closed_form_R("00")[0, 0] == one and closed_form_R("00")[3, 3] == one
    assert closed_form_R("10")[0, 0] == one and closed_form_R("10")[3, 3] == corner
    assert closed_form_R("11")[0, 0] == corner and closed_form_R("11")[3, 3] == corner
    for r in VERSIONS:
        assert closed_form_R(r)[1, 2] == rat("h/(h - zeta)", ZETA_RING)


def test_check_matrix():
    Rc = check_matrix(closed_form_R("00"))
    assert Rc[1, 1] == rat("h/(h - zeta)", ZETA_RING)
    assert Rc[1, 2] == rat("zeta/(h - zeta)", ZETA_RING)
    for r in VERSIONS:
        assert check_matrix(check_matrix(closed_form_R(r))) == closed_form_R(r)
        R, Rc = yangian_R(r)
        assert check_matrix(R) == Rc
        assert check_matrix(Rc) == R


def test_yangian_matrices():
    u_ring = Ring(("u",))
    R, Rc = yangian_R("11")
    assert R[0, 0] == rat("1 - u", u_ring) and R[1, 2] == rat("-u", u_ring)
    assert Rc[1, 2] == rat("-1", u_ring)
    assert yangian_R("10")[1][3, 3] == rat("u - 1", u_ring)
    for r in VERSIONS:
        assert one_plus_uP(r) == yangian_R(r)[0].entries


def test_embed_basic():
    ring = Ring.equivariant(2)
    z = Polynomial.var(ring, "z1") - Polynomial.var(ring, "z2")
    R = closed_form_R("10")
    M = embed(R, 2, 1, 2, z)
    # subset order {}, {1}, {2}, {1,2} is v1v1, v2v1, v1v2, v2v2
    assert M[3, 3] == R.entries.substitute({"zeta": z, "h": Polynomial.var(ring, "h")}, ring)[3, 3]
    assert M[1, 2] == M[2, 1]
    I4 = RFMatrix.identity(ZETA_RING, 4)
    assert embed(I4, 3, 1, 3, Polynomial.var(Ring.equivariant(3), "z1")) == RFMatrix.identity(Ring.equivariant(3), 8)


def test_embed_n3_against_brute_force():
    ring = Ring.equivariant(3)
    arg = Polynomial.var(ring, "z1") - Polynomial.var(ring, "z3")
    R = closed_form_R("11")
    local = R.entries.substitute({"zeta": arg, "h": Polynomial.var(ring, "h")}, ring)
    M = embed(R, 3, 1, 3, arg)
    basis = all_subsets(3)
    for col, I in enumerate(basis):
        x = I.tensor_slots()
        for row, J in enumerate(basis):
            y = J.tensor_slots()
            want = local[(y[0] - 1) * 2 + y[2] - 1, (x[0] - 1) * 2 + x[2] - 1] if x[1] == y[1] else RationalFunction.constant(ring, 0)
            assert M[row, col] == want
    # equal first and third slots sit in the corners
    assert M[0, 0] == local[0, 0]
    assert M[basis.index(Subset(3, (1, 3))), basis.index(Subset(3, (1, 3)))] == local[3, 3]


def test_yang_baxter():
    for r in VERSIONS:
        assert yang_baxter_check(closed_form_R(r))
        assert yang_baxter_check(yangian_R(r)[0])
    bad = RFMatrix(ZETA_RING, [[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    assert not yang_baxter_check(bad)


def test_yangian_literal_spectral_parameter_fails():
    # 1 + uP with u = z_i - z_j is not a solution, even in the even case
    assert not yang_baxter_check(yangian_R("00")[0], literal=True)


def test_stab_matrix_examples():
    ring = Ring.equivariant(2)
    M = stab_matrix("00", 2, Permutation.identity(2))
    assert M[1, 1] == rat("z2 - z1", ring) and M[2, 1].is_zero()
    assert M[1, 2] == rat("h", ring) and M[2, 2] == rat("z2 - z1 + h", ring)
    assert M[0, 0] == rat("1", ring) and M[3, 3] == rat("1", ring)
    assert stab_matrix("01", 2, Permutation.identity(2))[0, 0] == rat("z2 - z1 + h", ring)
    with pytest.raises(GuardViolation):
        stab_matrix("00", 4, Permutation.identity(4))


def test_geometric_R_matches_display():
    for r in VERSIONS:
        G = geometric_R(r, 2, Permutation.identity(2), 1)
        assert G == displayed_matrix(r)
        assert preserves_sectors(G, 2)


def test_ltc_n3_sample_and_unitarity():
    for r in VERSIONS:
        assert ltc_check(r, 3, Permutation((2, 3, 1)), 2)[0]
        for sigma in all_permutations(2):
            assert unitarity_check(r, 2, sigma, 1)


def test_yangian_identification():
    assert yangian_identification("11")
    for r in ("00", "10", "01"):
        assert not yangian_identification(r)
        assert yangian_identification_up_to_signs(r)
