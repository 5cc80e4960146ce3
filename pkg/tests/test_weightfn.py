import pytest

from superstab.combinat import Permutation, Subset, all_permutations, all_subsets, enumerate_subsets
from superstab.exactalg import Ring
from superstab.fixedpoints import dimension_d, euler_product, repelling_euler
from superstab.weightfn import (
    GuardViolation,
    build_U,
    check_recursion,
    club_weights,
    format_weight,
    restrict_terms,
    restrict_via_expansion,
    restriction,
    spade_weights,
    weight_function,
)
from tests.conftest import poly, rat

ID2 = Permutation.identity(2)
S = Permutation((2, 1))


def test_n2_text_forms():
    assert format_weight(weight_function("00", 2, ID2, Subset(2, (1,)))) == "z2 - t1"
    assert format_weight(weight_function("00", 2, ID2, Subset(2, (2,)))) == "t1 - z1 + h"
    assert format_weight(weight_function("00", 2, S, Subset(2, ()))) == "1"
    text = format_weight(weight_function("00", 2, ID2, Subset(2, (1, 2))))
    assert text == "Sym_2 ((t2 - z1 + h)*(z2 - t1))/((t2 - t1 + h)*(t2 - t1))"
    assert format_weight(weight_function("10", 2, ID2, Subset(2, (1, 2)))).endswith("= z2 - z1 + h")


def test_r01_and_r11_empty_set():
    ring = Ring.grassmann(0, 2)
    for r in ("01", "11"):
        assert weight_function(r, 2, ID2, Subset(2, ())).expand() == rat("z2 - z1 + h", ring)
        assert weight_function(r, 2, S, Subset(2, ())).expand() == rat("z1 - z2 + h", ring)


def test_homogeneous_degree():
    for r in ("00", "10", "01", "11"):
        for I in all_subsets(3):
            W = weight_function(r, 3, Permutation((2, 3, 1)), I).expand()
            assert W.num.is_homogeneous() and W.den.is_homogeneous()
            assert W.num.degree() - W.den.degree() == dimension_d(r, 3, I.k)


def test_restriction_examples():
    ring = Ring.equivariant(2)
    J1, J2 = Subset(2, (1,)), Subset(2, (2,))
    assert restriction("00", 2, ID2, J1, J1) == poly("z2 - z1", ring)
    assert restriction("00", 2, ID2, J1, J2).is_zero()
    assert restriction("11", 2, S, J1, J1) == poly("z1 - z2 + h", ring)


def test_two_paths_agree_n3():
    for r in ("00", "10", "01", "11"):
        for sigma in all_permutations(3):
            for I in all_subsets(3):
                for J in enumerate_subsets(3, I.k):
                    assert restriction(r, 3, sigma, I, J) == restrict_via_expansion(r, 3, sigma, I, J)


def test_expansion_guard():
    with pytest.raises(GuardViolation):
        restrict_via_expansion("00", 6, Permutation.identity(6), Subset(6, (1, 2, 3, 4, 5)), Subset(6, (1, 2, 3, 4, 5)))


def test_single_surviving_term_and_principal_formula():
    ring = Ring.equivariant(3)
    for r in ("00", "10", "01", "11"):
        for sigma in all_permutations(3):
            for I in all_subsets(3):
                terms = restrict_terms(weight_function(r, 3, sigma, I), I)
                assert sum(t is not None for t in terms) == 1
                e_ver, e_hor = repelling_euler(r, 3, I.k, I, sigma, ring)
                # the club product is the horizontal part, the spade product the vertical one
                assert euler_product(club_weights(3, sigma, I), ring) == e_hor
                assert euler_product(spade_weights(r, 3, sigma, I), ring) == e_ver
                assert restriction(r, 3, sigma, I, I) == e_ver * e_hor


def test_recursion_cases_n3():
    seen = set()
    for r in ("00", "10", "01", "11"):
        for sigma in all_permutations(3):
            for a in (1, 2):
                for I in all_subsets(3):
                    res = check_recursion(r, 3, sigma, a, I)
                    assert res.holds, res
                    seen.add(res.case)
    assert seen == {"mixed", "both-in", "both-out"}


def test_U_has_expected_denominators():
    U = build_U("00", 3, 2, Subset(3, (1, 3)))
    assert len(U.denominator_factors()) == 2
    assert build_U("10", 3, 1, Subset(3, (2,))).is_polynomial()
