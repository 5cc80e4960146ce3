import pytest

from superstab.combinat import Permutation, Subset, all_permutations, all_subsets, enumerate_subsets
from superstab.envelope import (
    GKMClass,
    NoSolution,
    StabClass,
    find_representative,
    gkm_check,
    representative_matches,
    restrict_polynomial,
    stab,
    symmetric_in_t,
    triangularity_violations,
    verify_axioms,
)
from superstab.exactalg import Polynomial, Ring
from superstab.suite import THATONE_PRODUCT
from superstab.weightfn import WeightFunctionSpec
from tests.conftest import poly

ID2 = Permutation.identity(2)


def test_gkm_examples():
    ring = Ring.equivariant(2)
    assert gkm_check(GKMClass.from_tuple(2, 1, [poly("z2 - z1", ring), poly("0", ring)]))[0]
    ok, bad = gkm_check(GKMClass.from_tuple(2, 1, [poly("1", ring), poly("0", ring)]))
    assert not ok and bad == [(Subset(2, (1,)), Subset(2, (2,)))]


def test_stab_examples():
    ring = Ring.equivariant(2)
    c = stab("00", 2, 1, ID2, Subset(2, (1,)))
    assert [p for _, p in c.gkm.ordered()] == [poly("z2 - z1", ring), poly("0", ring)]
    for r in ("00", "10", "01", "11"):
        c = stab(r, 2, 1, Permutation((2, 1)), Subset(2, (1,)))
        assert [p for _, p in c.gkm.ordered()] == [poly("z1 - z2 + h", ring), poly("h", ring)]


def test_axioms_pass_and_fail():
    assert verify_axioms(stab("00", 2, 1, ID2, Subset(2, (1,)))).passed
    report = verify_axioms(stab("11", 2, 1, Permutation((2, 1)), Subset(2, (2,))))
    assert report.passed
    ring = Ring.equivariant(2)
    bogus = GKMClass.from_tuple(2, 1, [poly("1", ring), poly("1", ring)])
    spec = WeightFunctionSpec("00", 2, 1, ID2, Subset(2, (1,)))
    report = verify_axioms(StabClass(spec, bogus))
    assert not report["A0"].passed and not report["A1"].passed
    assert report.to_json()["A0"]["pass"] is False


def test_axioms_n3_exhaustive():
    for r in ("00", "10", "01", "11"):
        for sigma in all_permutations(3):
            for I in all_subsets(3):
                c = stab(r, 3, I.k, sigma, I)
                assert verify_axioms(c).passed
                assert gkm_check(c.gkm)[0]


def test_uniqueness_at_fixed_data():
    a = stab("01", 3, 1, Permutation((3, 1, 2)), Subset(3, (2,)))
    b = stab("01", 3, 1, Permutation((3, 1, 2)), Subset(3, (2,)))
    assert a.gkm == b.gkm


def test_representative_p1():
    c = stab("00", 2, 1, ID2, Subset(2, (1,))).gkm
    f = find_representative(c, 1)
    target = poly("z2 - t1", Ring.grassmann(1, 2))
    assert [restrict_polynomial(f, J) for J in enumerate_subsets(2, 1)] == [
        restrict_polynomial(target, J) for J in enumerate_subsets(2, 1)
    ]


def test_representative_degree_six_example():
    c = stab("01", 4, 1, Permutation.identity(4), Subset(4, (2,))).gkm
    f = find_representative(c, 6)
    assert f.is_homogeneous(6)
    assert representative_matches(f, c)
    witness = poly(THATONE_PRODUCT, Ring.grassmann(1, 4))
    assert representative_matches(witness, c)
    with pytest.raises(NoSolution):
        find_representative(c, 5)


def test_representative_symmetric_k2():
    c = stab("11", 3, 2, Permutation((2, 3, 1)), Subset(3, (1, 3))).gkm
    f = find_representative(c, 3)
    assert symmetric_in_t(f, 2)
    assert representative_matches(f, c)


def test_zero_class():
    ring = Ring.equivariant(2)
    zero = GKMClass.from_tuple(2, 1, [Polynomial(ring), Polynomial(ring)])
    assert find_representative(zero, 3).is_zero()


def test_json_round_trip():
    c = stab("10", 3, 2, Permutation((2, 1, 3)), Subset(3, (1, 2))).gkm
    assert GKMClass.from_json(c.to_json(), 3) == c


def test_triangularity_observed():
    # reported property; on n <= 3 no violations occur
    for r in ("00", "10", "01", "11"):
        for sigma in all_permutations(3):
            for I in all_subsets(3):
                assert triangularity_violations(r, 3, sigma, I) == []
