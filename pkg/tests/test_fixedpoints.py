import pytest

from superstab.combinat import Permutation, Subset, all_permutations, all_subsets
from superstab.exactalg import Ring
from superstab.fixedpoints import dimension_d, repelling_euler, split_by_sigma, tangent_weights
from tests.conftest import poly


def test_weight_counts():
    I = Subset(4, (1, 3))
    hor, ver = tangent_weights("00", 4, 2, I)
    assert len(hor) == len(ver) == 4
    assert len(tangent_weights("10", 4, 2, I)[1]) == 8
    assert len(tangent_weights("01", 4, 2, I)[1]) == 8
    assert len(tangent_weights("11", 4, 2, I)[1]) == 12


def test_neutral_weights_are_h():
    _, ver = tangent_weights("10", 2, 1, Subset(2, (1,)))
    assert [str(w) for w in ver] == ["h", "z1 - z2 + h"]
    att, rep, neu = split_by_sigma(ver, Permutation.identity(2))
    assert [str(w) for w in neu] == ["h"] and not rep


def test_repelling_count_is_d():
    for n in range(1, 5):
        for r in ("00", "10", "01", "11"):
            for sigma in all_permutations(n):
                for I in all_subsets(n):
                    hor, ver = tangent_weights(r, n, I.k, I)
                    count = len(split_by_sigma(hor, sigma)[1]) + len(split_by_sigma(ver, sigma)[1])
                    assert count == dimension_d(r, n, I.k)


def test_repelling_euler_p1():
    ring = Ring.equivariant(2)
    e_ver, e_hor = repelling_euler("00", 2, 1, Subset(2, (1,)), Permutation.identity(2), ring)
    assert e_ver == poly("1", ring) and e_hor == poly("z2 - z1", ring)


def test_dimension_errors():
    assert dimension_d("11", 5, 2) == 10
    with pytest.raises(ValueError):
        dimension_d("22", 2, 1)
    with pytest.raises(ValueError):
        dimension_d("00", 2, 3)
