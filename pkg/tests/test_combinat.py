from superstab.combinat import (
    Permutation,
    Subset,
    all_permutations,
    all_subsets,
    apply_transposition,
    compose,
    enumerate_subsets,
    gale_leq,
    gkm_pairs,
)


def test_subset_order_and_slots():
    keys = [S.key() for S in all_subsets(3)]
    assert keys == ["none", "1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"]
    I = Subset.of(3, [3, 1])
    assert I.tensor_slots() == (2, 1, 2)
    assert Subset.from_slots((2, 1, 2)) == I
    assert Subset.parse("none", 3).k == 0
    assert I.complement() == Subset(3, (2,))


def test_permutations():
    s = Permutation.parse("2,3,1")
    assert s(1) == 2 and s.inverse()(2) == 1
    assert compose(s, s.inverse()).is_identity()
    t = Permutation.transposition(3, 1, 2)
    # sigma s_{1,2} swaps the values sigma(1) and sigma(2)
    assert compose(s, t).images == (3, 2, 1)
    assert len(all_permutations(4)) == 24
    assert s.apply_to(Subset(3, (1, 3))) == Subset(3, (1, 2))


def test_transposition_on_subsets_and_gkm_pairs():
    assert apply_transposition(Subset(3, (1,)), 1, 2) == Subset(3, (2,))
    assert apply_transposition(Subset(3, (1, 2)), 1, 2) == Subset(3, (1, 2))
    # Gr(2,4): 6 points, each with 4 neighbours
    assert len(gkm_pairs(4, 2)) == 12
    assert len(enumerate_subsets(5, 2)) == 10


def test_gale_order():
    assert gale_leq(Subset(3, (1, 2)), Subset(3, (1, 3)))
    assert not gale_leq(Subset(3, (2, 3)), Subset(3, (1, 3)))
