import pytest

from detlaw.errors import BadGroupTable
from detlaw.groups import (FiniteGroup, cyclic, dihedral, direct_product,
                           semidirect_cyclic_squared, symmetric, with_inertia)


def test_cyclic_structure():
    C6 = cyclic(6)
    assert C6.order == 6
    assert C6.element_order(1) == 6
    assert C6.element_order(2) == 3
    assert C6.element_order(3) == 2


def test_symmetric_3():
    S3 = symmetric(3)
    assert S3.order == 6
    orders = sorted(S3.element_order(g) for g in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]


def test_symmetric_4():
    S4 = symmetric(4)
    assert S4.order == 24
    from collections import Counter
    orders = Counter(S4.element_order(g) for g in range(24))
    assert orders == {1: 1, 2: 9, 3: 8, 4: 6}


def test_dihedral():
    D4 = dihedral(4)
    assert D4.order == 8
    from collections import Counter
    orders = Counter(D4.element_order(g) for g in range(8))
    assert orders == {1: 1, 2: 5, 4: 2}


def test_direct_product():
    G = direct_product(cyclic(2), cyclic(3))
    assert G.order == 6
    assert sorted(G.element_order(g) for g in range(6)) == [1, 2, 3, 3, 6, 6]


def test_semidirect_cyclic_squared():
    G = semidirect_cyclic_squared(5, 4, 2)
    assert G.order == 100
    # the C4 generator acts with order 4
    assert any(G.element_order(g) == 4 for g in range(G.order))


def test_group_axioms_validated():
    with pytest.raises(BadGroupTable):
        FiniteGroup([[0, 1], [1, 1]])  # not a Latin square group table


def test_bad_generators_rejected():
    C4 = cyclic(4)
    with pytest.raises(BadGroupTable):
        FiniteGroup(C4.table, generators=[2])  # generates only {0, 2}


def test_inertia_must_be_subgroup():
    S3 = symmetric(3)
    ok = with_inertia(S3, [0])
    assert ok.inertia == frozenset([0])
    with pytest.raises(BadGroupTable):
        with_inertia(S3, [0, 1, 2])  # three arbitrary elements


def test_generator_words_reach_everything():
    D4 = dihedral(4)
    words = D4.generator_words()
    assert len(words) == D4.order
    for g, word in enumerate(words):
        acc = D4.identity
        for pos in word:
            acc = D4.table[acc][D4.generators[pos]]
        assert acc == g


def test_inverse():
    S3 = symmetric(3)
    for g in range(6):
        assert S3.table[g][S3.inverse(g)] == S3.identity
