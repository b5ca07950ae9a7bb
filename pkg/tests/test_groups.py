import pytest

from unitring.errors import RingValidationError
from unitring.groups import (
    SMALL_GROUP_IDS,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    group_invariants,
    metacyclic,
    small_group,
    symmetric,
)


def is_group_table(T):
    n = len(T)
    rng = range(n)
    if any(T[0][a] != a or T[a][0] != a for a in rng):
        return False
    if any(sorted(row) != list(rng) for row in T):
        return False
    return all(T[T[a][b]][c] == T[a][T[b][c]] for a in rng for b in rng for c in rng)


@pytest.mark.parametrize("key", SMALL_GROUP_IDS)
def test_small_groups_are_groups(key):
    T = small_group(*key)
    assert len(T) == key[0]
    assert is_group_table(T)
    assert not group_invariants(T)["abelian"]


def test_order_16_groups_are_pairwise_distinct():
    sigs = {}
    for key in SMALL_GROUP_IDS:
        if key[0] == 16:
            inv = group_invariants(small_group(*key))
            sigs[key] = (inv["center"], inv["center_exponent"], inv["squares"], tuple(inv["orders"].items()))
    assert len(set(sigs.values())) == len(sigs) == 9


@pytest.mark.parametrize(
    "key, center, orders",
    [
        ((16, 3), 4, {1: 1, 2: 7, 4: 8}),
        ((16, 4), 4, {1: 1, 2: 3, 4: 12}),
        ((16, 6), 4, {1: 1, 2: 3, 4: 4, 8: 8}),
        ((16, 7), 2, {1: 1, 2: 9, 4: 2, 8: 4}),
        ((16, 8), 2, {1: 1, 2: 5, 4: 6, 8: 4}),
        ((16, 9), 2, {1: 1, 2: 1, 4: 10, 8: 4}),
        ((16, 11), 4, {1: 1, 2: 11, 4: 4}),
        ((16, 12), 4, {1: 1, 2: 3, 4: 12}),
        ((16, 13), 4, {1: 1, 2: 7, 4: 8}),
    ],
)
def test_order_16_fixtures(key, center, orders):
    inv = group_invariants(small_group(*key))
    assert inv["center"] == center
    assert inv["orders"] == orders


def test_families():
    assert is_group_table(metacyclic(7, 3, 0, 2))
    assert group_invariants(dihedral(10))["involutions"] == 5
    assert group_invariants(dicyclic(12))["involutions"] == 1
    assert group_invariants(cyclic(6))["abelian"]
    assert len(elementary_abelian(3, 2)) == 9
    assert len(symmetric(4)) == 24 and len(alternating(4)) == 12
    assert is_group_table(direct_product(cyclic(2), symmetric(3)))
    with pytest.raises(RingValidationError):
        metacyclic(5, 2, 0, 2)
    with pytest.raises(RingValidationError):
        dihedral(7)
    with pytest.raises(RingValidationError):
        small_group(16, 1)
