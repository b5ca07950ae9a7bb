import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus, gf
from unitring.errors import NotAGroup, RingValidationError, TooLarge
from unitring.finring import (
    FinRing,
    Ideal,
    assemble,
    brute_force_radical,
    brute_force_units,
    ideal_from,
    ideal_mul,
    ideal_pow_2k,
    make_group_ring,
    make_matrix_ring,
    make_poly_quotient,
    make_product,
    make_zmod,
    p_decomposition,
    quotient_ring,
    zero_ideal,
)
from unitring.groups import cyclic, symmetric

RINGS = corpus()
SMALL = [(label, R) for _, label, R in RINGS if R.order <= 4096]


def elements_of(I: Ideal):
    R = I.ring
    return {R.key(x) for x in R.elements() if I.contains(x)}


def test_constructor_examples():
    R = make_zmod(8)
    assert R.order == 8 and R.key(R.one) == (1,)
    F2C2 = make_group_ring(make_zmod(2), cyclic(2))
    x = F2C2.elem([1, 1])  # 1 + g
    assert F2C2.order == 4 and F2C2.is_zero(F2C2.mul(x, x))
    M = make_matrix_ring(make_zmod(2), 2)
    assert M.order == 16 and len(brute_force_units(M)) == 6


def test_is_unit_examples():
    Z8 = make_zmod(8)
    assert Z8.key(Z8.inverse(Z8.elem([3]))) == (3,)
    assert Z8.inverse(Z8.elem([2])) is None
    M = make_matrix_ring(make_zmod(2), 2)
    swap = M.elem([0, 1, 1, 0])
    assert M.eq(M.inverse(swap), swap)


def test_ideal_examples():
    Z8 = make_zmod(8)
    I = ideal_from(Z8, [Z8.elem([2])])
    assert elements_of(I) == {(0,), (2,), (4,), (6,)}
    assert elements_of(ideal_mul(I, I)) == {(0,), (4,)}
    assert ideal_pow_2k(I, 2).is_zero()


def test_quotient_ring_examples():
    Z8 = make_zmod(8)
    S, hom = quotient_ring(Z8, ideal_from(Z8, [Z8.elem([4])]))
    assert S.order == 4 and S.d == (4,)
    F2C2 = make_group_ring(make_zmod(2), cyclic(2))
    J = ideal_from(F2C2, [F2C2.elem([1, 1])])
    S, _ = quotient_ring(F2C2, J)
    assert S.order == 2
    S, hom = quotient_ring(Z8, zero_ideal(Z8))
    assert S.order == 8


def test_p_decomposition_examples():
    comps = p_decomposition(make_zmod(12))
    assert [(c.p, c.ring.order) for c in comps] == [(2, 4), (3, 3)]
    comps = p_decomposition(make_group_ring(make_zmod(2), cyclic(2)))
    assert [(c.p, c.ring.order) for c in comps] == [(2, 4)]
    assert sorted(c.ring.order for c in p_decomposition(make_zmod(30))) == [2, 3, 5]


def test_brute_force_examples():
    assert sorted(make_zmod(8).key(u) for u in brute_force_units(make_zmod(8))) == [(1,), (3,), (5,), (7,)]
    assert len(brute_force_units(make_group_ring(make_zmod(2), cyclic(3)))) == 3
    assert elements_of(brute_force_radical(make_zmod(4))) == {(0,), (2,)}
    assert brute_force_radical(make_matrix_ring(make_zmod(2), 2)).is_zero()
    F2C2 = make_group_ring(make_zmod(2), cyclic(2))
    assert elements_of(brute_force_radical(F2C2)) == {(0, 0), (1, 1)}


def test_oracle_guards():
    with pytest.raises(TooLarge):
        brute_force_units(make_zmod(2**17))
    with pytest.raises(TooLarge):
        brute_force_radical(make_zmod(2**13))


@pytest.mark.parametrize("label, R", SMALL[::3], ids=[label for label, _ in SMALL[::3]])
def test_ring_axioms_on_samples(label, R):
    rng = random.Random(7)
    for _ in range(20):
        a, b, c = R.random(rng), R.random(rng), R.random(rng)
        assert R.eq(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)))
        assert R.eq(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)))
        assert R.eq(R.mul(R.add(a, b), c), R.add(R.mul(a, c), R.mul(b, c)))
        assert R.eq(R.mul(R.one, a), a) and R.eq(R.mul(a, R.one), a)
        assert R.eq(R.mul(a, b), b @ R.left_matrix(a) % R._dmod)
        assert R.eq(R.mul(a, b), a @ R.right_matrix(b) % R._dmod)


@pytest.mark.parametrize("label, R", SMALL[::4], ids=[label for label, _ in SMALL[::4]])
def test_inverse_is_two_sided(label, R):
    rng = random.Random(1)
    for _ in range(10):
        u = R.random_unit(rng)
        v = R.inverse(u)
        assert R.eq(R.mul(u, v), R.one) and R.eq(R.mul(v, u), R.one)


@pytest.mark.parametrize("label, R", [x for x in SMALL if len(set(x[1].d)) > 0][::5])
def test_p_decomposition_reassembles(label, R):
    comps = p_decomposition(R)
    rng = random.Random(2)
    for _ in range(10):
        x = R.random(rng)
        parts = [c.hom(x) for c in comps]
        assert R.eq(assemble(R, comps, parts), x)
        y = R.random(rng)
        for c in comps:
            S = c.ring
            assert S.eq(c.hom(R.mul(x, y)), S.mul(c.hom(x), c.hom(y)))


def test_quotient_ring_is_a_ring_hom():
    R = make_group_ring(make_zmod(4), symmetric(3))
    I = ideal_from(R, [R.scale(2, R.one)])
    S, hom = quotient_ring(R, I)
    assert S.order == R.order // I.order
    assert hom.check(random.Random(0))
    rng = random.Random(3)
    for _ in range(10):
        y = S.random(rng)
        assert S.eq(hom(hom.preimage(y)), y)


def test_invalid_rings_rejected():
    with pytest.raises(RingValidationError):
        make_zmod(0)
    with pytest.raises(NotAGroup):
        make_group_ring(make_zmod(2), [[0, 1], [0, 1]])
    with pytest.raises(RingValidationError):
        make_poly_quotient(4, [1, 1, 2])
    # F_4 on the basis 1, x with x^2 = x + 1, then a corrupted table
    T = np.zeros((2, 2, 2), dtype=np.int64)
    T[0, 0, 0] = T[0, 1, 1] = T[1, 0, 1] = 1
    T[1, 1, 0] = 1
    T[1, 1, 1] = 1
    FinRing((2, 2), T, [1, 0])  # F_4 is fine
    T2 = T.copy()
    T2[1, 1] = [0, 0]
    T2[1, 0] = [1, 0]
    with pytest.raises(RingValidationError):
        FinRing((2, 2), T2, [1, 0])


def test_product_and_field_rings():
    R = make_product(make_zmod(3), gf(4))
    assert R.order == 12 and len(brute_force_units(R)) == 6
    k = gf(9)
    assert len(brute_force_units(k)) == 8


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 60), st.integers(0, 10**6))
def test_zmod_units_count(n, seed):
    R = make_zmod(n)
    import math

    assert len(brute_force_units(R)) == sum(1 for k in range(n) if math.gcd(k, n) == 1)
    rng = random.Random(seed)
    x = R.random(rng)
    assert (R.inverse(x) is not None) == (math.gcd(int(x[0]), n) == 1)
