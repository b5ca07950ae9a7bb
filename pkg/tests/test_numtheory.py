import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitring.ffield import (
    FiniteField,
    conway_like_field,
    discrete_log,
    element_order,
    factor_poly,
    is_irreducible,
    pmul,
    poly,
    primitive_root,
)
from unitring.numtheory import crt, factor, is_prime, pohlig_hellman, totient


def trial_division(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def brute_totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@pytest.mark.parametrize("n, expected", [(1, {}), (12, {2: 2, 3: 1}), (561, {3: 1, 11: 1, 17: 1})])
def test_factor_examples(n, expected):
    assert factor(n) == expected


@pytest.mark.parametrize("n, expected", [(2, True), (1, False), (2**31 - 1, True), (0, False), (561, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_factor_large_semiprime():
    p, q = 1_000_003, 998_244_353
    assert factor(p * q) == {p: 1, q: 1}
    assert factor(2**61 - 1) == {2**61 - 1: 1}


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**7))
def test_factor_matches_trial_division(n):
    assert factor(n) == trial_division(n)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=3000))
def test_totient_matches_count(n):
    assert totient(n) == brute_totient(n)


def test_is_prime_agrees_with_sieve():
    sieve = [True] * 5000
    sieve[0] = sieve[1] = False
    for i in range(2, 5000):
        if sieve[i]:
            for j in range(i * i, 5000, i):
                sieve[j] = False
    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if sieve[n]]


def test_crt():
    x = crt([2, 3, 1], [3, 5, 7])
    assert x % 3 == 2 and x % 5 == 3 and x % 7 == 1


def test_pohlig_hellman_mod_prime():
    p = 1_000_003
    g = 2
    rng = random.Random(5)
    order = p - 1
    for _ in range(20):
        e = rng.randrange(order)
        t = pow(g, e, p)
        x = pohlig_hellman(g, t, order, lambda a, b: a * b % p, lambda a: pow(a, -1, p), 1)
        assert pow(g, x, p) == t


# -- finite fields ------------------------------------------------------------

def test_primitive_root_examples():
    assert primitive_root(FiniteField(2)) == FiniteField(2).one
    assert primitive_root(FiniteField(5)) == FiniteField(5).elem(2)
    F4 = FiniteField(2, [1, 1, 1])
    a = primitive_root(F4)
    assert element_order(a) == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 128, 243])
def test_primitive_root_has_full_order(q):
    k = conway_like_field(q)
    g = primitive_root(k)
    assert element_order(g) == q - 1
    if q <= 128:
        seen, x = set(), k.one
        for _ in range(q - 1):
            seen.add(x.code)
            x = x * g
        assert len(seen) == q - 1


@pytest.mark.parametrize("p, base, target, expected", [(11, 2, 1, 0), (7, 3, 6, 3), (5, 2, 4, 2)])
def test_discrete_log_examples(p, base, target, expected):
    k = FiniteField(p)
    assert discrete_log(k, k.elem(base), k.elem(target)) == expected


@pytest.mark.parametrize("q", [9, 16, 49, 256, 3**5])
def test_discrete_log_roundtrip(q):
    k = conway_like_field(q)
    g = primitive_root(k)
    rng = random.Random(q)
    for _ in range(25):
        e = rng.randrange(q - 1)
        assert discrete_log(k, g, g**e) == e


def _as_ints(factors):
    return sorted(([c.code for c in f], m) for f, m in factors)


def test_factor_poly_examples():
    F2, F3 = FiniteField(2), FiniteField(3)
    assert _as_ints(factor_poly(poly(F2, [0, 1, 1]))) == [([0, 1], 1), ([1, 1], 1)]
    assert _as_ints(factor_poly(poly(F2, [1, 0, 0, 1]))) == [([1, 1], 1), ([1, 1, 1], 1)]
    assert _as_ints(factor_poly(poly(F3, [2, 0, 1]))) == [([1, 1], 1), ([2, 1], 1)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=2, max_size=9))
def test_factor_poly_product_reconstructs(p, coeffs):
    k = FiniteField(p)
    f = poly(k, coeffs[:-1] + [1])
    if len(f) < 2:
        return
    prod = poly(k, [1])
    for g, m in factor_poly(f):
        assert g[-1] == k.one and is_irreducible(g)
        for _ in range(m):
            prod = pmul(prod, g)
    assert [c.code for c in prod] == [c.code for c in f]


def test_field_axioms_small():
    k = FiniteField(3, [2, 2, 1])  # x^2 + 2x + 2 is irreducible over F_3
    elems = list(k.elements())
    assert len(elems) == 9
    for a in elems:
        if a != k.zero:
            assert a * a.inverse() == k.one
    for a in elems[:4]:
        for b in elems:
            for c in elems[:3]:
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, [1, 0, 1])
