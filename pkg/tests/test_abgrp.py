import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitring.abgrp import (
    AbHom,
    FinAbGroup,
    Lattice,
    LatticeQuotient,
    abelian_effective_presentation,
    from_relations,
    hnf_mod,
    invariant_factors,
    quotient,
    snf,
)
from unitring.errors import InfiniteGroup
from unitring.fpgrp import coset_enumeration_order
from unitring.verify import invariants_from_orders


def _det(A):
    return round(abs(np.linalg.det(np.array(A, dtype=float))))


def test_snf_examples():
    r = snf([[0]])
    assert r.diagonal == [0]
    assert snf([[2, 4], [6, 8]]).diagonal == [2, 4]
    assert snf(np.eye(3, dtype=int)).diagonal == [1, 1, 1]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_transform_identity(m, n, data):
    A = np.array(data.draw(st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m)), dtype=object)
    r = snf(A)
    assert np.array_equal(r.U.dot(A).dot(r.V), r.S)
    assert np.array_equal(r.V.dot(r.Vinv), np.eye(n, dtype=object))
    d = r.diagonal
    nz = [x for x in d if x]
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert all(x >= 0 for x in d)
    # off-diagonal entries vanish
    S = r.S.copy()
    for i in range(min(m, n)):
        S[i, i] = 0
    assert not S.any()


def test_from_relations_examples():
    G, _ = from_relations(1, [[2]])
    assert G.invariants == (2,)
    G, _ = from_relations(2, [[2, 0], [0, 3]])
    assert G.invariants == (6,)
    with pytest.raises(InfiniteGroup):
        from_relations(2, [[1, 0]])


def test_quotient_examples():
    assert quotient(FinAbGroup((4,)), [(2,)])[0].invariants == (2,)
    assert quotient(FinAbGroup((2, 2)), [(1, 1)])[0].invariants == (2,)
    assert quotient(FinAbGroup((6,)), [])[0].invariants == (6,)


def test_abelian_presentation_examples():
    P = abelian_effective_presentation(FinAbGroup((2,)))
    assert P.ngens == 1 and [r.to_json() for r in P.relators] == [[[1, 2]]]
    P = abelian_effective_presentation(FinAbGroup((2, 3)))
    assert P.ngens == 2 and len(P.relators) == 3
    assert coset_enumeration_order(P.fp) == 6
    P = abelian_effective_presentation(FinAbGroup(()))
    assert P.ngens == 0 and P.relators == []


def _brute_quotient_invariants(d, big_gens, small_gens):
    """Enumerate <big>/<small> inside prod Z/d_i."""
    def span(gens):
        S = {tuple(0 for _ in d)}
        frontier = list(S)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple((a + b) % m for a, b, m in zip(x, g, d))
                    if y not in S:
                        S.add(y)
                        nxt.append(y)
            frontier = nxt
        return S

    B, Sm = span(big_gens), span(small_gens)
    assert Sm <= B
    cosets, rep = {}, []
    for x in sorted(B):
        if x in cosets:
            continue
        idx = len(rep)
        rep.append(x)
        for s in Sm:
            cosets[tuple((a + b) % m for a, b, m in zip(x, s, d))] = idx
    orders = []
    for x in rep:
        k = 1
        while cosets[tuple((k * a) % m for a, m in zip(x, d))] != 0:
            k += 1
        orders.append(k)
    return invariants_from_orders(orders, len(rep))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_lattice_quotient_matches_enumeration(data):
    d = tuple(data.draw(st.lists(st.sampled_from([2, 3, 4, 6, 8, 9]), min_size=1, max_size=3)))
    vec = st.tuples(*[st.integers(0, m - 1) for m in d])
    big_gens = data.draw(st.lists(vec, min_size=0, max_size=3))
    coef = data.draw(st.lists(st.integers(0, 5), min_size=len(big_gens) * 2, max_size=len(big_gens) * 2))
    # small is generated by integer combinations of big's generators
    small_gens = []
    for t in range(2):
        v = [0] * len(d)
        for i, g in enumerate(big_gens):
            c = coef[t * len(big_gens) + i] if big_gens else 0
            v = [a + c * b for a, b in zip(v, g)]
        small_gens.append(tuple(a % m for a, m in zip(v, d)))
    big = Lattice.from_generators(d, big_gens)
    small = Lattice.from_generators(d, small_gens)
    q = LatticeQuotient(big, small)
    assert q.invariants == _brute_quotient_invariants(d, big_gens, small_gens)
    # proj is a homomorphism onto the invariants and lift is a section
    for g in big_gens:
        y = q.proj(g)
        assert q.proj(q.lift(y)) == tuple(y)
        assert big.contains(q.lift(y))


def test_lattice_quotient_of_proper_subgroup():
    # the subgroup <4> of Z/8 is cyclic of order 2
    q = LatticeQuotient(Lattice.from_generators((8,), [(4,)]), Lattice.from_generators((8,), []))
    assert q.invariants == (2,)
    q = LatticeQuotient(Lattice.from_generators((8, 4), [(2, 0), (0, 2)]), Lattice.from_generators((8, 4), []))
    assert q.invariants == (2, 4)


def test_hnf_mod_contains_generators():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(1, 5)
        M = rng.choice([4, 6, 12, 16, 27])
        rows = [[rng.randrange(M) for _ in range(n)] for _ in range(rng.randrange(0, 5))]
        H = hnf_mod(rows, n, M)
        L = Lattice((M,) * n, H)
        assert all(L.contains(r) for r in rows)
        assert all(H[i, i] > 0 and M % H[i, i] == 0 for i in range(n))
        assert all(H[i, j] == 0 for i in range(n) for j in range(i))


def test_invariant_factors_chain():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 2, 2]) == (2, 2, 4)
    assert invariant_factors([1, 1]) == ()
    assert invariant_factors([6, 4]) == (2, 12)


def test_hom_kernel():
    f = AbHom(FinAbGroup((8,)), FinAbGroup((4,)), [[2]])
    K = f.kernel()
    assert K.order == 4
    A = FinAbGroup((4, 6))
    f = AbHom(A, FinAbGroup((2, 3)), [[1, 0], [0, 1]])
    K = f.kernel()
    assert K.order == 4
    assert all(f(x) == (0, 0) for x in itertools.product(range(4), range(6)) if K.contains(x))
    assert sum(1 for x in itertools.product(range(4), range(6)) if f(x) == (0, 0)) == 4


def test_hom_preimage():
    A = FinAbGroup((4, 6))
    B = FinAbGroup((2, 6))
    f = AbHom(A, B, [[1, 3], [0, 2]])
    for y in itertools.product(range(2), range(6)):
        x = f.preimage(y)
        image = {f(x) for x in itertools.product(range(4), range(6))}
        if y in image:
            assert f(x) == y
        else:
            assert x is None


def test_group_basics():
    G = FinAbGroup((2, 4))
    assert G.order == 8 and G.exponent == 4
    assert G.element_order((1, 2)) == 2
    assert len(list(G.elements())) == 8
    assert math.prod(FinAbGroup((6, 4)).invariants) == 24
