import random

import pytest

from unitring.abgrp import FinAbGroup
from unitring.errors import Exhausted, IndexOutOfRange, InfiniteAbelianization, NotExact
from unitring.fpgrp import (
    AbelianBlackBox,
    BlackBoxGroup,
    EffectivePresentation,
    FpGroup,
    GroupMap,
    Word,
    abelianized_invariants,
    chain_extensions,
    coset_enumeration_order,
    direct_product_presentation,
    extend_presentation,
    orbit_closure,
    word_eval,
)


class ModUnits(BlackBoxGroup):
    def __init__(self, n):
        self.n = n

    def mul(self, a, b):
        return a * b % self.n

    def inv(self, a):
        return pow(a, -1, self.n)

    @property
    def one(self):
        return 1 % self.n


def cyclic_presentation(G, g, order):
    logs = {}
    x = G.one
    for k in range(order):
        logs[G.key(x)] = k
        x = G.mul(x, g)
    return EffectivePresentation(
        G, FpGroup(1, [Word.letter(1, order)]), [g], lambda u: Word.letter(1, logs[G.key(u)]),
        lambda w: word_eval(G, w, [g]),
    )


def identity_map(G, H):
    return GroupMap(G, H, lambda x: x, lambda x: x)


def c2_quotient(G, kernel, lift):
    H = AbelianBlackBox(FinAbGroup((2,)))
    pi = GroupMap(G, H, lambda x: (0,) if x in kernel else (1,), lambda y: lift if y[0] % 2 else G.one)
    return cyclic_presentation(H, (1,), 2), pi


def test_word_free_reduction_and_eval():
    assert Word([(1, 2), (1, -2)]) == Word()
    assert Word([(1, 1), (2, 1), (2, -1), (1, 2)]) == Word.letter(1, 3)
    assert (Word.letter(1) * Word.letter(2)).inverse() == Word([(2, -1), (1, -1)])
    assert Word.letter(2, 3) ** -2 == Word.letter(2, -6)
    G = ModUnits(7)
    assert word_eval(G, Word([(1, 2), (2, -1)]), [3, 2]) == 9 * 4 % 7
    assert word_eval(G, Word(), [3]) == 1
    with pytest.raises(IndexOutOfRange):
        word_eval(G, Word.letter(2), [3])
    with pytest.raises(IndexOutOfRange):
        Word([(0, 1)])


def test_word_and_fpgroup_json_roundtrip():
    P = FpGroup(2, [Word.letter(1, 2), Word.commutator(1, 2), Word([(2, -3), (1, 1)])])
    assert FpGroup.from_json(P.to_json()) == P
    with pytest.raises(IndexOutOfRange):
        FpGroup(1, [Word.letter(2)])


def test_extension_of_units_mod_5():
    G = ModUnits(5)
    Pn = cyclic_presentation(G, 4, 2)
    Ph, pi = c2_quotient(G, {1, 4}, 2)
    P = extend_presentation(Pn, Ph, G, identity_map(G, G), pi)
    assert P.ngens == 2
    assert coset_enumeration_order(P.fp) == 4
    assert all(G.is_one(P.exp(r)) for r in P.relators)
    for u in range(1, 5):
        assert P.exp(P.dlog(u)) == u
    assert [P.exp(w) for w in P.dlog_many([1, 2, 3, 4])] == [1, 2, 3, 4]
    assert len(P.relators) <= P.trace["relator_bound"]


def test_extension_of_units_mod_8():
    G = ModUnits(8)
    Pn = cyclic_presentation(G, 3, 2)
    Ph, pi = c2_quotient(G, {1, 3}, 5)
    P = extend_presentation(Pn, Ph, G, identity_map(G, G), pi)
    assert P.ngens == 2
    assert coset_enumeration_order(P.fp) == 4
    inv, _ = abelianized_invariants(P.fp)
    assert inv.invariants == (2, 2)
    assert all(P.exp(P.dlog(u)) == u for u in (1, 3, 5, 7))


def test_extension_rejects_bad_section():
    G = ModUnits(8)
    Pn = cyclic_presentation(G, 3, 2)
    Ph, pi = c2_quotient(G, {1, 3}, 3)  # 3 lies in the kernel, not over the generator
    with pytest.raises(NotExact):
        extend_presentation(Pn, Ph, G, identity_map(G, G), pi)


def test_chain_extensions_units_mod_16():
    # filtration 1 < {1,9} < <3> < (Z/16)^x
    G = ModUnits(16)
    trivial = ModUnits(1)
    layers = [
        {"group": G, "kernel_group": trivial, "quotient": cyclic_presentation(G, 9, 2),
         "iota": GroupMap(trivial, G, lambda x: 1, lambda x: 0), "pi": identity_map(G, G)},
    ]
    # second layer: <3> / <9> has order 2, generated by the class of 3
    Ph, pi = c2_quotient(G, {1, 9}, 3)
    layers.append({"group": G, "quotient": Ph, "iota": identity_map(G, G), "pi": pi, "check": False})
    # third layer: (Z/16)^x / <3> has order 2, class of 15
    Ph2, pi2 = c2_quotient(G, {1, 3, 9, 11}, 15)
    layers.append({"group": G, "quotient": Ph2, "iota": identity_map(G, G), "pi": pi2, "check": False})
    P = chain_extensions(layers)
    assert P.ngens == 3
    assert coset_enumeration_order(P.fp) == 8
    assert all(P.exp(P.dlog(u)) == u for u in range(1, 16, 2))
    assert P.trace["kind"] == "chain"


def test_direct_product_presentation():
    A, B = ModUnits(3), ModUnits(7)
    P = direct_product_presentation(cyclic_presentation(A, 2, 2), cyclic_presentation(B, 2, 3))
    assert P.ngens == 2 and len(P.relators) == 3
    assert coset_enumeration_order(P.fp) == 6
    for x in (1, 2):
        for y in (1, 2, 4):
            assert P.exp(P.dlog((x, y))) == (x, y)


def test_abelianized_invariants():
    P = FpGroup(2, [Word.letter(1, 2), Word.letter(2, 3), Word.commutator(1, 2)])
    A, ab = abelianized_invariants(P)
    assert A.invariants == (6,)
    assert abelianized_invariants(P, exponent_bound=12)[0].invariants == (6,)
    y = ab(Word([(1, 1), (2, 1)]))
    assert ab(ab.lift(y)) == y
    with pytest.raises(InfiniteAbelianization):
        abelianized_invariants(FpGroup(2, [Word.letter(1, 2)]))
    assert abelianized_invariants(FpGroup(0, []))[0].order == 1


def test_coset_enumeration():
    with pytest.raises(Exhausted):
        coset_enumeration_order(FpGroup(2, []), max_cosets=100)
    # binary tetrahedral: <a, b | a^3 = b^3 = (ab)^2>
    a3b3 = Word([(1, 3), (2, -3)])
    a3ab2 = Word([(1, 3)]) * (Word([(1, 1), (2, 1)]) ** -2)
    assert coset_enumeration_order(FpGroup(2, [a3b3, a3ab2, Word.letter(1, 6)])) == 24
    # dihedral of order 2n
    for n in (3, 5, 8):
        D = FpGroup(2, [Word.letter(1, n), Word.letter(2, 2), Word([(2, 1), (1, 1), (2, 1), (1, 1)])])
        assert coset_enumeration_order(D) == 2 * n


def test_orbit_closure_and_random_element():
    G = ModUnits(15)
    assert sorted(orbit_closure(G, [2, 7], 100)) == [1, 2, 4, 7, 8, 11, 13, 14]
    P = cyclic_presentation(G, 2, 4)
    rng = random.Random(0)
    assert all(P.random_element(rng) in (1, 2, 4, 8) for _ in range(10))
