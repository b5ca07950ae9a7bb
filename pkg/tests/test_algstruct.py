import numpy as np
import pytest

from corpus import gf
from unitring.algstruct import (
    algebra_from_pring,
    center,
    jacobson_radical,
    radical_fp,
    verify_wedderburn,
    wedderburn,
)
from unitring.errors import NotPAnnihilated, NotPRing, NotSemisimple
from unitring.finring import (
    FinRing,
    brute_force_radical,
    make_group_ring,
    make_matrix_ring,
    make_poly_quotient,
    make_zmod,
    quotient_ring,
)
from unitring.groups import alternating, cyclic, dicyclic, dihedral, symmetric


def upper_triangular_f3() -> FinRing:
    # basis e11, e12, e22
    T = np.zeros((3, 3, 3), dtype=np.int64)
    T[0, 0, 0] = 1  # e11 e11 = e11
    T[0, 1, 1] = 1  # e11 e12 = e12
    T[1, 2, 1] = 1  # e12 e22 = e12
    T[2, 2, 2] = 1  # e22 e22 = e22
    return FinRing((3, 3, 3), T, [1, 0, 1], name="UT2(F3)")


def types(W):
    return sorted((c.field.q, c.n) for c in W.components)


def test_algebra_from_pring_examples():
    assert algebra_from_pring(make_group_ring(make_zmod(2), cyclic(2))).dim == 2
    assert algebra_from_pring(make_matrix_ring(make_zmod(3), 2)).dim == 4
    with pytest.raises(NotPAnnihilated):
        algebra_from_pring(make_zmod(4))


def test_radical_fp_examples():
    assert radical_fp(algebra_from_pring(make_matrix_ring(make_zmod(2), 2))).shape[0] == 0
    J = radical_fp(algebra_from_pring(make_group_ring(make_zmod(2), cyclic(2))))
    assert J.shape[0] == 1 and list(J[0]) == [1, 1]
    J = radical_fp(algebra_from_pring(upper_triangular_f3()))
    assert J.shape[0] == 1 and list(J[0] % 3) in ([0, 1, 0], [0, 2, 0])


def test_jacobson_radical_examples():
    J = jacobson_radical(make_zmod(8))
    assert J.order == 4
    J = jacobson_radical(make_group_ring(make_zmod(2), dihedral(8)))
    assert J.order == 2**7
    assert jacobson_radical(make_matrix_ring(make_zmod(2), 2)).is_zero()
    with pytest.raises(NotPRing):
        jacobson_radical(make_zmod(6))


@pytest.mark.parametrize(
    "R",
    [
        make_zmod(8),
        make_zmod(27),
        upper_triangular_f3(),
        make_group_ring(make_zmod(2), cyclic(4)),
        make_group_ring(make_zmod(2), symmetric(3)),
        make_group_ring(make_zmod(3), symmetric(3)),
        make_group_ring(make_zmod(4), cyclic(2)),
        make_group_ring(make_zmod(2), dicyclic(8)),
        make_matrix_ring(make_zmod(4), 2),
        make_poly_quotient(8, [0, 0, 1]),
        make_poly_quotient(9, [1, 0, 1]),
        make_group_ring(gf(4), cyclic(2)),
    ],
    ids=lambda R: R.name,
)
def test_jacobson_radical_matches_brute_force(R):
    assert jacobson_radical(R) == brute_force_radical(R)


def test_center_examples():
    assert center(algebra_from_pring(make_matrix_ring(make_zmod(2), 2))).shape[0] == 1
    assert center(algebra_from_pring(make_group_ring(make_zmod(2), cyclic(3)))).shape[0] == 3
    assert center(algebra_from_pring(make_group_ring(make_zmod(2), symmetric(3)))).shape[0] == 3


def test_wedderburn_examples():
    W = wedderburn(algebra_from_pring(make_group_ring(make_zmod(2), cyclic(3))))
    assert types(W) == [(2, 1), (4, 1)]
    W = wedderburn(algebra_from_pring(make_matrix_ring(make_zmod(3), 2)))
    assert types(W) == [(3, 2)]
    R = make_group_ring(make_zmod(2), symmetric(3))
    S, _ = quotient_ring(R, jacobson_radical(R))
    assert types(wedderburn(algebra_from_pring(S))) == [(2, 1), (2, 2)]


@pytest.mark.parametrize(
    "R, expected",
    [
        (make_group_ring(make_zmod(5), symmetric(3)), [(5, 1), (5, 1), (5, 2)]),
        (make_group_ring(make_zmod(2), cyclic(7)), [(2, 1), (8, 1), (8, 1)]),
        (make_group_ring(make_zmod(3), dihedral(10)), [(3, 1), (3, 1), (9, 2)]),
        (make_matrix_ring(gf(4), 3), [(4, 3)]),
        (make_matrix_ring(make_group_ring(make_zmod(2), cyclic(3)), 2), [(2, 2), (4, 2)]),
        (make_group_ring(make_zmod(5), alternating(4)), None),
    ],
    ids=lambda x: getattr(x, "name", ""),
)
def test_wedderburn_decomposition_is_an_isomorphism(R, expected):
    A = algebra_from_pring(R)
    for seed in (0, 1, 2):
        W = wedderburn(A, seed=seed)
        verify_wedderburn(W)
        assert sum(c.n * c.n * c.field.m for c in W.components) == A.dim
        if expected is not None:
            assert types(W) == expected
        rng = np.random.default_rng(seed)
        for _ in range(5):
            x = rng.integers(0, R.d[0], R.r)
            y = rng.integers(0, R.d[0], R.r)
            T = W.target
            assert T.eq(W.to_target(R.mul(x, y)), T.mul(W.to_target(x), W.to_target(y)))
            assert np.array_equal(W.from_target(W.to_target(x)), x % R.d[0])


def test_wedderburn_rejects_radical():
    with pytest.raises(NotSemisimple):
        wedderburn(algebra_from_pring(make_group_ring(make_zmod(2), cyclic(2))))
