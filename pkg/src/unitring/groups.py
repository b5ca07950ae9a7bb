"""Cayley tables of small finite groups.

Every constructor returns a list-of-lists multiplication table with the
identity at index 0, ready for ``make_group_ring``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

from .errors import RingValidationError

Table = list[list[int]]


def table_from_elements(elements: Sequence[Hashable], mul: Callable) -> Table:
    """Table on an explicit element list; the first element must be the identity."""
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise RingValidationError("repeated group elements")
    return [[index[mul(a, b)] for b in elements] for a in elements]


def closure(gens: Sequence[Hashable], mul: Callable, one: Hashable, limit: int = 10_000) -> list:
    """Elements generated by gens, identity first, in breadth-first order."""
    seen = {one: None}
    frontier = [one]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = mul(a, g)
                if c not in seen:
                    seen[c] = None
                    nxt.append(c)
                    if len(seen) > limit:
                        raise RingValidationError("group too large")
        frontier = nxt
    return list(seen)


# ---------------------------------------------------------------------------
# families

def metacyclic(m: int, n: int, t: int, r: int) -> Table:
    """<a, b | a^m, b^n = a^t, b a b^-1 = a^r> on normal forms a^i b^j."""
    if pow(r, n, m) != 1 % m or (t * r - t) % m:
        raise RingValidationError("inconsistent metacyclic parameters")
    rp = [pow(r, j, m) for j in range(n)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        e, f = (i + k * rp[j]) % m, j + l
        if f >= n:
            e, f = (e + t) % m, f - n
        return (e, f)

    return table_from_elements([(i, j) for j in range(n) for i in range(m)], mul)


def cyclic(n: int) -> Table:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def dihedral(order: int) -> Table:
    """Dihedral group with the given order (D_8 has 8 elements)."""
    if order < 2 or order % 2:
        raise RingValidationError("dihedral order must be even")
    m = order // 2
    return metacyclic(m, 2, 0, m - 1 if m > 1 else 0)


def dicyclic(order: int) -> Table:
    """Dicyclic group of order 4k; generalized quaternion for 2-power orders."""
    if order < 4 or order % 4:
        raise RingValidationError("dicyclic order must be a multiple of 4")
    m = order // 2
    return metacyclic(m, 2, m // 2, m - 1)


def elementary_abelian(p: int, k: int) -> Table:
    elems = list(itertools.product(range(p), repeat=k))
    return table_from_elements(elems, lambda a, b: tuple((x + y) % p for x, y in zip(a, b)))


def _perm_mul(a, b):
    # apply b first, then a
    return tuple(a[i] for i in b)


def symmetric(n: int) -> Table:
    if not 1 <= n <= 4:
        raise RingValidationError("symmetric groups are built in up to degree 4")
    elems = sorted(itertools.permutations(range(n)))
    return table_from_elements(elems, _perm_mul)


def alternating(n: int) -> Table:
    if not 1 <= n <= 4:
        raise RingValidationError("alternating groups are built in up to degree 4")

    def even(p):
        return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]) % 2 == 0

    elems = sorted(p for p in itertools.permutations(range(n)) if even(p))
    return table_from_elements(elems, _perm_mul)


def direct_product(*tables: Table) -> Table:
    sizes = [len(t) for t in tables]
    elems = list(itertools.product(*[range(s) for s in sizes]))
    return table_from_elements(elems, lambda a, b: tuple(t[x][y] for t, x, y in zip(tables, a, b)))


def semidirect_product(N: Table, H: Table, action: Callable[[int], Sequence[int]]) -> Table:
    """N x| H where action(h) is the automorphism of N (as an index permutation) induced by h."""
    maps = [list(action(h)) for h in range(len(H))]
    for h in range(len(H)):
        for k in range(len(H)):
            comp = [maps[h][maps[k][x]] for x in range(len(N))]
            if comp != maps[H[h][k]]:
                raise RingValidationError("action is not a homomorphism")
    elems = [(x, h) for h in range(len(H)) for x in range(len(N))]
    return table_from_elements(elems, lambda a, b: (N[a[0]][maps[a[1]][b[0]]], H[a[1]][b[1]]))


def _abelian_action(moduli: Sequence[int], images: Sequence[Sequence[int]]):
    """Index permutation of Z/m_1 x ... x Z/m_k (product order) sending e_i to images[i]."""
    elems = list(itertools.product(*[range(m) for m in moduli]))
    index = {x: i for i, x in enumerate(elems)}

    def apply(x):
        out = [0] * len(moduli)
        for c, img in zip(x, images):
            for j, v in enumerate(img):
                out[j] += c * v
        return index[tuple(o % m for o, m in zip(out, moduli))]

    return [apply(x) for x in elems]


def _c4c2_by_c2(images) -> Table:
    N = direct_product(cyclic(4), cyclic(2))
    phi = _abelian_action((4, 2), images)
    ident = list(range(8))
    return semidirect_product(N, cyclic(2), lambda h: phi if h else ident)


# ---------------------------------------------------------------------------
# named groups by small-group identifier

def small_group(order: int, number: int) -> Table:
    """Nonabelian groups of order at most 16 by their library identifier."""
    try:
        return _SMALL[(order, number)]()
    except KeyError:
        raise RingValidationError(f"no built-in table for small group ({order},{number})") from None


_SMALL: dict[tuple[int, int], Callable[[], Table]] = {
    (6, 1): lambda: symmetric(3),
    (8, 3): lambda: dihedral(8),
    (8, 4): lambda: dicyclic(8),
    (10, 1): lambda: dihedral(10),
    (12, 1): lambda: dicyclic(12),
    (12, 3): lambda: alternating(4),
    (12, 4): lambda: dihedral(12),
    (14, 1): lambda: dihedral(14),
    # (C4 x C2) x| C2 with a -> ab, b -> b
    (16, 3): lambda: _c4c2_by_c2([(1, 1), (0, 1)]),
    (16, 4): lambda: metacyclic(4, 4, 0, 3),
    (16, 6): lambda: metacyclic(8, 2, 0, 5),
    (16, 7): lambda: dihedral(16),
    (16, 8): lambda: metacyclic(8, 2, 0, 3),
    (16, 9): lambda: dicyclic(16),
    (16, 11): lambda: direct_product(cyclic(2), dihedral(8)),
    (16, 12): lambda: direct_product(cyclic(2), dicyclic(8)),
    # (C4 x C2) x| C2 with a -> a, b -> a^2 b
    (16, 13): lambda: _c4c2_by_c2([(1, 0), (2, 1)]),
    (26, 1): lambda: dihedral(26),
}

SMALL_GROUP_IDS = sorted(_SMALL)

FAMILIES: dict[str, Callable[..., Table]] = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "quaternion": dicyclic,
    "elementary_abelian": elementary_abelian,
    "symmetric": symmetric,
    "alternating": alternating,
    "small_group": small_group,
}


def group_invariants(table: Table) -> dict:
    """Order, center size, involution count and element-order histogram (for fixture checks)."""
    n = len(table)
    central = [a for a in range(n) if all(table[a][b] == table[b][a] for b in range(n))]
    order_of = []
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = table[x][a]
            k += 1
        order_of.append(k)
    hist: dict[int, int] = {}
    for k in order_of:
        hist[k] = hist.get(k, 0) + 1
    return {
        "order": n,
        "center": len(central),
        "center_exponent": max(order_of[a] for a in central),
        "squares": len({table[a][a] for a in range(n)}),
        "involutions": hist.get(2, 0),
        "orders": dict(sorted(hist.items())),
        "abelian": len(central) == n,
    }
