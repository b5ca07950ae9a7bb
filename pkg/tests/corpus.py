"""Rings of order at most 4096 used by the oracle comparisons."""

from unitring.ffield import conway_like_field
from unitring.finring import (
    make_field_ring,
    make_group_ring,
    make_matrix_ring,
    make_poly_quotient,
    make_product,
    make_zmod,
)
from unitring.groups import alternating, cyclic, dicyclic, dihedral, direct_product, symmetric


def gf(q):
    return make_field_ring(conway_like_field(q))


def corpus():
    """(kind, label, ring) triples."""
    Z, G = make_zmod, make_group_ring
    items = []
    for n in [2, 3, 4, 8, 9, 12, 16, 27, 30, 36, 49, 64, 100, 125, 256, 720]:
        items.append(("zmod", f"Z/{n}", Z(n)))
    for q in [4, 8, 9, 25, 27, 49, 64, 243]:
        items.append(("gf", f"GF({q})", gf(q)))
    groups = [
        ("F2[C2]", Z(2), cyclic(2)),
        ("F2[C3]", Z(2), cyclic(3)),
        ("F2[C4]", Z(2), cyclic(4)),
        ("F2[C5]", Z(2), cyclic(5)),
        ("F2[C6]", Z(2), cyclic(6)),
        ("F2[C2xC2]", Z(2), direct_product(cyclic(2), cyclic(2))),
        ("F2[S3]", Z(2), symmetric(3)),
        ("F2[D8]", Z(2), dihedral(8)),
        ("F2[Q8]", Z(2), dicyclic(8)),
        ("F2[D10]", Z(2), dihedral(10)),
        ("F2[A4]", Z(2), alternating(4)),
        ("F3[C2]", Z(3), cyclic(2)),
        ("F3[C3]", Z(3), cyclic(3)),
        ("F3[S3]", Z(3), symmetric(3)),
        ("F5[C2]", Z(5), cyclic(2)),
        ("Z/4[C2]", Z(4), cyclic(2)),
        ("Z/4[C3]", Z(4), cyclic(3)),
        ("Z/6[C2]", Z(6), cyclic(2)),
        ("F4[C3]", gf(4), cyclic(3)),
    ]
    for label, base, table in groups:
        items.append(("group_ring", label, G(base, table)))
    mats = [
        ("M2(F2)", Z(2), 2),
        ("M2(F3)", Z(3), 2),
        ("M2(F5)", Z(5), 2),
        ("M2(Z/4)", Z(4), 2),
        ("M2(F4)", gf(4), 2),
        ("M3(F2)", Z(2), 3),
        ("M2(Z/6)", Z(6), 2),
        ("M2(F2[C2])", G(Z(2), cyclic(2)), 2),
    ]
    for label, base, n in mats:
        items.append(("matrix", label, make_matrix_ring(base, n)))
    polys = [
        ("Z/4[x]/(x^2+x+1)", 4, [1, 1, 1]),
        ("Z/8[x]/(x^2)", 8, [0, 0, 1]),
        ("Z/9[x]/(x^2+1)", 9, [1, 0, 1]),
        ("Z/4[x]/(x^3+x+1)", 4, [1, 1, 0, 1]),
        ("Z/6[x]/(x^2+1)", 6, [1, 0, 1]),
        ("Z/2[x]/(x^4)", 2, [0, 0, 0, 0, 1]),
        ("Z/3[x]/(x^3-x)", 3, [0, -1, 0, 1]),
    ]
    for label, m, f in polys:
        items.append(("poly_quotient", label, make_poly_quotient(m, f)))
    prods = [
        ("Z/2 x Z/3", [Z(2), Z(3)]),
        ("GF(4) x Z/4", [gf(4), Z(4)]),
        ("M2(F2) x Z/3", [make_matrix_ring(Z(2), 2), Z(3)]),
        ("F2[S3] x Z/5", [G(Z(2), symmetric(3)), Z(5)]),
        ("Z/4 x Z/8", [Z(4), Z(8)]),
        ("GF(9) x F2[C2]", [gf(9), G(Z(2), cyclic(2))]),
    ]
    for label, parts in prods:
        items.append(("product", label, make_product(*parts)))
    return items


KINDS = {"zmod", "gf", "group_ring", "matrix", "poly_quotient", "product"}
