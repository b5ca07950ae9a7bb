"""Effective presentations of unit groups of finite rings, their abelianizations and K_1."""

__version__ = "0.1.0"

from .finring import (  # noqa: E402
    FinRing,
    make_field_ring,
    make_group_ring,
    make_matrix_ring,
    make_poly_quotient,
    make_product,
    make_zmod,
)
from .unitk import k1, radical, unit_abelianization, unit_group, unit_group_order  # noqa: E402

__all__ = [
    "FinRing",
    "k1",
    "make_field_ring",
    "make_group_ring",
    "make_matrix_ring",
    "make_poly_quotient",
    "make_product",
    "make_zmod",
    "radical",
    "unit_abelianization",
    "unit_group",
    "unit_group_order",
]
