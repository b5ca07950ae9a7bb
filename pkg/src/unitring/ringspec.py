"""JSON ring specifications.

A spec is a single-key object, one of::

    {"zmod": 12}
    {"gf": 4}                                 or {"gf": {"p": 2, "poly": [1, 1, 1]}}
    {"group_ring": {"coeff": SPEC, "group": GROUP}}
    {"matrix": {"n": 2, "base": SPEC}}
    {"poly_quotient": {"m": 4, "f": [1, 1, 1]}}   coefficients in ascending degree
    {"product": [SPEC, ...]}

GROUP is a family call string such as "dihedral(8)" or "small_group(16,3)",
an object {"family": "dihedral", "args": [8]}, {"table": [[...], ...]}, or
{"product": [GROUP, ...]}.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import groups
from .errors import NotAGroup, RingValidationError, UnitRingError
from .ffield import FiniteField, conway_like_field
from .finring import (
    FinRing,
    make_field_ring,
    make_group_ring,
    make_matrix_ring,
    make_poly_quotient,
    make_product,
    make_zmod,
)
from .numtheory import factor

MAX_ORDER_BITS = 4096


class SpecError(UnitRingError):
    """A spec that does not parse or does not describe a valid ring."""

    def __init__(self, message: str, path: str = "$", line: int | None = None, column: int | None = None):
        self.path, self.line, self.column = path, line, column
        where = f"line {line}, column {column}" if line is not None else path
        super().__init__(f"{where}: {message}")


@dataclass
class ParsedSpec:
    spec: object
    ring: FinRing


def loads(text: str) -> ParsedSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return ParsedSpec(data, build(data))


def build(spec, path: str = "$") -> FinRing:
    """FinRing described by a decoded JSON spec."""
    if not isinstance(spec, dict) or len(spec) != 1:
        raise SpecError("expected an object with exactly one ring kind", path)
    (kind, arg), = spec.items()
    sub = f"{path}.{kind}"
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise SpecError(f"unknown ring kind {kind!r}", path) from None
    try:
        R = builder(arg, sub)
    except SpecError:
        raise
    except (RingValidationError, NotAGroup, ValueError, TypeError) as exc:
        raise SpecError(str(exc), sub) from None
    if R.order.bit_length() > MAX_ORDER_BITS:
        raise SpecError("ring is too large", sub)
    return R


def _int(x, path: str, lo: int = 0) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecError("expected an integer", path)
    if x < lo:
        raise SpecError(f"expected an integer >= {lo}", path)
    return x


def _int_list(xs, path: str) -> list[int]:
    if not isinstance(xs, list) or not xs:
        raise SpecError("expected a nonempty list of integers", path)
    return [_int(x, f"{path}[{i}]", lo=-(1 << 62)) for i, x in enumerate(xs)]


def _fields(arg, path: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(arg, dict):
        raise SpecError(f"expected an object with keys {', '.join(keys)}", path)
    missing = [k for k in keys if k not in arg]
    extra = [k for k in arg if k not in keys]
    if missing or extra:
        raise SpecError(f"expected keys {list(keys)}, got {sorted(arg)}", path)
    return arg


def _zmod(arg, path):
    return make_zmod(_int(arg, path, lo=1))


def _gf(arg, path):
    if isinstance(arg, int) and not isinstance(arg, bool):
        q = _int(arg, path, lo=2)
        if len(factor(q)) != 1:
            raise SpecError(f"{q} is not a prime power", path)
        return make_field_ring(conway_like_field(q))
    f = _fields(arg, path, ("p", "poly"))
    p = _int(f["p"], f"{path}.p", lo=2)
    poly = _int_list(f["poly"], f"{path}.poly")
    return make_field_ring(FiniteField(p, poly))


_CALL = re.compile(r"^\s*([a-z_]+)\s*\(\s*([0-9,\s]*)\)\s*$")


def group_table(spec, path: str = "$") -> list[list[int]]:
    """Cayley table of a group spec."""
    if isinstance(spec, str):
        m = _CALL.match(spec)
        if not m:
            raise SpecError(f"cannot parse group {spec!r}", path)
        name, args = m.group(1), [int(a) for a in m.group(2).split(",") if a.strip()]
        return _family(name, args, path)
    if isinstance(spec, dict) and len(spec) == 1:
        (kind, arg), = spec.items()
        if kind == "table":
            if not isinstance(arg, list) or not all(isinstance(row, list) for row in arg):
                raise SpecError("expected a list of rows", f"{path}.table")
            return [[_int(x, f"{path}.table") for x in row] for row in arg]
        if kind == "product":
            if not isinstance(arg, list) or not arg:
                raise SpecError("expected a nonempty list of groups", f"{path}.product")
            return groups.direct_product(*[group_table(g, f"{path}.product[{i}]") for i, g in enumerate(arg)])
    if isinstance(spec, dict) and set(spec) <= {"family", "args"} and "family" in spec:
        args = spec.get("args", [])
        if not isinstance(args, list):
            raise SpecError("expected a list of arguments", f"{path}.args")
        return _family(spec["family"], [_int(a, f"{path}.args") for a in args], path)
    raise SpecError("expected a family call, a table, or a product of groups", path)


def _family(name, args, path):
    try:
        fn = groups.FAMILIES[name]
    except (KeyError, TypeError):
        raise SpecError(f"unknown group family {name!r}", path) from None
    try:
        return fn(*args)
    except TypeError:
        raise SpecError(f"wrong number of arguments for {name}", path) from None
    except RingValidationError as exc:
        raise SpecError(str(exc), path) from None


def _group_ring(arg, path):
    f = _fields(arg, path, ("coeff", "group"))
    base = build(f["coeff"], f"{path}.coeff")
    table = group_table(f["group"], f"{path}.group")
    try:
        return make_group_ring(base, table)
    except (RingValidationError, NotAGroup) as exc:
        raise SpecError(str(exc), f"{path}.group") from None


def _matrix(arg, path):
    f = _fields(arg, path, ("n", "base"))
    return make_matrix_ring(build(f["base"], f"{path}.base"), _int(f["n"], f"{path}.n", lo=1))


def _poly_quotient(arg, path):
    f = _fields(arg, path, ("m", "f"))
    return make_poly_quotient(_int(f["m"], f"{path}.m", lo=2), _int_list(f["f"], f"{path}.f"))


def _product(arg, path):
    if not isinstance(arg, list) or not arg:
        raise SpecError("expected a nonempty list of rings", path)
    return make_product(*[build(s, f"{path}[{i}]") for i, s in enumerate(arg)])


_BUILDERS = {
    "zmod": _zmod,
    "gf": _gf,
    "group_ring": _group_ring,
    "matrix": _matrix,
    "poly_quotient": _poly_quotient,
    "product": _product,
}
