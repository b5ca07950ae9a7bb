"""Invariant checks and brute-force oracles for unit-group computations."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .abgrp import invariant_factors
from .errors import TooLarge
from .finring import FinRing, brute_force_units
from .fpgrp import EffectivePresentation, orbit_closure
from .numtheory import factor

EXHAUSTIVE_LIMIT = 2000
SAMPLES = 200


@dataclass
class CheckReport:
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks), "notes": dict(self.notes)}


def unit_sample(R: FinRing, P: EffectivePresentation, order: int, rng: random.Random) -> list:
    """All units when there are at most EXHAUSTIVE_LIMIT, else SAMPLES random units."""
    if order <= EXHAUSTIVE_LIMIT:
        return list(orbit_closure(P.group, P.gens, order).values()) if P.ngens else [R.one]
    return [R.random_unit(rng) for _ in range(SAMPLES)]


def check_presentation(R: FinRing, P: EffectivePresentation, order: int, rng: random.Random, report: CheckReport):
    """Relators evaluate to 1 and exp(dlog(u)) = u on a unit sample."""
    G = P.group
    report.checks["relators_evaluate_to_one"] = all(G.is_one(P.exp(r)) for r in P.relators)
    units = unit_sample(R, P, order, rng)
    words = P.dlog_many(units)
    report.checks["exp_dlog_roundtrip"] = all(G.eq(P.exp(w), u) for w, u in zip(words, units))
    report.notes["roundtrip_sample"] = len(units)
    if order <= EXHAUSTIVE_LIMIT:
        report.checks["closure_has_unit_order"] = len(units) == order


def check_abelian_map(R: FinRing, ab, rng: random.Random, report: CheckReport, name: str = "abelianization"):
    """phi(uv) = phi(u) + phi(v) on random pairs and phi(preimage(y)) = y."""
    A = ab.group
    us = [R.random_unit(rng) for _ in range(SAMPLES)]
    vs = [R.random_unit(rng) for _ in range(SAMPLES)]
    prods = [R.mul(u, v) for u, v in zip(us, vs)]
    fu, fv, fp = ab.forward_many(us), ab.forward_many(vs), ab.forward_many(prods)
    report.checks[f"{name}_homomorphism"] = all(tuple(A.add(a, b)) == tuple(c) for a, b, c in zip(fu, fv, fp))
    ys = [A.random(rng) for _ in range(20)]
    report.checks[f"{name}_preimage"] = all(tuple(ab.forward(ab.preimage(y))) == tuple(A.reduce(y)) for y in ys)


# ---------------------------------------------------------------------------
# oracles

def unit_set(R: FinRing) -> set:
    return {R.key(u) for u in brute_force_units(R)}


def brute_force_abelianization(R: FinRing, limit: int = 1 << 14, seed: int = 0) -> tuple[int, ...]:
    """Invariants of R^x / [R^x, R^x] by enumeration, with no use of presentations.

    Random units are added until they generate R^x; the derived subgroup is
    the normal closure of their commutators, and the invariants are read off
    from element-order counts in the quotient.
    """
    units = brute_force_units(R)
    n = len(units)
    if n > limit:
        raise TooLarge(f"{n} units exceed the oracle limit {limit}")
    key = R.key
    inv = {key(u): R.inverse(u) for u in units}
    rng = random.Random(seed)
    gens: list = []
    have = {key(R.one)}
    while len(have) < n:
        g = units[rng.randrange(n)]
        if key(g) in have:
            continue
        gens.append(g)
        have = set(orbit_closure(_Units(R), gens, n))
    # normal closure of the commutators of the generators
    comms = [R.mul(R.mul(inv[key(a)], inv[key(b)]), R.mul(a, b)) for a in gens for b in gens]
    D = {key(R.one): R.one}
    frontier = [R.one]
    movers = [c for c in comms if key(c) != key(R.one)]
    while frontier:
        nxt = []
        for x in frontier:
            cands = [R.mul(x, c) for c in movers] + [R.mul(R.mul(inv[key(g)], x), g) for g in gens]
            for y in cands:
                k = key(y)
                if k not in D:
                    D[k] = y
                    nxt.append(y)
        frontier = nxt
    # cosets u D, the identity coset first
    coset: dict = {}
    reps = []
    Dl = list(D.values())
    for u in [R.one] + list(units):
        if key(u) in coset:
            continue
        idx = len(reps)
        reps.append(u)
        for d in Dl:
            coset[key(R.mul(u, d))] = idx
    m = len(reps)
    orders = []
    for u in reps:
        k, x = 1, u
        while coset[key(x)] != 0:
            x = R.mul(x, u)
            k += 1
        orders.append(k)
    return invariants_from_orders(orders, m)


def invariants_from_orders(orders: list[int], total: int) -> tuple[int, ...]:
    """Divisor-chain invariants of a finite abelian group from the list of its element orders."""
    parts = []
    for p in factor(total) if total > 1 else {}:
        counts = []
        k = 0
        while True:
            c = sum(1 for o in orders if (p**k) % o == 0)
            counts.append(c)
            if k and counts[-1] == counts[-2]:
                break
            k += 1
        ranks = [round(math.log(counts[i] // counts[i - 1], p)) for i in range(1, len(counts))]
        for i, r in enumerate(ranks):
            nxt = ranks[i + 1] if i + 1 < len(ranks) else 0
            parts += [p ** (i + 1)] * (r - nxt)
    return tuple(invariant_factors(parts)) if parts else ()


class _Units:
    def __init__(self, R):
        self.R = R
        self.one = R.one

    def mul(self, a, b):
        return self.R.mul(a, b)

    def key(self, a):
        return self.R.key(a)


# ---------------------------------------------------------------------------
# size bounds recorded in provenance traces

def _extension_ok(t: dict, low: dict, top: dict) -> bool:
    gens_ok = t["ngens"] <= low["ngens"] + top["ngens"]
    rels_ok = t["nrelators"] <= low["nrelators"] + top["nrelators"] + top["ngens"] * low["ngens"]
    return gens_ok and rels_ok


_FIELD_UNITS = {"ngens": 1, "nrelators": 1}


def trace_bounds(trace: dict, path: str = "units") -> dict[str, bool]:
    """Generator and relator bounds for every stage of a unit-group trace.

    Extensions satisfy |V| <= |U| + |T| + |X||Y| with at most |X| + |Y|
    generators; a chain of l abelian layers with at most n generators and
    n^2 relators each has at most l n generators and 2 l^2 n^2 relators.
    """
    out: dict[str, bool] = {}
    kind = trace.get("kind")
    if kind == "pring":
        out[path] = _extension_ok(trace, trace["unipotent"], trace["semisimple"])
        out.update(trace_bounds(trace["semisimple"], f"{path}.semisimple"))
        out.update(trace_bounds(trace["unipotent"], f"{path}.unipotent"))
    elif kind == "GL" and "SL" in trace:
        field_units = _FIELD_UNITS if trace["q"] > 2 else {"ngens": 0, "nrelators": 0}
        out[path] = _extension_ok(trace, trace["SL"], field_units)
    elif kind == "unipotent" and trace.get("layers"):
        l, n = len(trace["layers"]), trace["n"]
        layers_ok = all(s["ngens"] <= n and s["nrelators"] <= n * n for s in trace["layers"])
        out[path] = layers_ok and trace["ngens"] <= l * n and trace["nrelators"] <= 2 * l * l * n * n
    elif kind in ("units", "semisimple"):
        subs = trace.get("components" if kind == "units" else "factors", [])
        total_g = sum(s["ngens"] for s in subs)
        cross = sum(a["ngens"] * b["ngens"] for i, a in enumerate(subs) for b in subs[i + 1 :])
        out[path] = trace["ngens"] == total_g and trace["nrelators"] <= sum(s["nrelators"] for s in subs) + cross
        for i, s in enumerate(subs):
            out.update(trace_bounds(s, f"{path}[{i}]"))
    return out
