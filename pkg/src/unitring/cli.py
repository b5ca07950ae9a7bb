"""Command-line front end: ``unitring <command> <spec.json> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .algstruct import algebra_from_pring, jacobson_radical, verify_wedderburn, wedderburn
from .errors import TooLarge, UnitRingError
from .finring import FinRing, brute_force_radical, make_group_ring, make_zmod, p_decomposition, quotient_ring
from .groups import small_group
from .ringspec import SpecError, loads
from .unitk import k1, radical, unit_abelianization, unit_group, unit_group_order
from .verify import CheckReport, brute_force_abelianization, check_abelian_map, check_presentation, unit_set

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3

# ab(F_2[G]) and ab / K_1 for the nonabelian groups of order at most 16
GOLDEN_K1_TABLE = {
    (6, 1): ([2, 2], [2]),
    (8, 3): ([2, 2, 4], []),
    (8, 4): ([2, 2, 4], []),
    (10, 1): ([6], []),
    (12, 1): ([2, 2, 2, 4], [2]),
    (12, 3): ([6], []),
    (12, 4): ([2, 2, 2, 2, 2], [2]),
    (14, 1): ([14], []),
    (16, 3): ([2, 2, 2, 2, 2, 4, 4], []),
    (16, 4): ([2, 2, 2, 2, 2, 4, 4], []),
    (16, 6): ([2, 2, 2, 4, 4, 4], []),
    (16, 7): ([2, 2, 2, 8], []),
    (16, 8): ([2, 2, 2, 8], []),
    (16, 9): ([2, 2, 2, 8], []),
    (16, 11): ([2, 2, 2, 2, 2, 2, 2, 4], []),
    (16, 12): ([2, 2, 2, 2, 2, 2, 2, 4], []),
    (16, 13): ([2, 2, 2, 2, 2, 2, 2, 4], []),
}
# computed and reported, never compared
REPORT_ONLY = [(26, 1)]


class CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def default_seed() -> int:
    try:
        return int(os.environ.get("UNITRING_SEED", "0"))
    except ValueError:
        return 0


def bracket(invariants) -> str:
    """[2^2,4] notation for a divisor chain."""
    out, items = [], list(invariants)
    i = 0
    while i < len(items):
        j = i
        while j < len(items) and items[j] == items[i]:
            j += 1
        out.append(f"{items[i]}^{j - i}" if j - i > 1 else f"{items[i]}")
        i = j
    return "[" + ",".join(out) + "]"


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, default=_jsonable)


def canonical(doc: dict) -> dict:
    """The document without its timing field, for golden comparisons."""
    return {k: v for k, v in doc.items() if k != "timing"}


# ---------------------------------------------------------------------------
# commands

def cmd_presentation(R: FinRing, args) -> dict:
    res = unit_group(R, seed=args.seed)
    return {"presentation": res.presentation.fp.to_json(), "unit_order": unit_group_order(R, seed=args.seed), "trace": res.trace}


def cmd_abelianization(R: FinRing, args) -> dict:
    ab = unit_abelianization(R, seed=args.seed)
    out = {"invariants": list(ab.invariants), "bracket": bracket(ab.invariants)}
    if args.oracle:
        out["oracle"] = list(_guarded(brute_force_abelianization, R))
        if out["oracle"] != out["invariants"]:
            raise CommandFailed(EXIT_VERIFY, "abelianization disagrees with the brute-force oracle")
    return out


def cmd_k1(R: FinRing, args) -> dict:
    K = k1(R, seed=args.seed)
    return {
        "invariants": list(K.invariants),
        "ab": K.trace["ab"],
        "quotient": K.kernel["invariants"],
        "bracket": {"ab": bracket(K.trace["ab"]), "quotient": bracket(K.kernel["invariants"])},
    }


def cmd_order(R: FinRing, args) -> dict:
    n = unit_group_order(R, seed=args.seed)
    out = {"order": n}
    if args.oracle:
        out["oracle"] = len(_guarded(unit_set, R))
        if out["oracle"] != n:
            raise CommandFailed(EXIT_VERIFY, "unit order disagrees with the brute-force count")
    return out


def cmd_radical(R: FinRing, args) -> dict:
    J = radical(R)
    out = {"order": J.order, "generators": [[int(v) for v in g] for g in J.generators()]}
    if args.oracle:
        ok = _guarded(brute_force_radical, R) == J
        out["oracle_agrees"] = ok
        if not ok:
            raise CommandFailed(EXIT_VERIFY, "radical disagrees with the brute-force oracle")
    return out


def cmd_wedderburn(R: FinRing, args) -> dict:
    comps = []
    for c in p_decomposition(R):
        J = jacobson_radical(c.ring)
        S = quotient_ring(c.ring, J)[0] if not J.is_zero() else c.ring
        if S.r == 0:
            continue
        W = wedderburn(algebra_from_pring(S), seed=args.seed)
        verify_wedderburn(W)
        comps += [{"p": c.p, "q": s.field.q, "n": s.n, "field_modulus": list(s.field.modulus)} for s in W.components]
    return {"components": comps}


def cmd_verify(R: FinRing, args) -> dict:
    rng = random.Random(args.seed)
    report = CheckReport()
    order = unit_group_order(R, seed=args.seed)
    res = unit_group(R, seed=args.seed)
    check_presentation(R, res.presentation, order, rng, report)
    ab = unit_abelianization(R, seed=args.seed, units=res)
    check_abelian_map(R, ab, rng, report)
    if R.is_commutative:
        report.checks["k1_equals_abelianization"] = list(k1(R, seed=args.seed).invariants) == list(ab.invariants)
    if args.oracle:
        report.checks["order_matches_brute_force"] = len(_guarded(unit_set, R)) == order
        report.checks["radical_matches_brute_force"] = _guarded(brute_force_radical, R) == radical(R)
        report.checks["abelianization_matches_brute_force"] = tuple(_guarded(brute_force_abelianization, R)) == tuple(ab.invariants)
    out = report.to_json()
    if not report.ok:
        raise CommandFailed(EXIT_VERIFY, json.dumps(out["checks"], sort_keys=True))
    return out


def _guarded(fn, R):
    try:
        return fn(R)
    except TooLarge as exc:
        raise CommandFailed(EXIT_GUARD, f"oracle size guard: {exc}") from None


COMMANDS = {
    "presentation": cmd_presentation,
    "abelianization": cmd_abelianization,
    "k1": cmd_k1,
    "order": cmd_order,
    "radical": cmd_radical,
    "wedderburn": cmd_wedderburn,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# K_1 of F_2[G] for small nonabelian groups

def k1_table_row(key: tuple[int, int], seed: int = 0) -> tuple[dict, float]:
    """One row of ab, ker and K_1 for F_2[G], with its wall time."""
    t0 = time.perf_counter()
    R = make_group_ring(make_zmod(2), small_group(*key))
    K = k1(R, seed=seed)
    ab, quo = list(K.trace["ab"]), list(K.kernel["invariants"])
    row = {"id": list(key), "ab": ab, "quotient": quo, "k1": list(K.invariants), "bracket": [bracket(ab), bracket(quo)]}
    if key in GOLDEN_K1_TABLE:
        g_ab, g_quo = GOLDEN_K1_TABLE[key]
        row["golden"] = {"ab": g_ab, "quotient": g_quo}
        row["match"] = ab == g_ab and quo == g_quo
    return row, round(time.perf_counter() - t0, 3)


def k1_table(max_order: int = 16, seed: int = 0, jobs: int = 1) -> tuple[dict, dict]:
    keys = sorted(k for k in GOLDEN_K1_TABLE if k[0] <= max_order) + [k for k in REPORT_ONLY if k[0] <= max_order]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(k1_table_row, keys, [seed] * len(keys)))
    else:
        done = [k1_table_row(k, seed) for k in keys]
    rows = [r for r, _ in done]
    mismatches = [r["id"] for r in rows if r.get("match") is False]
    result = {"rows": rows, "mismatches": mismatches, "compared": sum(1 for r in rows if "match" in r)}
    return result, {f"{k[0]},{k[1]}": t for k, (_, t) in zip(keys, done)}


# ---------------------------------------------------------------------------
# entry point

def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unitring", description="Unit groups, abelianizations and K_1 of finite rings.")
    ap.add_argument("--version", action="version", version=f"unitring {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("spec", help="ring spec JSON file, '-' for stdin, or inline JSON")
        _common(p)
    p = sub.add_parser("k1-table", help="K_1 and abelianization of F_2[G] for the built-in small groups")
    p.add_argument("--max-order", type=int, default=26)
    _common(p)
    return ap


def _common(p):
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path, default=None)


def _read_spec(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read spec file: {exc.strerror}") from None


@dataclass
class Outcome:
    code: int
    document: dict | None
    message: str = ""
    out: Path | None = None


def run(argv: list[str] | None = None) -> Outcome:
    """Execute a command and collect its exit code, result document and diagnostic."""
    args = _parser().parse_args(argv)
    if args.seed is None:
        args.seed = default_seed()
    t0 = time.perf_counter()
    doc: dict = {"command": args.command, "seed": args.seed, "version": __version__}
    try:
        if args.command == "k1-table":
            doc["result"], row_times = k1_table(args.max_order, seed=args.seed, jobs=args.jobs)
            code = EXIT_VERIFY if doc["result"]["mismatches"] else EXIT_OK
        else:
            parsed = loads(_read_spec(args.spec))
            doc["spec"] = parsed.spec
            doc["ring"] = {"name": parsed.ring.name, "order": parsed.ring.order, "additive": list(parsed.ring.d)}
            doc["result"] = COMMANDS[args.command](parsed.ring, args)
            code = EXIT_OK
    except SpecError as exc:
        return Outcome(EXIT_PARSE, None, f"spec error: {exc}")
    except CommandFailed as exc:
        return Outcome(exc.code, None, str(exc))
    except UnitRingError as exc:
        return Outcome(EXIT_VERIFY, None, f"{type(exc).__name__}: {exc}")
    doc["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    if args.command == "k1-table":
        doc["timing"]["rows"] = row_times
    return Outcome(code, doc, "", args.out)


def main(argv: list[str] | None = None) -> int:
    res = run(argv)
    if res.message:
        print(res.message, file=sys.stderr)
    if res.document is not None:
        text = dumps(res.document)
        if res.out is not None:
            res.out.write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
