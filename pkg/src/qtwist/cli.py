"""Command-line driver.

Words and generator indices are 1-based on the command line.  JSON output
uses sorted keys and carries a schema version so tables can be diffed.
Exit status: 0 success, 1 computation error, 2 bad flags, 3 a falsified
property under ``verify``.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import config
from .canonical import CanonicalBasisError, degrees_up_to, dual_canonical_basis
from .cells import CellElement, periodicity_check, twist_auto, twist_power
from .config import HeightCapError
from .highest_weight import quantum_minor
from .qcluster import (CompatiblePair, QuantumSeed, initial_seed, mutate_path, seed_from_pair,
                       verify_exchange_in_algebra)
from .rootdata import RootDatumError, cartan_type, is_reduced, parse_word
from .uqminus import lusztig_pair, parse_element

SCHEMA_VERSION = 1
VERBS = ("basis", "minor", "pair", "twist", "period", "mutate", "seed", "verify")


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtwist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, word=True):
        sp.add_argument("--type", required=True, help="Cartan type such as A2, B2, G2")
        if word:
            sp.add_argument("--word", help="reduced word, 1-based, e.g. 1,2,1 (default: w0)")
        sp.add_argument("--height-cap", type=int, help="override the weight height cap")
        sp.add_argument("--format", choices=("json", "text"), default="text")

    sp = sub.add_parser("basis", help="dual canonical basis table")
    common(sp)
    sp.add_argument("--height", type=int, required=True)

    sp = sub.add_parser("minor", help="unipotent quantum minor D_{w lam, w' lam}")
    common(sp, word=False)
    sp.add_argument("--left", default="", help="word of w (1-based)")
    sp.add_argument("--right", default="", help="word of w' (1-based)")
    sp.add_argument("--lam", type=_int_list, required=True, help="dominant weight, e.g. 1,0")

    sp = sub.add_parser("pair", help="Lusztig pairing of two elements")
    common(sp, word=False)
    sp.add_argument("--x", required=True, help="element such as 'f1*f2 - q*f2*f1'")
    sp.add_argument("--y", required=True)

    sp = sub.add_parser("twist", help="apply the twist automorphism of the cell")
    common(sp)
    sp.add_argument("--element", required=True)
    sp.add_argument("--lam", type=_int_list, help="denominator [D_{w lam, lam}]^-1")
    sp.add_argument("--n", type=int, default=1, help="number of applications")

    sp = sub.add_parser("period", help="compare eta^n(x) with x")
    common(sp)
    sp.add_argument("--element", required=True)
    sp.add_argument("--n", type=int, default=6)

    sp = sub.add_parser("mutate", help="mutate a quantum seed along a path")
    common(sp)
    sp.add_argument("--path", type=_int_list, required=True, help="1-based directions")
    sp.add_argument("--pair", help="JSON file with 'lambda' and 'btilde' instead of a cell seed")

    sp = sub.add_parser("seed", help="initial quantum seed of a unipotent cell")
    common(sp)
    sp.add_argument("--exchange", action="store_true", help="also check each exchange in the cell")

    sp = sub.add_parser("verify", help="run the invariant suites")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--module", action="append", default=[])
    sp.add_argument("--format", choices=("json", "text"), default="text")
    return p


# helpers -----------------------------------------------------------------------

def _root_datum(args):
    try:
        return cartan_type(args.type)
    except RootDatumError as err:
        raise UsageError(str(err))


def _word(rd, text):
    if text is None:
        return rd.longest_word
    word = parse_word(text)
    if any(not 0 <= i < rd.rank for i in word):
        raise UsageError(f"word letters must lie in 1..{rd.rank}")
    if not is_reduced(rd, word):
        raise UsageError(f"{text} is not a reduced word")
    return word


def _weight(rd, lam):
    if len(lam) != rd.rank or any(c < 0 for c in lam):
        raise UsageError(f"--lam needs {rd.rank} non-negative entries")
    return tuple(lam)


def _parse(rd, text):
    try:
        return parse_element(rd, text)
    except (ValueError, SyntaxError) as err:
        raise UsageError(f"cannot parse element {text!r}: {err}")


def _cell_element(args, rd, w):
    x = CellElement.from_element(w, _parse(rd, args.element))
    lam = getattr(args, "lam", None)
    if lam:
        x = (CellElement.minor_inverse(w, _weight(rd, lam)) * x).canonical()
    return x


def _seed_json(seed: QuantumSeed) -> dict:
    return seed.to_json()


# verbs -------------------------------------------------------------------------

def cmd_basis(args):
    rd = _root_datum(args)
    word = _word(rd, args.word)
    if not rd.element_from_word(word) == rd.longest_element():
        raise UsageError("basis labels need a reduced word of the longest element")
    config.check_height(args.height)
    rows = []
    for xi in degrees_up_to(rd, args.height):
        for lab, g in dual_canonical_basis(rd, xi, word):
            rows.append({"degree": list(xi), "label": list(lab.c), "element": str(g)})
    data = {"schema": SCHEMA_VERSION, "type": args.type, "word": [i + 1 for i in word],
            "height": args.height, "basis": rows}
    text = "\n".join(f"{r['degree']} {r['label']}: {r['element']}" for r in rows)
    return data, text


def cmd_minor(args):
    rd = _root_datum(args)
    lam = _weight(rd, args.lam)
    w = rd.element_from_word(_word(rd, args.left))
    w2 = rd.element_from_word(_word(rd, args.right))
    d = quantum_minor(w, w2, lam)
    data = {"schema": SCHEMA_VERSION, "type": args.type, "lam": list(lam),
            "left": list(w.one_based()), "right": list(w2.one_based()), "minor": d.to_json()}
    return data, str(d)


def cmd_pair(args):
    rd = _root_datum(args)
    s = lusztig_pair(_parse(rd, args.x), _parse(rd, args.y))
    return {"schema": SCHEMA_VERSION, "type": args.type, "value": str(s)}, str(s)


def cmd_twist(args):
    rd = _root_datum(args)
    w = rd.element_from_word(_word(rd, args.word))
    x = _cell_element(args, rd, w)
    y = twist_power(x, args.n) if args.n != 1 else twist_auto(x)
    data = {"schema": SCHEMA_VERSION, "type": args.type, "n": args.n,
            "input": x.to_json(), "output": y.to_json()}
    return data, _cell_text(y)


def _cell_text(x) -> str:
    data = x.to_json()
    terms = " + ".join(f"({t['coeff']})*G{t['label']}" for t in data["terms"]) or "0"
    return f"[D_{tuple(data['denominator'])}]^-1 * ({terms})"


def cmd_period(args):
    rd = _root_datum(args)
    w = rd.element_from_word(_word(rd, args.word))
    x = _cell_element(args, rd, w)
    r = periodicity_check(x, args.n)
    data = {"schema": SCHEMA_VERSION, "type": args.type, "n": args.n,
            "identity": r["identity"], "matches_target": r["matches"],
            "result": r["result"].to_json(), "expected": r["expected"].to_json()}
    text = "\n".join([f"identity: {str(r['identity']).lower()}",
                      f"matches_target: {str(r['matches']).lower()}",
                      f"result: {_cell_text(r['result'])}"])
    return data, text


def _load_seed(args, rd):
    if args.pair:
        with open(args.pair) as fh:
            return seed_from_pair(CompatiblePair.from_json(json.load(fh)))
    word = _word(rd, args.word)
    return initial_seed(rd.element_from_word(word), word)


def cmd_mutate(args):
    rd = _root_datum(args)
    seed = _load_seed(args, rd)
    path = [k - 1 for k in args.path]
    if any(not 0 <= k < seed.exchangeable for k in path):
        raise UsageError(f"path directions must lie in 1..{seed.exchangeable}")
    new = mutate_path(seed, path)
    data = {"schema": SCHEMA_VERSION, "type": args.type, "seed": _seed_json(new),
            "returns_to_initial": new.pair == seed.pair
            and all(a == b for a, b in zip(new.variables, seed.variables))}
    text = "\n".join([f"path: {list(args.path)}",
                      f"labels: {list(new.labels)}",
                      f"lambda: {[list(r) for r in new.pair.lam]}",
                      f"btilde: {[list(r) for r in new.pair.btilde]}",
                      f"returns_to_initial: {str(data['returns_to_initial']).lower()}"])
    return data, text


def cmd_seed(args):
    rd = _root_datum(args)
    word = _word(rd, args.word)
    seed = initial_seed(rd.element_from_word(word), word)
    data = {"schema": SCHEMA_VERSION, "type": args.type, "seed": _seed_json(seed)}
    lines = [f"labels: {list(seed.labels)}",
             f"lambda: {[list(r) for r in seed.pair.lam]}",
             f"btilde: {[list(r) for r in seed.pair.btilde]}"]
    if args.exchange:
        checks = []
        for k in range(seed.exchangeable):
            r = verify_exchange_in_algebra(seed, k)
            r = {key: (v if isinstance(v, (bool, int)) else _cell_text(v)) for key, v in r.items()}
            checks.append(r)
            lines.append(f"exchange {k + 1}: " + ", ".join(
                f"{key}={str(v).lower()}" for key, v in sorted(r.items()) if isinstance(v, bool)))
        data["exchanges"] = checks
    return data, "\n".join(lines)


def cmd_verify(args):
    from .invariants import SUITES, run_suite
    unknown = [m for m in args.module if m not in SUITES]
    if unknown:
        raise UsageError(f"unknown module {unknown[0]}; choose from {', '.join(SUITES)}")
    if not args.all and not args.module:
        raise UsageError("verify needs --all or --module")
    results = []
    lines = []
    for mod, prop, witness in run_suite(None if args.all else args.module):
        results.append({"module": mod, "property": prop, "passed": witness is None,
                        "witness": witness})
        status = "PASS" if witness is None else "FAIL"
        lines.append(f"{status} {mod}.{prop}" + ("" if witness is None else f"  witness: {witness}"))
        if args.format == "text":
            print(lines[-1], flush=True)
    failed = sum(not r["passed"] for r in results)
    data = {"schema": SCHEMA_VERSION, "results": results, "failed": failed}
    return data, None if args.format == "text" else "", (3 if failed else 0)


COMMANDS = {"basis": cmd_basis, "minor": cmd_minor, "pair": cmd_pair, "twist": cmd_twist,
            "period": cmd_period, "mutate": cmd_mutate, "seed": cmd_seed, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = getattr(args, "height_cap", None)
    if cap is None and args.verb in ("twist", "period", "seed", "mutate"):
        cap = config.SETTINGS.twist_height_cap
    try:
        with config.height_cap(cap) if cap else contextlib.nullcontext():
            out = COMMANDS[args.verb](args)
    except UsageError as err:
        parser.print_usage(sys.stderr)
        print(f"qtwist: error: {err}", file=sys.stderr)
        return 2
    except (HeightCapError, CanonicalBasisError, ArithmeticError, ValueError, OSError) as err:
        payload = {"error": type(err).__name__, "message": str(err), "verb": args.verb}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
        return 1
    data, text = out[0], out[1]
    status = out[2] if len(out) > 2 else 0
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=1))
    elif text:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
