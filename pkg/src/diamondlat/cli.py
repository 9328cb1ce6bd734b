"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import json
import os
import sys

from . import birkhoff as bk
from . import diamond as dia
from . import lattice as lat
from . import pseudoroots as pr
from . import verify
from .ncpoly import wedderburn

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
# global flags may appear before or after the subcommand; the parsers share
# these actions, so defaults are filled in after parsing instead
GLOBAL_DEFAULTS = {"json": False, "seed": 0, "trials": None}


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _load_lattice(path):
    data = _load_json(path)
    try:
        return lat.FiniteLattice.from_json(data)
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"{path}: malformed lattice file ({exc})") from None


def _load_arcs(path, L=None):
    data = _load_json(path)
    if isinstance(data, list):
        data = {"arcs": data}
    lattice_ref = data.get("lattice")
    if L is None:
        if lattice_ref is None:
            raise InputError("no lattice given: pass --lattice or set \"lattice\" in the arc file")
        if isinstance(lattice_ref, dict):
            L = lat.FiniteLattice.from_json(lattice_ref)
        else:
            ref = os.path.join(os.path.dirname(os.path.abspath(path)), lattice_ref)
            L = _load_lattice(ref)
    arcs = set()
    for pair in data.get("arcs", []):
        try:
            top, bottom = (L.index(v) if isinstance(v, str) else int(v) for v in pair)
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"{path}: bad arc {pair!r} ({exc})") from None
        if (top, bottom) not in L.covers:
            raise InputError(f"{path}: {pair!r} is not a cover arc of the lattice")
        arcs.add((top, bottom))
    return L, frozenset(arcs)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_lattice_check(args):
    data = _load_json(args.file)
    try:
        L = lat.FiniteLattice.from_json(data)
    except lat.LatticeError as exc:
        _emit(args, {"valid": False, "error": exc.to_json()}, f"valid lattice: no\n  {exc}")
        return EXIT_FAIL
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"{args.file}: malformed lattice file ({exc})") from None
    h = L.heights
    report = {
        "valid": True,
        "elements": L.n,
        "cover_arcs": len(L.covers),
        "height": h[L.top],
        "ranked": lat.is_ranked(L),
        "modular": lat.is_modular(L),
        "distributive": lat.is_distributive(L),
        "modularity_checks": lat.modularity_report(L),
    }
    text = "\n".join([
        "valid lattice: yes",
        f"elements: {L.n}",
        f"cover arcs: {len(L.covers)}",
        f"height: {h[L.top]}",
        f"ranked: {str(report['ranked']).lower()}",
        f"modular: {str(report['modular']).lower()}",
        f"distributive: {str(report['distributive']).lower()}",
    ])
    _emit(args, report, text)
    return EXIT_OK


def cmd_closure(args):
    L = _load_lattice(args.lattice) if args.lattice else None
    L, B = _load_arcs(args.arcs, L)
    payload = {"method": args.method, "input": dia.canonical_arcs(B)}
    try:
        if args.method == "naive":
            arcs = dia.closure_naive(L, B)
            packing = dia.packing_of_closed(L, arcs) if lat.is_modular(L) else None
            payload["packing"] = None if packing is None else [sorted(K) for K in packing]
        elif args.method == "mldc":
            arcs, packing = dia.closure_mldc(L, B)
            payload["packing"] = [sorted(K) for K in packing]
        else:
            DL, iso = bk.represent(L)
            inv = {v: k for k, v in enumerate(iso)}
            d_arcs, orders = bk.closure_dldc(DL, {(iso[a], iso[b]) for a, b in B})
            arcs = frozenset((inv[a], inv[b]) for a, b in d_arcs)
            payload["poset"] = DL.poset.to_json()
            payload["orders"] = [q.to_json() for q in orders]
    except dia.NotModularError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        if args.method == "dldc":
            raise InputError(f"dldc needs a distributive lattice: {exc}") from None
        raise
    payload["closure"] = dia.canonical_arcs(arcs)
    payload["generates_all"] = arcs == L.covers
    lines = [f"method: {args.method}", f"closure: {len(arcs)}/{len(L.covers)} arcs"]
    lines += [f"  {L.names[a]} -> {L.names[b]}" for a, b in sorted(arcs)]
    if payload.get("packing") is not None:
        lines.append("packing: " + "; ".join(
            "{" + ", ".join(L.names[x] for x in K) + "}" for K in payload["packing"]))
    if "orders" in payload:
        lines.append(f"quasi-orders: {len(payload['orders'])}")
    lines.append(f"generates all: {str(payload['generates_all']).lower()}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _load_set(path):
    try:
        return pr.load_elements(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: malformed quaternion set ({exc})") from None


def cmd_wedderburn(args):
    S = _load_set(args.set)
    f = wedderburn(S)
    _emit(args, {"degree": f.degree, "coefficients": f.to_json()}, f"f_S = {f}")
    return EXIT_OK


def cmd_pseudoroots(args):
    S = _load_set(args.set)
    try:
        PL = pr.build(S)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.arcs:
        _, B = _load_arcs(args.arcs, PL.lattice)
    else:
        B = PL.zero_arcs()
    rep = pr.rational_generation_check(PL, B)
    payload = {
        "polys": [p.to_json() for p in PL.polys],
        "generic": pr.generic_check(PL),
        "psi": PL.psi_table(),
        "check": rep.to_json(),
    }
    lines = [f"|S| = {len(S)}, {len(PL.polys)} Wedderburn polynomials, "
             f"generic: {str(payload['generic']).lower()}"]
    lines += [f"  [{k}] {p}" for k, p in enumerate(PL.polys)]
    lines.append("pseudo-roots:")
    lines += [f"  {r} -> {q}: {PL.psi[(r, q)]}" for r, q in sorted(PL.psi)]
    lines.append(rep.text())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_gen(args):
    try:
        L = lat.make_standard(args.family)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = json.dumps(L.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args):
    try:
        results = verify.run_suite(args.suite, seed=args.seed, trials=args.trials)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    _emit(args, [r.to_json() for r in results], "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable JSON on stdout")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--trials", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="diamondlat", parents=[common],
                                     description="Diamond closure and quaternion pseudo-roots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", parents=[common], help="lattice file operations")
    lsub = p.add_subparsers(dest="action", required=True)
    pc = lsub.add_parser("check", parents=[common], help="axioms and ranked/modular/distributive report")
    pc.add_argument("file")
    pc.set_defaults(func=cmd_lattice_check)

    p = sub.add_parser("closure", parents=[common], help="diamond closure of an arc set")
    p.add_argument("--method", choices=("naive", "mldc", "dldc"), default="naive")
    p.add_argument("--lattice")
    p.add_argument("--arcs", required=True)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("wedderburn", parents=[common], help="coefficients of f_S")
    p.add_argument("--set", required=True)
    p.set_defaults(func=cmd_wedderburn)

    p = sub.add_parser("pseudoroots", parents=[common], help="Wedderburn lattice, psi table, generation check")
    p.add_argument("--set", required=True)
    p.add_argument("--arcs")
    p.set_defaults(func=cmd_pseudoroots)

    p = sub.add_parser("gen", parents=[common], help="emit a corpus lattice file")
    p.add_argument("--family", required=True, help="e.g. boolean:3, chain:4, m3, n5, divisors:360, product(m3,chain:2)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="all", help=f"one of: {', '.join(verify.SUITES)}, all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
