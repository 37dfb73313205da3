"""Command-line front end.

Exit status: 0 when every reported check holds, 1 when some check fails
(the report is still printed), 2 on unreadable or ill-formed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import find_isomorphism
from .congruence import enumerate_congruences, enumerate_filters, eval_t_term
from .errors import MissingOperation, PreconditionUnverified, TensekiError
from .kalman import center_C, equivalence_report, kalman_K
from .nelson import fv_kalman
from .profiles import check_profile
from .specfile import dump, load
from .tense import TENSE_SYMBOLS, enumerate_tense_structures


class InputError(Exception):
    pass


def _write(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_report(args, report, alg, profile):
    data = report.to_json(alg, profile)
    if args.json:
        return json.dumps(data, indent=2) + "\n"
    lines = [f"algebra {data['algebra']}  profile {data['profile']}"]
    width = max((len(a["id"]) for a in data["axioms"]), default=0)
    for a in data["axioms"]:
        status = "holds" if a["holds"] else "FAILS"
        w = f"  at ({', '.join(map(str, a['witness']))})" if a["witness"] else ""
        lines.append(f"  {a['id']:<{width}}  {status}{w}")
    lines.extend(f"  note: {n}" for n in report.notes)
    s = data["summary"]
    lines.append(f"checked {s['checked']}, failed {s['failed']}")
    return "\n".join(lines) + "\n"


def cmd_check(args):
    alg = load(args.file)
    profile = args.profile or alg.profile
    rep = check_profile(alg, profile)
    _write(args, _render_report(args, rep, alg, profile))
    return 0 if rep.holds else 1


def _emit_algebra(args, alg):
    if args.json:
        _write(args, json.dumps({"algebra": alg.name, "profile": alg.profile,
                                 "elements": list(alg.names), "spec": dump(alg)}, indent=2) + "\n")
    else:
        _write(args, dump(alg))
    return 0


def cmd_kalman(args):
    alg = load(args.file)
    return _emit_algebra(args, fv_kalman(alg) if args.fv else kalman_K(alg))


def cmd_center(args):
    return _emit_algebra(args, center_C(load(args.file)))


def cmd_congruences(args):
    alg = load(args.file)
    names = alg.names
    if args.as_ == "congruences":
        items = [[[names[x] for x in b] for b in th.blocks()] for th in enumerate_congruences(alg)]
        render = lambda it: " | ".join("{" + " ".join(b) + "}" for b in it)
    else:
        if args.as_ == "filters":
            kind = "tense_one_filter" if alg.has(*TENSE_SYMBOLS) else "one_filter"
        else:
            kind = "centered_tense_ds"
        items = [[names[x] for x in sorted(w.members)] for w in enumerate_filters(alg, kind)]
        render = lambda it: "{" + " ".join(it) + "}"
    if args.json:
        text = json.dumps({"algebra": alg.name, "as": args.as_, "count": len(items), "items": items}, indent=2) + "\n"
    else:
        text = "".join(render(it) + "\n" for it in items) + f"count {len(items)}\n"
    _write(args, text)
    return 0


def cmd_verify_equivalence(args):
    alg = load(args.file)
    side = args.side or ("ki" if alg.has("neg") else "dli")
    rep = equivalence_report(alg, side)
    _write(args, _render_report(args, rep, alg, alg.profile))
    return 0 if rep.holds else 1


def cmd_enumerate_tense(args):
    alg = load(args.file)
    quads = enumerate_tense_structures(alg, with_T0=not args.no_t0, limit=args.limit)
    names = alg.names
    rows = [{s: [names[v] for v in getattr(q, s)] for s in TENSE_SYMBOLS} for q in quads]
    if args.json:
        text = json.dumps({"algebra": alg.name, "count": len(rows), "quadruples": rows}, indent=2) + "\n"
    else:
        text = "".join("  ".join(f"{s}=" + ",".join(r[s]) for s in TENSE_SYMBOLS) + "\n" for r in rows)
        text += f"count {len(rows)}\n"
    _write(args, text)
    return 0


def cmd_iso(args):
    a, b = load(args.first), load(args.second)
    iso = find_isomorphism(a, b)
    if args.json:
        pairs = None if iso is None else {a.names[x]: b.names[y] for x, y in enumerate(iso.map)}
        text = json.dumps({"source": a.name, "target": b.name, "map": pairs}, indent=2) + "\n"
    elif iso is None:
        text = f"no isomorphism {a.name} -> {b.name}\n"
    else:
        text = "".join(f"{a.names[x]} -> {b.names[y]}\n" for x, y in enumerate(iso.map))
    _write(args, text)
    return 0 if iso is not None else 1


def cmd_t_term(args):
    u = load(args.file)
    try:
        x, y, z = (u.lattice.index(e) for e in (args.x, args.y, args.z))
    except (KeyError, ValueError) as exc:
        raise InputError(f"unknown element: {exc}") from None
    v = u.names[eval_t_term(u, x, y, z)]
    text = json.dumps({"x": args.x, "y": args.y, "z": args.z, "t": v}) + "\n" if args.json else v + "\n"
    _write(args, text)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("-o", "--output", metavar="FILE", default=argparse.SUPPRESS,
                        help="write output to FILE instead of stdout")

    p = argparse.ArgumentParser(prog="tenseki", parents=[common],
                                description="Finite tense algebras: checks and constructions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="check an algebra against a profile")
    s.add_argument("file")
    s.add_argument("--profile")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("kalman", parents=[common], help="emit K(A)")
    s.add_argument("file")
    s.add_argument("--fv", action="store_true", help="use the Fidel-Vakarelov implication (Heyting input)")
    s.set_defaults(func=cmd_kalman)

    s = sub.add_parser("center", parents=[common], help="emit C(U)")
    s.add_argument("file")
    s.set_defaults(func=cmd_center)

    s = sub.add_parser("congruences", parents=[common], help="list congruences, filters or deductive systems")
    s.add_argument("file")
    s.add_argument("--as", dest="as_", default="congruences",
                   choices=("congruences", "filters", "deductive-systems"))
    s.set_defaults(func=cmd_congruences)

    s = sub.add_parser("verify-equivalence", parents=[common], help="alpha / beta round trip")
    s.add_argument("file")
    s.add_argument("--side", choices=("dli", "ki"))
    s.set_defaults(func=cmd_verify_equivalence)

    s = sub.add_parser("enumerate-tense", parents=[common], help="list tense quadruples")
    s.add_argument("file")
    s.add_argument("--no-t0", action="store_true")
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_enumerate_tense)

    s = sub.add_parser("iso", parents=[common], help="find the least isomorphism")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("t-term", parents=[common], help="evaluate ((x∧z)⇒y)⇒(x⇒y)")
    s.add_argument("file")
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("z")
    s.set_defaults(func=cmd_t_term)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.json = getattr(args, "json", False)
    args.output = getattr(args, "output", None)
    try:
        return args.func(args)
    except PreconditionUnverified as exc:
        print(f"tenseki: {exc}", file=sys.stderr)
        for r in exc.report.failed if exc.report is not None else ():
            print(f"  {r.id} fails at {r.witness}", file=sys.stderr)
        return 2
    except (TensekiError, MissingOperation, InputError, OSError, ValueError) as exc:
        print(f"tenseki: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
