"""Command line front end.

Four subcommands: ``invariants`` reports diagram invariants of a braid
closure or pretzel, ``nf`` prints Garside normal forms and decides word
equality, ``homfly`` prints the two-variable polynomial with its braid
index bound, and ``certify`` runs the no-Seifert-fibered-surgery pipeline
for one parameter pair or a parameter grid.

Exit codes: 0 success (certified, for ``certify``), 1 inconclusive
certification, 2 usage or parameter error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys

from .braid import BraidWord, braids_equal, normal_form, parse_braid
from .certify import CertificateReport, certify_no_sfs
from .diagram import (
    LinkDiagram,
    braid_closure,
    component_count,
    determinant,
    is_positive,
    pretzel_diagram,
    seifert_circle_count,
    signature,
    writhe,
)
from .homfly import homfly, mfw_bound
from .invariants import InvariantRecord, positive_genus, rasmussen_positive

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _parse_word(args: argparse.Namespace) -> BraidWord:
    if args.strands is None:
        raise ValueError("braid input needs a strand count (-n)")
    return parse_braid(args.braid, args.strands)


def _diagram_from_args(args: argparse.Namespace) -> LinkDiagram:
    if args.braid is not None:
        return braid_closure(_parse_word(args))
    twists = []
    for tok in args.pretzel.split(","):
        tok = tok.strip()
        try:
            twists.append(int(tok))
        except ValueError:
            raise ValueError(f"bad pretzel twist count {tok!r}: not an integer") from None
    return pretzel_diagram(twists)


def _emit(text: str, out: str | None):
    if out:
        pathlib.Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def invariant_record(d: LinkDiagram) -> InvariantRecord:
    """Compute every invariant the engines certify for this diagram,
    collecting a note for each one they cannot."""
    comps = component_count(d)
    pos = is_positive(d)
    notes: list[str] = []
    sig = None
    if comps == 1:
        sig = signature(d)
    else:
        notes.append(f"signature: needs a knot, diagram has {comps} components")
    ras = gen = sli = None
    if comps == 1 and pos:
        gen = positive_genus(d)
        ras = rasmussen_positive(d)
        sli = gen
    elif comps == 1:
        notes.append("s, genus, slice genus: certified only for positive diagrams")
    else:
        notes.append("s, genus, slice genus: need a positive knot diagram")
    return InvariantRecord(
        crossings=len(d.crossings),
        components=comps,
        seifert_circles=seifert_circle_count(d),
        writhe=writhe(d),
        positive=pos,
        determinant=determinant(d),
        signature=sig,
        rasmussen=ras,
        genus=gen,
        slice_genus=sli,
        notes=tuple(notes),
    )


def _cmd_invariants(args: argparse.Namespace) -> int:
    record = invariant_record(_diagram_from_args(args))
    if args.json:
        _emit(json.dumps(dataclasses.asdict(record), indent=2, sort_keys=True), args.out)
        return EXIT_OK
    lines = [
        f"crossings:       {record.crossings}",
        f"components:      {record.components}",
        f"seifert circles: {record.seifert_circles}",
        f"writhe:          {record.writhe}",
        f"positive:        {'yes' if record.positive else 'no'}",
        f"determinant:     {record.determinant}",
    ]
    for label, value in (("signature", record.signature), ("s", record.rasmussen),
                         ("genus", record.genus), ("slice genus", record.slice_genus)):
        if value is not None:
            lines.append(f"{label + ':':<17}{value}")
    for note in record.notes:
        lines.append(f"unavailable: {note}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_nf(args: argparse.Namespace) -> int:
    word = _parse_word(args)
    nf = normal_form(word)
    if args.equal is not None:
        other = parse_braid(args.equal, args.strands)
        same = braids_equal(word, other)
        if args.json:
            _emit(json.dumps({"equal": same}), args.out)
        else:
            _emit("equal" if same else "not equal", args.out)
        return EXIT_OK
    factors = [" ".join(str(i + 1) for i in f.reduced_word()) for f in nf.factors]
    if args.json:
        payload = {
            "strands": nf.strands,
            "infimum": nf.infimum,
            "supremum": nf.supremum,
            "canonical_length": nf.canonical_length,
            "factors": factors,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        return EXIT_OK
    lines = [
        f"strands:          {nf.strands}",
        f"infimum:          {nf.infimum}",
        f"canonical length: {nf.canonical_length}",
    ]
    for k, f in enumerate(factors, 1):
        lines.append(f"factor {k}: {f}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_homfly(args: argparse.Namespace) -> int:
    poly = homfly(_parse_word(args))
    bound = mfw_bound(poly)
    if args.json:
        payload = {
            "polynomial": str(poly),
            "terms": [[i, j, c] for i, j, c in poly.terms()],
            "mfw_bound": bound,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        return EXIT_OK
    _emit(f"polynomial: {poly}\nmfw bound:  {bound}", args.out)
    return EXIT_OK


def _summarize(report: CertificateReport) -> str:
    par = report.parameters
    head = f"P({par['p']},{par['q']},{par['q']})  family={report.family}"
    lines = [head]
    for slope in report.slopes:
        rules = ", ".join(f"{v.rule}:{v.conclusion}" for v in slope.verdicts)
        mark = "excluded" if slope.excluded else "OPEN"
        lines.append(f"  r={slope.candidate.r:>3}  {mark:<9} [{rules}]")
    lines.append(f"conclusion: {report.conclusion}")
    return "\n".join(lines)


def _parse_range(text: str, name: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"bad {name} range {text!r}: expected MIN..MAX") from None
    if a > b:
        raise ValueError(f"bad {name} range {text!r}: empty")
    return range(a, b + 1)


def _cmd_certify_grid(args: argparse.Namespace) -> int:
    p_range = _parse_range(args.grid[0], "first-parameter")
    q_range = _parse_range(args.grid[1], "q")
    if p_range.start < 2 or q_range.start < 2:
        raise ValueError("grid parameters start at 2")
    out_dir = pathlib.Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    cells = []
    all_certified = True
    ran_any = False
    for p in p_range:
        for q in q_range:
            if q % 2 == 0:
                cells.append({"p": p, "q": q, "status": "skipped",
                              "reason": "q even: P(p,q,q) is not a knot"})
                continue
            report = certify_no_sfs(p, q)
            ran_any = True
            all_certified = all_certified and report.certified
            cells.append({"p": p, "q": q,
                          "status": "certified" if report.certified else "inconclusive",
                          "slopes": len(report.slopes)})
            if out_dir:
                path = out_dir / f"certificate-p{p}-q{q}.json"
                path.write_text(report.to_json() + "\n", encoding="utf-8")
    if args.json:
        print(json.dumps({"grid": cells}, indent=2, sort_keys=True))
    else:
        for cell in cells:
            status = cell["status"]
            extra = (f"({cell['slopes']} slopes)" if "slopes" in cell
                     else f"({cell['reason']})")
            print(f"p={cell['p']} q={cell['q']}: {status} {extra}")
    if not ran_any:
        raise ValueError("grid contains no odd-q cells to certify")
    return EXIT_OK if all_certified else EXIT_INCONCLUSIVE


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.grid:
        if args.params:
            raise ValueError("give either two parameters or --grid, not both")
        return _cmd_certify_grid(args)
    if len(args.params) != 2:
        raise ValueError("certify needs two parameters: FIRST Q (or --grid)")
    first, q = args.params
    report = certify_no_sfs(first, q)
    if args.out:
        pathlib.Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
    print(report.to_json() if args.json else _summarize(report))
    return EXIT_OK if report.certified else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", metavar="PATH",
                        help="write the result to PATH (a directory for --grid)")
    common.add_argument("--seed", type=int, metavar="U64",
                        help="seed for randomized runs; accepted everywhere for "
                             "reproducible scripting")

    parser = argparse.ArgumentParser(
        prog="knotcert",
        description="Exact knot invariants and Seifert fibered surgery "
                    "obstruction certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", parents=[common],
                         help="invariants of a braid closure or pretzel diagram")
    src = inv.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", metavar="WORD",
                     help="whitespace-separated signed generator indices, e.g. '1 1 1'")
    src.add_argument("--pretzel", metavar="T1,T2,...",
                     help="comma-separated signed twist counts, e.g. '3,3,3'")
    inv.add_argument("-n", "--strands", type=int, help="strand count for --braid")
    inv.set_defaults(func=_cmd_invariants)

    nf = sub.add_parser("nf", parents=[common],
                        help="Garside normal form, or word equality with --equal")
    nf.add_argument("--braid", metavar="WORD", required=True)
    nf.add_argument("-n", "--strands", type=int, required=True)
    nf.add_argument("--equal", metavar="WORD2",
                    help="second word; prints whether both represent the same braid")
    nf.set_defaults(func=_cmd_nf)

    hom = sub.add_parser("homfly", parents=[common],
                         help="two-variable polynomial of a braid closure")
    hom.add_argument("--braid", metavar="WORD", required=True)
    hom.add_argument("-n", "--strands", type=int, required=True)
    hom.set_defaults(func=_cmd_homfly)

    cert = sub.add_parser("certify", parents=[common],
                          help="certify that P(first,q,q) admits no Seifert "
                               "fibered surgery")
    cert.add_argument("params", nargs="*", type=int, metavar="PARAM",
                      help="the pretzel parameters: FIRST Q")
    cert.add_argument("--grid", nargs=2, metavar=("PMIN..PMAX", "QMIN..QMAX"),
                      help="certify a whole parameter rectangle")
    cert.set_defaults(func=_cmd_certify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
