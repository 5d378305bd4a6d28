"""Command-line interface: reproducible batch workflows over diagram documents.

Every command reads a document from a file argument (or standard input when
the argument is ``-``) and writes deterministic output to standard output.
Exit codes: 0 success, 1 domain failure (for example ``--require-yes`` with a
certification that is not Yes, or an invalid coloring under ``validate``),
2 input errors (bad flags, malformed documents).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators, invariants, rewrite, tpdio
from .coloring import (
    count_triplane_colorings,
    is_transitive,
    triplane_colorings,
)
from .errors import MoveError, TpdParseError, TpkError
from .model import TriState, induced_matching
from .render import render
from .rewrite import Move, MoveKind, SearchBudget


def _read_document(path: str) -> tpdio.TpdDocument:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return tpdio.parse(text)


def _budget(args) -> SearchBudget:
    depth = args.depth
    if depth is None:
        depth = int(os.environ.get("TPK_BUDGET_DEPTH", SearchBudget.max_depth))
    return SearchBudget(max_depth=depth, max_states=args.states)


def _cmd_validate(args) -> int:
    doc = _read_document(args.file)
    d = doc.diagram
    print(f"bridges {d.bridges}")
    for i in (1, 2, 3):
        t = d.tangle(i)
        pairs = " ".join(f"{a}-{b}" for a, b in induced_matching(t).pairs)
        print(f"tangle {i} letters {len(t.braid.word)} matching {pairs}")
    for i in (1, 2, 3):
        l = invariants.sector_link(d, i)
        print(f"sector {i} {d.sector(i).value} components {l.components}")
    ok = True
    if doc.coloring is None:
        print("coloring none")
    else:
        from .coloring import coloring_valid_on

        valid = coloring_valid_on(d, doc.coloring)
        for i, v in enumerate(valid, start=1):
            if not v:
                print(f"coloring does-not-extend tangle {i}")
        ok = all(valid)
        print(f"coloring valid {str(ok).lower()} transitive {str(is_transitive(doc.coloring)).lower()}")
    print(f"valid {str(ok).lower()}")
    return 0 if ok else 1


def _cmd_colorings(args) -> int:
    doc = _read_document(args.file)
    if args.transitive_only or args.list:
        all_colorings = triplane_colorings(doc.diagram)
        if args.transitive_only:
            all_colorings = [c for c in all_colorings if is_transitive(c)]
        print(f"colorings {len(all_colorings)}")
        if args.list:
            for c in all_colorings:
                print("coloring " + " ".join(str(x) for x in c.bottom))
    else:
        print(f"colorings {count_triplane_colorings(doc.diagram)}")
    return 0


def _report_text(rep: invariants.CoverReport) -> str:
    lines = [f"bridges {rep.bridges}"]
    lines.append(f"genus {rep.genus}" if rep.genus is not None else "genus undefined")
    if rep.params is not None:
        p = rep.params
        lines.append(f"params {p.g} {p.k1} {p.k2} {p.k3}")
        lines.append(f"euler_x {rep.euler_x}")
    else:
        lines.append("params undefined")
        lines.append("euler_x undefined")
    lines.append(f"branch_euler {rep.branch_euler}")
    lines.append(f"branch_components {rep.branch_components}")
    for s in rep.sectors:
        label = s.label if s.label is not None else "-"
        lines.append(
            f"sector {s.index} {s.kind.value} components {s.components} "
            f"colorings {s.colorings} certified {s.certified_unlink.value} label {label}"
        )
    for sing in rep.singularities:
        lines.append(f"singularity {sing.sector} components {sing.components} kind {sing.kind}")
    if rep.coloring_transitive is None:
        lines.append("coloring none")
    else:
        lines.append(f"coloring transitive {str(rep.coloring_transitive).lower()}")
    for diag in rep.diagnostics:
        lines.append(f"diagnostic {diag}")
    return "".join(line + "\n" for line in lines)


def _report_json(rep: invariants.CoverReport) -> str:
    payload = {
        "bridges": rep.bridges,
        "genus": rep.genus,
        "params": None
        if rep.params is None
        else {"g": rep.params.g, "k1": rep.params.k1, "k2": rep.params.k2, "k3": rep.params.k3},
        "euler_x": rep.euler_x,
        "branch_euler": rep.branch_euler,
        "branch_components": rep.branch_components,
        "sectors": [
            {
                "index": s.index,
                "kind": s.kind.value,
                "components": s.components,
                "colorings": s.colorings,
                "certified_unlink": s.certified_unlink.value,
                "label": s.label,
            }
            for s in rep.sectors
        ],
        "singularities": [
            {"sector": s.sector, "components": s.components, "kind": s.kind}
            for s in rep.singularities
        ],
        "coloring": {
            "present": rep.coloring_transitive is not None,
            "transitive": rep.coloring_transitive,
        },
        "diagnostics": list(rep.diagnostics),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_invariants(args) -> int:
    doc = _read_document(args.file)
    rep = invariants.cover_report(doc.diagram, doc.coloring, _budget(args))
    sys.stdout.write(_report_json(rep) if args.json else _report_text(rep))
    return 0


def _cmd_certify(args) -> int:
    doc = _read_document(args.file)
    link = invariants.sector_link(doc.diagram, args.sector)
    res = rewrite.certify_unlink(link, _budget(args))
    print(f"certified {res.state.value}")
    print(f"states {res.states_explored}")
    if res.certificate is not None:
        sys.stdout.write(rewrite.format_certificate(res.certificate))
    if args.require_yes and res.state is not TriState.YES:
        return 1
    return 0


def _cmd_moves(args) -> int:
    doc = _read_document(args.file)
    cert_text = open(args.apply, "r", encoding="utf-8").read()
    moves = rewrite.parse_certificate(cert_text)
    d, c = doc.diagram, doc.coloring
    for m in moves:
        if m.kind is MoveKind.PERTURB:
            d, c = rewrite.perturb_diagram(
                d, c, args.tangle, abs(m.gen) // 2, 1 if m.gen > 0 else -1
            )
        elif m.kind is MoveKind.DEPERTURB:
            d, c = rewrite.deperturb_diagram(d, c, args.tangle, m)
        else:
            tangles = list(d.tangles)
            tangles[args.tangle - 1] = rewrite.apply_move(d.tangle(args.tangle), m)
            d = type(d)(d.bridges, tuple(tangles), d.sectors)
            if c is not None:
                from .coloring import coloring_from_bottom

                c = coloring_from_bottom(d.tangle(1), c.bottom)
    sys.stdout.write(tpdio.serialize(tpdio.document_for(d, c, doc.metadata)))
    return 0


def _cmd_render(args) -> int:
    doc = _read_document(args.file)
    sys.stdout.write(render(doc, args.format))
    return 0


def _cmd_generate(args) -> int:
    if args.family == "unlink":
        d, c = generators.unlink_diagram(args.n, args.b, colored=not args.uncolored)
        sys.stdout.write(tpdio.serialize(tpdio.document_for(d, c)))
    elif args.family == "pairing":
        m = generators.generate_pairing(args.b, args.variant)
        for a, b in m.pairs:
            print(f"pair {a} {b}")
    else:  # lemma-family
        d, c = generators.lemma_family_diagram(args.k, args.g)
        sys.stdout.write(tpdio.serialize(tpdio.document_for(d, c)))
    return 0


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--depth", type=int, default=None, help="search depth bound (default: TPK_BUDGET_DEPTH or 48)")
    p.add_argument("--states", type=int, default=SearchBudget.max_states, help="search state bound")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpk",
        description="Fox 3-colored tri-plane diagrams: colorings, cover invariants, rewriting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check model invariants of a document")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("colorings", help="count (and list) diagram colorings")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--transitive-only", action="store_true")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=_cmd_colorings)

    p = sub.add_parser("invariants", help="full cover-invariant report")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--json", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("certify-unlink", help="tri-state unlink certification of a sector link")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--sector", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--require-yes", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("moves", help="apply a move certificate to one tangle")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--apply", required=True, metavar="CERT", help="certificate file")
    p.add_argument("--tangle", type=int, required=True, choices=(1, 2, 3))
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("render", help="draw the diagram")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("generate", help="emit documents of the parametric families")
    gsub = p.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("unlink", help="n-component unlink in b-bridge position")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--uncolored", action="store_true")
    g.set_defaults(func=_cmd_generate)
    g = gsub.add_parser("pairing", help="boundary pairing with connected union")
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--variant", choices=("odd", "even"), default="odd")
    g.set_defaults(func=_cmd_generate)
    g = gsub.add_parser("lemma-family", help="colored unlink family, doubled diagram")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--g", type=int, required=True)
    g.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TpdParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MoveError, TpkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
