"""Command-line front end.

Subcommands: ``pi0``, ``pi1``, ``homology``, ``components``, ``sr``.
Exit codes: 0 success, 1 parse or validation failure, 2 a bounded search
finished without a completeness certificate, 3 colimit conditions failed
after stretching (a bug guard).  Reports are deterministic for a fixed
input and configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import BinoidError, BoundExceeded, ConditionCheckFailed, IncompleteIdempotents
from .groupoid import skeletonize
from .homology import chain_complex, homology_of_complex
from .pi0 import complex_component_count, pi0_affine
from .presentation import DEFAULT_DEGREE_BOUND, BinoidPresentation
from .scheme import fundamental_groupoid, load_scheme
from .stanley_reisner import (
    SimplicialComplexData,
    geometric_realization_groupoid,
    sr_binoid,
    sr_fundamental_groups,
    sr_groupoid,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCOMPLETE = 2
EXIT_CONDITIONS = 3


def _load_document(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise BinoidError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise BinoidError(f"{path}: invalid JSON: {exc}") from exc


def _document_kind(doc) -> str:
    if "charts" in doc:
        return "scheme"
    if "facets" in doc:
        return "complex"
    if "gens" in doc:
        return "binoid"
    raise BinoidError("document is neither a binoid, a scheme, nor a complex")


def _emit(args, payload: dict, text_lines):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _group_str(comp) -> str:
    if comp.free_rank == 0:
        return "trivial"
    if comp.free_rank is not None:
        return f"free group of rank {comp.free_rank}"
    return f"unreduced presentation ({len(comp.generators)} generators, {len(comp.relators)} relators)"


def cmd_pi0(args) -> int:
    doc = _load_document(args.input)
    kind = _document_kind(doc)
    if kind == "binoid":
        pres = BinoidPresentation.from_dict(doc, completion_budget=args.completion_budget)
        pi0 = pi0_affine(pres, args.degree_bound)
        payload = {
            "components": pi0.size,
            "blocks": [
                {"label": b.label, "n": b.n, "points": b.size, "basis": list(b.basis)}
                for b in pi0.blocks
            ],
        }
        lines = [f"{pi0.size} components"]
        for b in pi0.blocks:
            lines.append(f"  block {b.label}: n={b.n}, {b.size} points")
            if args.verbose and b.basis:
                lines.append(f"    sign basis: {', '.join(b.basis)}")
        _emit(args, payload, lines)
        return EXIT_OK
    if kind == "scheme":
        scheme = load_scheme(doc, completion_budget=args.completion_budget)
        result = fundamental_groupoid(scheme, args.degree_bound)
        labels = [c.representative for c in result.groups.components]
        payload = {"components": len(labels), "labels": labels}
        lines = [f"{len(labels)} components"] + [f"  {lab}" for lab in labels]
        _emit(args, payload, lines)
        return EXIT_OK
    raise BinoidError("pi0 expects a binoid or scheme document")


def _pi1_payload(groups):
    return {
        "components": [
            {
                "representative": c.representative,
                "objects": c.object_count,
                "generators": list(c.generators),
                "relators": [
                    "".join(f"{n}^{s}" for n, s in rel) for rel in c.relators
                ],
                "free_rank": c.free_rank,
            }
            for c in groups.components
        ]
    }


def _pi1_lines(groups):
    lines = [f"{groups.component_count} component(s)"]
    for i, c in enumerate(groups.components, start=1):
        lines.append(f"  component {i}: {_group_str(c)}")
        if c.free_rank:
            lines.append(f"    generators: {', '.join(c.generators)}")
    return lines


def cmd_pi1(args) -> int:
    doc = _load_document(args.input)
    kind = _document_kind(doc)
    condition_report = ()
    if args.stanley_reisner or kind == "complex":
        complex_data = SimplicialComplexData.from_dict(doc)
        groups = sr_fundamental_groups(complex_data, full_relations=args.full_r2)
        dot_source = sr_groupoid(complex_data, full_relations=args.full_r2)
    elif kind == "scheme":
        scheme = load_scheme(doc, completion_budget=args.completion_budget)
        result = fundamental_groupoid(scheme, args.degree_bound)
        groups = result.groups
        dot_source = result.colimit_presentation
        condition_report = result.condition_report
    else:
        raise BinoidError("pi1 expects a scheme or complex document")
    if args.emit_dot:
        with open(args.emit_dot, "w", encoding="utf-8") as fh:
            fh.write(dot_source.to_dot())
            fh.write("\n")
    lines = _pi1_lines(groups)
    if args.verbose and condition_report:
        lines.append("colimit conditions after stretching:")
        for check in condition_report:
            lines.append(
                f"  I={list(check.index_set)} J={list(check.fixed_subset)} "
                f"-> {''.join(map(str, check.target))}: "
                f"{'pass' if check.passes else 'FAIL'}"
            )
    _emit(args, _pi1_payload(groups), lines)
    return EXIT_OK


def cmd_homology(args) -> int:
    doc = _load_document(args.input)
    if _document_kind(doc) != "scheme":
        raise BinoidError("homology expects a scheme document")
    scheme = load_scheme(doc, completion_budget=args.completion_budget)
    data = chain_complex(scheme, args.degree_bound)
    groups = homology_of_complex(data)
    if args.format == "csv":
        for p in range(1, data.top_degree + 1):
            print(f"# boundary d_{p}: {data.dimension(p - 1)} x {data.dimension(p)}")
            sys.stdout.write(data.boundary_csv(p))
        return EXIT_OK
    payload = {
        "homology": [
            {"degree": p, "rank": h.rank, "torsion": list(h.torsion)}
            for p, h in enumerate(groups)
        ]
    }
    lines = [
        f"H_{p} = {h if h.rank or h.torsion else '0'}" for p, h in enumerate(groups)
    ] + [f"H_p = 0 for p > {len(groups) - 1}"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_components(args) -> int:
    doc = _load_document(args.input)
    if _document_kind(doc) != "binoid":
        raise BinoidError("components expects a binoid document")
    pres = BinoidPresentation.from_dict(doc, completion_budget=args.completion_budget)
    if args.field == "C":
        count = complex_component_count(pres, args.degree_bound)
    else:
        count = pi0_affine(pres, args.degree_bound).size
    payload = {"field": args.field, "components": count}
    _emit(args, payload, [f"{count} components over {args.field}"])
    return EXIT_OK


def cmd_sr(args) -> int:
    doc = _load_document(args.input)
    if _document_kind(doc) != "complex":
        raise BinoidError("sr expects a complex document")
    complex_data = SimplicialComplexData.from_dict(doc)
    binoid = sr_binoid(complex_data)
    groupoid = sr_groupoid(complex_data, full_relations=args.full_r2)
    if args.geometric:
        groups = skeletonize(geometric_realization_groupoid(complex_data))
    else:
        groups = skeletonize(groupoid)
    if args.emit_dot:
        with open(args.emit_dot, "w", encoding="utf-8") as fh:
            fh.write(groupoid.to_dot())
            fh.write("\n")
    payload = {
        "binoid": binoid.to_dict(),
        "objects": len(groupoid.objects),
        "generating_isos": len(groupoid.gen_isos),
        "fundamental_groups": _pi1_payload(groups),
    }
    lines = [
        f"binoid: {len(binoid.gens)} generators, {len(binoid.relations)} zero relations",
        f"groupoid: {len(groupoid.objects)} objects, {len(groupoid.gen_isos)} generating isos",
    ] + _pi1_lines(groups)
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binoidtop",
        description=(
            "Topological invariants of real and complex realizations of "
            "commutative binoid schemes"
        ),
        epilog=(
            "exit codes: 0 ok, 1 input error, 2 incomplete bounded search, "
            "3 colimit conditions failed after stretching"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="path to a JSON document")
    common.add_argument(
        "--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND, dest="degree_bound"
    )
    common.add_argument(
        "--completion-budget", type=int, default=10_000, dest="completion_budget"
    )
    common.add_argument(
        "--format", choices=["text", "json", "csv"], default="text"
    )
    common.add_argument("--emit-dot", dest="emit_dot", metavar="PATH")
    common.add_argument("--full-r2", action="store_true", dest="full_r2")
    common.add_argument("-v", "--verbose", action="count", default=0)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("pi0", parents=[common], help="connected components").set_defaults(
        func=cmd_pi0
    )
    p1 = sub.add_parser("pi1", parents=[common], help="fundamental group per component")
    p1.add_argument(
        "--stanley-reisner",
        action="store_true",
        dest="stanley_reisner",
        help="treat the input as a simplicial complex",
    )
    p1.set_defaults(func=cmd_pi1)
    sub.add_parser("homology", parents=[common], help="integral homology").set_defaults(
        func=cmd_homology
    )
    pc = sub.add_parser("components", parents=[common], help="component count over R or C")
    pc.add_argument("--field", choices=["R", "C"], default="R")
    pc.set_defaults(func=cmd_components)
    ps = sub.add_parser("sr", parents=[common], help="Stanley-Reisner pipeline")
    ps.add_argument(
        "--geometric",
        action="store_true",
        help="fundamental groups of the geometric realization instead",
    )
    ps.set_defaults(func=cmd_sr)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BoundExceeded, IncompleteIdempotents) as exc:
        print(f"incomplete search: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except ConditionCheckFailed as exc:
        print(f"condition check failed: {exc}", file=sys.stderr)
        return EXIT_CONDITIONS
    except BinoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
