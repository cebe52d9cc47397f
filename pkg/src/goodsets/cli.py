"""Command line entry points: ``goodset`` for combinatorial analyses of
good-set files and ``curve`` for parametrized curves.

Exit codes: 0 success, 1 validation failure, 2 insufficient bound or
truncation, 3 usage error.  Machine output is JSON; ``--pretty`` adds a
human-readable summary.  Disagreement between colength methods also exits
nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import points as pt
from .apery import apery_window
from .colength import (
    colength,
    colength_r2_formula,
    colength_recursive_formula,
    ell_truncation,
)
from .core import (
    GoodSet,
    dump_goodset,
    frobenius,
    goodset_to_dict,
    load_goodset,
    normalize_conductor,
    validate_good_set,
)
from .curve import (
    curve_invariants_report,
    dual_value_set,
    load_curve,
    value_set,
)
from .duality import dual_transform, symmetry_check
from .errors import (
    BoundTooSmallError,
    ConductorNotMinimalError,
    CurveError,
    GoodSetError,
    TruncationError,
    ValidationError,
)
from .report import analyze_goodset, file_digest, report_json, write_report_files

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BOUND = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_point(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"cannot parse point {text!r}; expected a1,a2,...")


def _emit(data: dict, pretty_lines=None, pretty=False) -> None:
    sys.stdout.write(report_json(data))
    if pretty and pretty_lines:
        sys.stdout.write("\n".join(pretty_lines) + "\n")


def _run(fn) -> int:
    try:
        return fn() or EXIT_OK
    except (BoundTooSmallError, TruncationError) as exc:
        print(json.dumps({"error": "insufficient_bound", "message": str(exc)}))
        return EXIT_BOUND
    except ValidationError as exc:
        print(json.dumps(exc.details()))
        return EXIT_VALIDATION
    except (GoodSetError, CurveError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print(f"file not found: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE


# ---------------------------------------------------------------------------
# goodset


def main_goodset(argv=None) -> int:
    parser = _Parser(prog="goodset", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a good-set file")
    p.add_argument("file")
    p.add_argument(
        "--normalize",
        action="store_true",
        help="shrink a non-minimal conductor instead of failing",
    )
    p.add_argument("--out", help="write the (normalized) set to this path")

    p = sub.add_parser("analyze", help="full combinatorial report")
    p.add_argument("path")
    p.add_argument("--dir", action="store_true", help="batch over *.json in a directory")
    p.add_argument("--from-curve", action="store_true", help="path is a curve file")
    p.add_argument("--bound", help="bound b1,...,br (with --from-curve)")
    p.add_argument("--semigroup", help="good-set file with the ambient semigroup")
    p.add_argument("--check-all", action="store_true", help="run the full check battery")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--report-dir", help="write report.json, CSV tables and a figure here")

    p = sub.add_parser("dual", help="dual transform of a value set")
    p.add_argument("file")
    p.add_argument("--semigroup", required=True)
    p.add_argument("--check-all", action="store_true")
    p.add_argument("--out", help="path for the transform good-set file")

    p = sub.add_parser("colength", help="colength of nested value sets")
    p.add_argument("E")
    p.add_argument("D")

    p = sub.add_parser("apery", help="windowed Apery set enumeration")
    p.add_argument("file")
    p.add_argument("--alpha", required=True)
    p.add_argument("--hi")

    p = sub.add_parser("render", help="text or SVG grid of a good set")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--out")

    args = parser.parse_args(argv)
    return _run(lambda: _dispatch_goodset(args))


def _dispatch_goodset(args) -> int:
    if args.command == "validate":
        return _cmd_validate(args)
    if args.command == "analyze":
        return _cmd_analyze(args)
    if args.command == "dual":
        return _cmd_dual(args)
    if args.command == "colength":
        return _cmd_colength(args)
    if args.command == "apery":
        return _cmd_apery(args)
    if args.command == "render":
        return _cmd_render(args)
    raise AssertionError(args.command)


def _cmd_validate(args) -> int:
    try:
        E = load_goodset(args.file)
    except ConductorNotMinimalError:
        if not args.normalize:
            raise
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        pts_in = [tuple(int(x) for x in p) for p in data["points"]]
        labels = data.get("labels")
        provisional = GoodSet(
            r=int(data["r"]),
            labels=tuple(labels) if labels else tuple(range(1, int(data["r"]) + 1)),
            min=pt.meet_all(pts_in),
            conductor=pt.join_all(pts_in),
            small=frozenset(pts_in),
        )
        E = normalize_conductor(provisional)
    if args.out:
        dump_goodset(E, args.out)
    _emit({"valid": True, **goodset_to_dict(E)})
    return EXIT_OK


def _analyze_one(path, args):
    if args.from_curve:
        if not args.bound:
            raise CurveError("--from-curve requires --bound")
        curve = load_curve(path)
        E = value_set(curve, None, _parse_point(args.bound))
    else:
        E = load_goodset(path)
    S = load_goodset(args.semigroup) if args.semigroup else None
    return analyze_goodset(
        E,
        source=str(path),
        digest=file_digest(path),
        semigroup=S,
        check_all=args.check_all,
    ), E


def _cmd_analyze(args) -> int:
    if args.dir:
        base = Path(args.path)
        batch = {}
        for path in sorted(base.glob("*.json")):
            try:
                report, _ = _analyze_one(path, args)
                batch[path.name] = report
            except (GoodSetError, CurveError, json.JSONDecodeError) as exc:
                detail = exc.details() if isinstance(exc, ValidationError) else {
                    "error": type(exc).__name__,
                    "message": str(exc),
                }
                batch[path.name] = detail
        _emit({"batch": batch})
        return EXIT_OK
    report, E = _analyze_one(args.path, args)
    if args.report_dir:
        write_report_files(report, E, args.report_dir)
    pretty = [
        f"r={report['r']} min={report['min']} conductor={report['conductor']} "
        f"frobenius={report['frobenius']}",
        f"semigroup={report['is_semigroup']} "
        f"symmetric={report.get('symmetric', 'n/a')}",
        f"maximals={[m['point'] for m in report['maximals']]}",
    ]
    _emit(report, pretty, args.pretty)
    return EXIT_OK


def _cmd_dual(args) -> int:
    E = load_goodset(args.file)
    S = load_goodset(args.semigroup)
    T = dual_transform(E, S)
    out = args.out or str(Path(args.file).with_suffix(".dual.json"))
    dump_goodset(T, out)
    symmetric, witnesses = symmetry_check(S)
    report = {
        "transform": goodset_to_dict(T),
        "transform_file": out,
        "symmetric": symmetric,
        "witnesses": [{"point": list(p), "side": side} for p, side in witnesses],
        "flagged_not_dual": not symmetric,
    }
    if args.check_all:
        from .report import check_battery

        report["checks"] = check_battery(E, S)
    _emit(report)
    return EXIT_OK


def _cmd_colength(args) -> int:
    E = load_goodset(args.E)
    D = load_goodset(args.D)
    chain = colength(E, D)
    gamma = pt.join(D.conductor, E.conductor)
    r2 = None
    if E.r == 2:
        r2 = colength_r2_formula(E, gamma) - colength_r2_formula(D, gamma)
    rec = colength_recursive_formula(E, gamma) - colength_recursive_formula(D, gamma)
    methods = {"chain": chain, "r2": r2, "recursive": rec}
    agree = all(v == chain for v in methods.values() if v is not None)
    _emit({"colength": chain, "methods": methods, "agree": agree})
    return EXIT_OK if agree else EXIT_VALIDATION


def _cmd_apery(args) -> int:
    E = load_goodset(args.file)
    alpha = _parse_point(args.alpha)
    if args.hi:
        hi = _parse_point(args.hi)
    else:
        hi = pt.add(pt.add(E.conductor, alpha), pt.ones(E.r))
    members = apery_window(E, alpha, hi)
    _emit(
        {
            "alpha": list(alpha),
            "hi": list(hi),
            "members": [list(p) for p in members],
        }
    )
    return EXIT_OK


def _cmd_render(args) -> int:
    from .render import render_svg, render_text

    E = load_goodset(args.file)
    doc = render_text(E) + "\n" if args.format == "text" else render_svg(E)
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return EXIT_OK


# ---------------------------------------------------------------------------
# curve


def main_curve(argv=None) -> int:
    parser = _Parser(prog="curve", description="value sets of parametrized curves")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="compute a value set from a curve file")
    p.add_argument("file")
    p.add_argument("--bound", required=True, help="b1,...,br dominating the conductor")
    p.add_argument("--ideal", help="named ideal from the file (default: the ring)")
    p.add_argument("--dual", action="store_true", help="value set of the dual instead")
    p.add_argument("--out", help="write the good-set JSON here (default stdout)")

    p = sub.add_parser("report", help="full invariants report for a curve")
    p.add_argument("file")
    p.add_argument("--bound", required=True)
    p.add_argument("--partition", help="partition of branches, e.g. '1|2,3'")
    p.add_argument("--J", help="subset of branches for the identity, e.g. '1,2'")
    p.add_argument("--duals", action="store_true", help="include dual value sets")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--report-dir", help="write report.json, CSV tables and a figure here")

    args = parser.parse_args(argv)
    return _run(lambda: _dispatch_curve(args))


def _dispatch_curve(args) -> int:
    if args.command == "ingest":
        return _cmd_ingest(args)
    if args.command == "report":
        return _cmd_curve_report(args)
    raise AssertionError(args.command)


def _cmd_ingest(args) -> int:
    curve = load_curve(args.file)
    bound = _parse_point(args.bound)
    if args.dual:
        E = dual_value_set(curve, args.ideal, bound)
    else:
        E = value_set(curve, args.ideal, bound)
    if args.out:
        dump_goodset(E, args.out)
    _emit(goodset_to_dict(E))
    return EXIT_OK


def _cmd_curve_report(args) -> int:
    curve = load_curve(args.file)
    bound = _parse_point(args.bound)
    partition = None
    if args.partition:
        partition = [
            tuple(int(x) for x in part.split(","))
            for part in args.partition.split("|")
        ]
    J = tuple(int(x) for x in args.J.split(",")) if args.J else None
    report = curve_invariants_report(
        curve, bound, partition=partition, J=J, include_duals=args.duals
    )
    if args.report_dir:
        _write_curve_report_files(report, curve, bound, args.report_dir)
    pretty = [
        f"delta={report['delta']} gorenstein(symmetric)="
        f"{report['gorenstein']['symmetric']}",
        f"conductor={report['semigroup']['conductor']} "
        f"frobenius={report['frobenius']}",
        f"partition identity: {report['partition_identity']['lhs']} vs "
        f"{report['partition_identity']['rhs']}",
    ]
    _emit(report, pretty, args.pretty)
    return EXIT_OK


def _write_curve_report_files(report: dict, curve, bound, outdir) -> None:
    import csv

    from .core import goodset_from_dict
    from .render import render_png

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "report.json").write_text(report_json(report), encoding="utf-8")

    with open(outdir / "invariants.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["subset", "delta", "intersection"])
        for key in sorted(report["subset_deltas"]):
            w.writerow(
                [
                    key,
                    report["subset_deltas"][key],
                    report["intersections"].get(key, ""),
                ]
            )
    if curve.r <= 3:
        S = goodset_from_dict(report["semigroup"])
        render_png(S, outdir / "semigroup.png")


if __name__ == "__main__":
    sys.exit(main_goodset())
