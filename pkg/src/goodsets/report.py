"""Deterministic analysis reports for good sets.

Reports are plain dicts of JSON-serialisable values; rendering them with
``report_json`` (sorted keys, sorted point lists) is byte-reproducible.
"""

from __future__ import annotations

import csv
import hashlib
import json
from pathlib import Path
from typing import Optional

from . import __version__ as _version
from . import points as pt
from .apery import apery_symmetry_check
from .colength import gorenstein_length_test
from .core import GoodSet, algebra_check, contains, frobenius, goodset_to_dict
from .duality import (
    dual_transform,
    local_duality_check,
    maximal_symmetry_check,
    pq_duality_check,
    sum_containment_check,
    symmetry_check,
)
from .errors import GoodSetError, ValidationError
from .maximals import frobenius_fiber_check, maximal_points, p_value, q_value


def file_digest(path) -> str:
    h = hashlib.sha256()
    h.update(Path(path).read_bytes())
    return h.hexdigest()


def analyze_goodset(
    E: GoodSet,
    source: Optional[str] = None,
    digest: Optional[str] = None,
    semigroup: Optional[GoodSet] = None,
    check_all: bool = False,
) -> dict:
    """Full combinatorial report: structure verdicts, maximals, the p/q
    table over [m - e, c + e], symmetry, and (optionally) the dual
    transform with the whole symmetry/duality check battery."""
    is_semigroup = algebra_check(E, "semigroup")
    S = semigroup if semigroup is not None else (E if is_semigroup else None)

    report = {
        "tool": {"name": "goodsets", "version": _version},
        "input": {"path": source, "sha256": digest},
        "r": E.r,
        "labels": list(E.labels),
        "min": list(E.min),
        "conductor": list(E.conductor),
        "frobenius": list(frobenius(E)),
        "is_semigroup": is_semigroup,
    }
    if semigroup is not None:
        report["is_monomodule_over_semigroup"] = algebra_check(
            E, "monomodule", semigroup
        )

    maxima = maximal_points(E)
    report["maximals"] = [
        {
            "point": list(mc.point),
            "relative": mc.is_relative,
            "absolute": mc.is_absolute,
            "p": mc.p,
            "q": mc.q,
        }
        for mc in maxima
    ]

    lo = pt.sub(E.min, pt.ones(E.r))
    hi = pt.add(E.conductor, pt.ones(E.r))
    report["pq_table"] = [
        {
            "point": list(a),
            "member": contains(E, a),
            "p": p_value(E, a),
            "q": q_value(E, a),
        }
        for a in pt.box(lo, hi)
    ]

    if is_semigroup:
        symmetric, witnesses = symmetry_check(E)
        report["symmetric"] = symmetric
        report["symmetry_witnesses"] = [
            {"point": list(p), "side": side} for p, side in witnesses
        ]
        report["frobenius_fiber_empty"] = frobenius_fiber_check(E)
        report["gorenstein_length_test"] = gorenstein_length_test(E)

    if check_all and S is not None:
        report["checks"] = check_battery(E, S)
    return report


def check_battery(E: GoodSet, S: GoodSet) -> dict:
    """The symmetry/duality battery.

    The ring is self-dual, so the elementary-length and p+q Gorenstein
    scans run on the pair (S, S); the transform of E is reported alongside
    with its own scans (perfect by construction: it is the canonical-ideal
    value set) plus the sum-containment check that flags when it fails to
    be the honest dual.
    """
    out = {}
    T = dual_transform(E, S)
    out["transform"] = goodset_to_dict(T)
    out["sum_containment"] = sum_containment_check(E, T, S)
    out["local_duality_ring"] = local_duality_check(S, S, S).to_dict()
    out["pq_duality_ring"] = pq_duality_check(S, S, S).to_dict()
    out["local_duality_transform"] = local_duality_check(E, T, S).to_dict()
    out["pq_duality_transform"] = pq_duality_check(E, T, S).to_dict()

    alpha = None
    for cand in sorted(E.small):
        if any(x != 0 for x in cand) and contains(T, cand):
            alpha = cand
            break
    if alpha is not None:
        out["apery_symmetry"] = apery_symmetry_check(E, T, S, alpha).to_dict()
    else:
        out["apery_symmetry"] = None

    symmetric, _ = symmetry_check(S)
    if symmetric:
        out["maximal_symmetry"] = maximal_symmetry_check(E, T, S).to_dict()
    else:
        out["maximal_symmetry"] = None
    return out


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def write_report_files(report: dict, E: GoodSet, outdir) -> list:
    """Report path artifacts: JSON, delimited tables, and a figure."""
    from .render import render_png

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    json_path = outdir / "report.json"
    json_path.write_text(report_json(report), encoding="utf-8")
    written.append(json_path)

    max_path = outdir / "maximals.csv"
    with open(max_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["point", "relative", "absolute", "p", "q"])
        for row in report.get("maximals", []):
            w.writerow(
                [
                    " ".join(str(x) for x in row["point"]),
                    row["relative"],
                    row["absolute"],
                    row["p"],
                    row["q"],
                ]
            )
    written.append(max_path)

    pq_path = outdir / "pq_table.csv"
    with open(pq_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["point", "member", "p", "q"])
        for row in report.get("pq_table", []):
            w.writerow(
                [
                    " ".join(str(x) for x in row["point"]),
                    row["member"],
                    row["p"],
                    row["q"],
                ]
            )
    written.append(pq_path)

    if E.r <= 3:
        fig_path = outdir / "value_set.png"
        render_png(E, fig_path)
        written.append(fig_path)
    return written
