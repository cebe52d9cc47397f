"""Static rendering of good sets: text grids, SVG, and matplotlib figures.

The text grid covers the half-open box [m - e, c + 2e) with one character
per cell and a fixed y per row (largest y on top).  Legend:

    .   gap
    #   member
    R   relative (not absolute) maximal
    A   absolute (not relative) maximal
    M   maximal that is both
    +   Frobenius vector c - e, when it is a gap

Maximal markers win over the Frobenius cross.  The SVG renderer draws the
same cells at 24 px per cell.  For r = 3 both renderers show the three
pairwise projections; r > 3 is not supported.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from . import points as pt
from .core import GoodSet, contains, frobenius, project_cached
from .errors import GoodSetError
from .maximals import maximal_points

CELL = 24  # px per SVG cell


def _grid_ranges(E: GoodSet) -> Tuple[range, ...]:
    lo = pt.sub(E.min, pt.ones(E.r))
    hi = pt.add(E.conductor, pt.ones(E.r))  # half-open at c + 2e
    return tuple(range(a, b + 1) for a, b in zip(lo, hi))


def _cell_char(E: GoodSet, p, marks: Dict, frob) -> str:
    if p in marks:
        mc = marks[p]
        if mc.is_relative and mc.is_absolute:
            return "M"
        return "R" if mc.is_relative else "A"
    if p == frob and not contains(E, p):
        return "+"
    return "#" if contains(E, p) else "."


def render_text(E: GoodSet) -> str:
    if E.r > 3:
        raise GoodSetError("text rendering supports r <= 3 only")
    if E.r == 3:
        parts = []
        for J in ((E.labels[0], E.labels[1]), (E.labels[0], E.labels[2]), (E.labels[1], E.labels[2])):
            parts.append(f"projection onto branches {J[0]},{J[1]}")
            parts.append(render_text(project_cached(E, J)))
        return "\n".join(parts)
    marks = {mc.point: mc for mc in maximal_points(E)}
    frob = frobenius(E)
    if E.r == 1:
        (xs,) = _grid_ranges(E)
        row = "".join(_cell_char(E, (x,), marks, frob) for x in xs)
        return f"{row}\nx from {xs[0]} to {xs[-1]}"
    xs, ys = _grid_ranges(E)
    lines = []
    for y in reversed(ys):
        lines.append("".join(_cell_char(E, (x, y), marks, frob) for x in xs))
    lines.append(f"x from {xs[0]} to {xs[-1]}, y from {ys[0]} to {ys[-1]} (top row is largest y)")
    return "\n".join(lines)


def render_svg(E: GoodSet) -> str:
    if E.r > 3:
        raise GoodSetError("svg rendering supports r <= 3 only")
    if E.r == 3:
        blocks = []
        y_off = 0
        width = 0
        for J in ((E.labels[0], E.labels[1]), (E.labels[0], E.labels[2]), (E.labels[1], E.labels[2])):
            P = project_cached(E, J)
            body, w, h = _svg_body(P, y_offset=y_off)
            blocks.append(body)
            y_off += h + CELL
            width = max(width, w)
        return _svg_document("".join(blocks), width, y_off)
    body, w, h = _svg_body(E, y_offset=0)
    return _svg_document(body, w, h)


def _svg_document(body: str, width: int, height: int) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n{body}</svg>\n'
    )


def _svg_body(E: GoodSet, y_offset: int) -> Tuple[str, int, int]:
    marks = {mc.point: mc for mc in maximal_points(E)}
    frob = frobenius(E)
    if E.r == 1:
        (xs,) = _grid_ranges(E)
        ys = range(0, 1)
        point = lambda x, y: (x,)
    else:
        xs, ys = _grid_ranges(E)
        point = lambda x, y: (x, y)
    out = []
    height = len(ys) * CELL
    for yi, y in enumerate(reversed(ys)):
        for xi, x in enumerate(xs):
            p = point(x, y)
            px = xi * CELL
            py = y_offset + yi * CELL
            ch = _cell_char(E, p, marks, frob)
            fill = {"#": "#444444", ".": "#ffffff", "M": "#d62728",
                    "R": "#1f77b4", "A": "#2ca02c", "+": "#ffffff"}[ch]
            out.append(
                f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" '
                f'fill="{fill}" stroke="#999999"/>'
            )
            if ch == "+":
                out.append(
                    f'<path d="M {px + 4} {py + 4} L {px + CELL - 4} {py + CELL - 4} '
                    f'M {px + CELL - 4} {py + 4} L {px + 4} {py + CELL - 4}" '
                    f'stroke="#d62728" stroke-width="2"/>'
                )
    return "\n".join(out) + "\n", len(xs) * CELL, height


def render_png(E: GoodSet, path) -> None:
    """Matplotlib scatter of the window region with maximal markers."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if E.r > 3:
        raise GoodSetError("figure rendering supports r <= 3 only")
    panels: List[Tuple[str, GoodSet]] = []
    if E.r == 3:
        for J in ((E.labels[0], E.labels[1]), (E.labels[0], E.labels[2]), (E.labels[1], E.labels[2])):
            panels.append((f"branches {J[0]},{J[1]}", project_cached(E, J)))
    else:
        panels.append(("", E))
    fig, axes = plt.subplots(1, len(panels), figsize=(4.2 * len(panels), 4.0), squeeze=False)
    for ax, (title, P) in zip(axes[0], panels):
        marks = {mc.point: mc for mc in maximal_points(P)}
        frob = frobenius(P)
        if P.r == 1:
            xs = _grid_ranges(P)[0]
            members = [x for x in xs if contains(P, (x,))]
            gaps = [x for x in xs if not contains(P, (x,))]
            ax.scatter(members, [0] * len(members), marker="s", color="#444444")
            ax.scatter(gaps, [0] * len(gaps), marker="o", facecolors="none", edgecolors="#999999")
            for g in marks:
                ax.scatter([g[0]], [0], marker="D", color="#d62728")
            ax.set_yticks([])
        else:
            xs, ys = _grid_ranges(P)
            mem = [(x, y) for x in xs for y in ys if contains(P, (x, y))]
            gap = [(x, y) for x in xs for y in ys if not contains(P, (x, y))]
            if mem:
                ax.scatter(*zip(*mem), marker="s", color="#444444", label="member")
            if gap:
                ax.scatter(*zip(*gap), marker="o", facecolors="none", edgecolors="#cccccc")
            for p, mc in marks.items():
                color = "#d62728" if (mc.is_relative and mc.is_absolute) else (
                    "#1f77b4" if mc.is_relative else "#2ca02c"
                )
                ax.scatter([p[0]], [p[1]], marker="D", color=color, zorder=3)
            ax.scatter([frob[0]], [frob[1]], marker="x", color="#d62728", s=90, zorder=2)
            ax.set_aspect("equal")
        ax.set_title(title or "value set window")
        ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
