"""JSON problem documents and deterministic SVG figures.

A problem document carries the global parameters, a dictionary of named
multipartitions, an optional cut and optional polynomial tables.  Figures
are built from an ordered list of drawing primitives; coordinates are
derived deterministically from exact positions (the symbolic eps is drawn
as a fixed 2% of the box diagonal, purely for legibility).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .combinatorics import Multipartition, Params, nodes, residue
from .cut import CutSpec
from .exactpos import Position
from .graded import GradedPoly
from .loading import node_position
from .tableaux import Tableau


class ProblemError(ValueError):
    """Schema or invariant violation in a problem document; the message
    names the offending field."""


@dataclass(frozen=True)
class Problem:
    params: Params
    multipartitions: dict[str, Multipartition]
    cut: CutSpec | None = None
    polys: dict[str, GradedPoly] = field(default_factory=dict)


def _require(doc: dict, key: str, path: str) -> Any:
    if key not in doc:
        raise ProblemError(f"{path}.{key}: missing")
    return doc[key]


def load_problem(doc: dict) -> Problem:
    if not isinstance(doc, dict):
        raise ProblemError("$: document must be a JSON object")
    n = _require(doc, "n", "$")
    ell = _require(doc, "ell", "$")
    e_raw = _require(doc, "e", "$")
    if e_raw == "infinity":
        e = None
    elif isinstance(e_raw, int):
        e = e_raw
    else:
        raise ProblemError(f"$.e: expected integer or \"infinity\", got {e_raw!r}")
    theta = tuple(_require(doc, "theta", "$"))
    kappa = tuple(_require(doc, "kappa", "$"))
    if not isinstance(n, int) or not isinstance(ell, int):
        raise ProblemError("$.n/ell: must be integers")
    if len(theta) != ell or len(kappa) != ell:
        raise ProblemError("$.theta/kappa: must have length ell")
    params = Params(n=n, ell=ell, e=e, theta=theta, kappa=kappa)

    mps: dict[str, Multipartition] = {}
    for name, comps in doc.get("multipartitions", {}).items():
        try:
            mp = Multipartition(tuple(tuple(row) for row in comps))
        except (TypeError, ValueError) as exc:
            raise ProblemError(f"$.multipartitions.{name}: {exc}") from exc
        if mp.ell != ell:
            raise ProblemError(
                f"$.multipartitions.{name}: has {mp.ell} components, expected {ell}"
            )
        if mp.size() != n:
            raise ProblemError(
                f"$.multipartitions.{name}: size {mp.size()} != n = {n}"
            )
        mps[name] = mp

    cut = None
    if "cut" in doc and doc["cut"] is not None:
        cut_doc = doc["cut"]
        try:
            cut = CutSpec.from_rational(
                _require(cut_doc, "a", "$.cut"), cut_doc.get("mode", "lenient")
            )
        except (ValueError, ZeroDivisionError) as exc:
            raise ProblemError(f"$.cut: {exc}") from exc

    polys: dict[str, GradedPoly] = {}
    for name, table in doc.get("polys", {}).items():
        try:
            polys[name] = GradedPoly.from_json(table)
        except (TypeError, ValueError) as exc:
            raise ProblemError(f"$.polys.{name}: {exc}") from exc

    return Problem(params, mps, cut, polys)


def serialize(problem: Problem) -> dict:
    p = problem.params
    doc: dict[str, Any] = {
        "n": p.n,
        "ell": p.ell,
        "e": "infinity" if p.e is None else p.e,
        "theta": list(p.theta),
        "kappa": list(p.kappa),
        "multipartitions": {
            name: [list(comp) for comp in mp.components]
            for name, mp in problem.multipartitions.items()
        },
    }
    if problem.cut is not None:
        doc["cut"] = {"a": str(problem.cut.a.base), "mode": problem.cut.mode}
    if problem.polys:
        doc["polys"] = {name: poly.to_json() for name, poly in problem.polys.items()}
    return doc


def load_problem_file(path: str) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return load_problem(json.load(fh))


# ---------------------------------------------------------------------------
# figures


@dataclass(frozen=True)
class Figure:
    """Ordered drawing primitives plus the bounding box, ready for SVG."""

    primitives: tuple[tuple, ...]
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def to_svg(self, scale: float = 24.0, margin: float = 12.0) -> str:
        w = (self.xmax - self.xmin) * scale + 2 * margin
        h = (self.ymax - self.ymin) * scale + 2 * margin

        def tx(x: float) -> str:
            return f"{(x - self.xmin) * scale + margin:.2f}"

        def ty(y: float) -> str:
            return f"{(self.ymax - y) * scale + margin:.2f}"

        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{w:.2f}" height="{h:.2f}">',
        ]
        for prim in self.primitives:
            kind = prim[0]
            if kind == "line":
                _, x1, y1, x2, y2, style = prim
                out.append(
                    f'<line x1="{tx(x1)}" y1="{ty(y1)}" x2="{tx(x2)}" '
                    f'y2="{ty(y2)}" style="{style}"/>'
                )
            elif kind == "path":
                _, pts, style = prim
                coords = " ".join(
                    ("M" if i == 0 else "L") + f"{tx(x)},{ty(y)}"
                    for i, (x, y) in enumerate(pts)
                )
                out.append(f'<path d="{coords}" style="{style}"/>')
            elif kind == "curve":
                _, x1, y1, x2, y2, style = prim
                ym = (float(y1) + float(y2)) / 2
                out.append(
                    f'<path d="M{tx(x1)},{ty(y1)} C{tx(x1)},{ty(ym)} '
                    f'{tx(x2)},{ty(ym)} {tx(x2)},{ty(y2)}" style="{style}"/>'
                )
            elif kind == "circle":
                _, x, y, r, style = prim
                out.append(
                    f'<circle cx="{tx(x)}" cy="{ty(y)}" r="{r:.2f}" style="{style}"/>'
                )
            elif kind == "text":
                _, x, y, s = prim
                out.append(
                    f'<text x="{tx(x)}" y="{ty(y)}" font-size="10" '
                    f'text-anchor="middle">{s}</text>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"


_BOX = "fill:none;stroke:black;stroke-width:1"
_SOLID = "fill:none;stroke:black;stroke-width:1.2"
_GHOST = "fill:none;stroke:gray;stroke-width:1;stroke-dasharray:4 3"
_RED = "fill:none;stroke:red;stroke-width:1.2"
_CUT = "fill:none;stroke:blue;stroke-width:1;stroke-dasharray:6 3"
_MARK = "fill:red;stroke:none"


def _visual_x(pos: Position, ell: int) -> float:
    # eps drawn at 2% of the box diagonal (2*ell) per eps unit
    return float(pos.base) + 0.02 * 2 * ell * pos.eps


def render_russian(
    mp: Multipartition, cut: CutSpec | None, p: Params
) -> Figure:
    """Russian-array drawing: each node is a box at 45 degrees with diagonal
    2*ell, component m anchored at theta_m, optional vertical cut line."""
    ell = p.ell
    prims: list[tuple] = []
    xs: list[float] = [float(min(p.theta)) - ell, float(max(p.theta)) + ell]
    ys: list[float] = [0.0, 2.0 * ell]
    for theta_m in p.theta:
        prims.append(("circle", float(theta_m), 0.0, 3.0, _MARK))
    for nd in nodes(mp):
        x_top = float(p.theta[nd.m - 1] + ell * (nd.r - nd.c)) + 0.02 * 2 * ell * (
            nd.r + nd.c
        )
        y_top = float(ell * (nd.r + nd.c))
        corners = [
            (x_top, y_top),
            (x_top - ell, y_top - ell),
            (x_top, y_top - 2 * ell),
            (x_top + ell, y_top - ell),
            (x_top, y_top),
        ]
        prims.append(("path", tuple(corners), _BOX))
        prims.append(("text", x_top, y_top - ell, str(residue(nd, p))))
        xs.extend([x_top - ell, x_top + ell])
        ys.append(y_top)
    if cut is not None:
        a = float(cut.a.base)
        top = max(ys) + ell
        prims.append(("line", a, 0.0, a, top, _CUT))
        xs.append(a)
        ys.append(top)
    return Figure(tuple(prims), min(xs) - 0.5, max(xs) + 0.5, min(ys) - 0.5, max(ys) + 0.5)


def render_theta_diagram(
    t: Tableau, cut: CutSpec | None, p: Params
) -> Figure:
    """Strand picture of a basis diagram: solid strands from the shape
    loading (bottom) to the tableau image (top), dashed ghosts ell units
    left, red verticals at each theta_m, optional cut lines at a and
    a - ell."""
    ell = p.ell
    prims: list[tuple] = []
    height = 4.0
    xs: list[float] = []

    strands = [
        (node_position(nd, p), img.pos, img.res)
        for nd, img in t.assignment().items()
    ]
    strands.sort()
    for b, tp, res in strands:
        xb, xt = _visual_x(b, ell), _visual_x(tp, ell)
        prims.append(("curve", xb, 0.0, xt, height, _SOLID))
        prims.append(("text", xb, -0.6, str(res)))
        xs.extend([xb, xt])
    for b, tp, res in strands:
        xb, xt = _visual_x(b, ell) - ell, _visual_x(tp, ell) - ell
        prims.append(("curve", xb, 0.0, xt, height, _GHOST))
        xs.extend([xb, xt])
    for theta_m, kappa_m in zip(p.theta, p.kappa):
        prims.append(("line", float(theta_m), 0.0, float(theta_m), height, _RED))
        prims.append(("text", float(theta_m), -0.6, str(kappa_m)))
        xs.append(float(theta_m))
    if cut is not None:
        a = float(cut.a.base)
        for x in (a, a - ell):
            prims.append(("line", x, -0.3, x, height + 0.3, _CUT))
            xs.append(x)
    if not xs:
        xs = [0.0]
    return Figure(tuple(prims), min(xs) - 1.0, max(xs) + 1.0, -1.2, height + 0.6)
