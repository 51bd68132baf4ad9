"""Semistandard tableaux and the crossing-derived degree of their basis
diagrams.

A tableau of shape lam and weight mu is a residue-respecting bijection from
the nodes of lam to the charged loading of mu.  Its degree is read off the
minimal strand diagram tracing out the bijection: since strands are monotone
in the vertical coordinate, a minimal diagram crosses a pair of strands
exactly when their endpoints are inverted, so crossings are derived from
endpoint data alone and never materialized geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .combinatorics import Multipartition, Node, Params, nodes, residue
from .exactpos import Position
from .graded import GradedPoly
from .loading import LoadingEntry, charged_loading, node_position


class DiagramGeometryError(Exception):
    """A coincident-endpoint configuration that the weighting should rule
    out; indicates invalid parameters or corrupted input."""


@dataclass(frozen=True)
class Tableau:
    """Assignment of loading entries of ``weight`` to the nodes of ``shape``,
    stored in the canonical (m, r, c) node order."""

    shape: Multipartition
    weight: Multipartition
    entries: tuple[LoadingEntry, ...]

    def assignment(self) -> dict[Node, LoadingEntry]:
        return dict(zip(nodes(self.shape), self.entries))

    def __str__(self) -> str:
        lines = [
            f"{nd} -> {entry.pos} : {entry.res}"
            for nd, entry in zip(nodes(self.shape), self.entries)
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class Strand:
    bottom: Position
    top: Position
    res: int


@dataclass(frozen=True)
class StrandDiagram:
    """Endpoint data of a basis diagram: one solid strand per node of the
    shape (bottom = shape loading, top = tableau image), ghosts implicitly
    ell units to the left, red verticals at each theta_m."""

    strands: tuple[Strand, ...]
    ell: int
    e: int | None
    reds: tuple[tuple[Fraction, int], ...]

    def ghost(self, s: Strand) -> Strand:
        return Strand(s.bottom.shift(-self.ell), s.top.shift(-self.ell), s.res)


@dataclass(frozen=True)
class CrossingReport:
    solid_solid: tuple[tuple[int, int], ...]
    solid_ghost: tuple[tuple[int, int], ...]
    solid_red: tuple[tuple[int, int], ...]

    def counts(self) -> tuple[int, int, int]:
        return len(self.solid_solid), len(self.solid_ghost), len(self.solid_red)


def enumerate_sstd(
    shape: Multipartition, weight: Multipartition, p: Params
) -> list[Tableau]:
    """All semistandard tableaux of the given shape and weight.

    Backtracks over the nodes of the shape in (m, r, c) order; at each node
    only unused weight entries of the matching residue that satisfy the
    semistandardness inequalities against the already-placed neighbours are
    tried.  Deterministic: candidates are taken in loading order.
    """
    if shape.size() != weight.size():
        raise ValueError(
            f"size mismatch: |shape| = {shape.size()}, |weight| = {weight.size()}"
        )
    shape_nodes = nodes(shape)
    loading = charged_loading(weight, p)
    by_res: dict[int, list[LoadingEntry]] = {}
    for entry in loading.entries:
        by_res.setdefault(entry.res, [])
        by_res[entry.res].append(entry)

    # quick infeasibility check: residue multisets must agree
    need: dict[int, int] = {}
    for nd in shape_nodes:
        res = residue(nd, p)
        need[res] = need.get(res, 0) + 1
    if any(need.get(r, 0) != len(v) for r, v in by_res.items()) or any(
        r not in by_res for r in need
    ):
        return []

    index_of = {nd: i for i, nd in enumerate(shape_nodes)}
    ell = p.ell
    results: list[Tableau] = []
    chosen: list[LoadingEntry | None] = [None] * len(shape_nodes)
    used: set[Position] = set()

    def admissible(nd: Node, pos: Position) -> bool:
        r, c, m = nd
        if r == 1 and c == 1 and not pos > Position(Fraction(p.theta[m - 1])):
            return False
        if r > 1 and (above := chosen[index_of[Node(r - 1, c, m)]]) is not None:
            if not pos > above.pos.shift(ell):
                return False
        if c > 1 and (left := chosen[index_of[Node(r, c - 1, m)]]) is not None:
            if not pos > left.pos.shift(-ell):
                return False
        return True

    def backtrack(i: int) -> None:
        if i == len(shape_nodes):
            results.append(Tableau(shape, weight, tuple(chosen)))  # type: ignore[arg-type]
            return
        nd = shape_nodes[i]
        res = residue(nd, p)
        for entry in by_res.get(res, ()):
            if entry.pos in used or not admissible(nd, entry.pos):
                continue
            chosen[i] = entry
            used.add(entry.pos)
            backtrack(i + 1)
            used.discard(entry.pos)
            chosen[i] = None

    backtrack(0)
    return results


def identity_tableau(shape: Multipartition, p: Params) -> Tableau:
    """The unique element of SStd(shape, shape): every node maps to its own
    loading entry."""
    entries = tuple(
        LoadingEntry(node_position(nd, p), residue(nd, p), nd) for nd in nodes(shape)
    )
    return Tableau(shape, shape, entries)


def build_diagram(t: Tableau, p: Params) -> StrandDiagram:
    strands = tuple(
        Strand(node_position(nd, p), entry.pos, entry.res)
        for nd, entry in zip(nodes(t.shape), t.entries)
    )
    reds = tuple((Fraction(th), k) for th, k in zip(p.theta, p.kappa))
    return StrandDiagram(strands, p.ell, p.e, reds)


def _crosses(b1: Position, t1: Position, b2: Position, t2: Position) -> bool:
    if b1 == b2 or t1 == t2:
        raise DiagramGeometryError(
            f"coincident endpoints: bottoms {b1}, {b2}; tops {t1}, {t2}"
        )
    return (b1 < b2) != (t1 < t2)


def count_crossings(d: StrandDiagram) -> CrossingReport:
    """Classify every forced crossing by endpoint order inversion.

    Solid strands are paired against each other, against every ghost (a
    strand never crosses its own ghost: they are parallel), and against every
    red vertical.  Coincident endpoints abort with a diagnostic.
    """
    solid_solid: list[tuple[int, int]] = []
    solid_ghost: list[tuple[int, int]] = []
    solid_red: list[tuple[int, int]] = []

    for i, s in enumerate(d.strands):
        for j in range(i + 1, len(d.strands)):
            u = d.strands[j]
            if _crosses(s.bottom, s.top, u.bottom, u.top):
                solid_solid.append((s.res, u.res))
        for u in d.strands:
            g = d.ghost(u)
            if _crosses(s.bottom, s.top, g.bottom, g.top):
                solid_ghost.append((s.res, g.res))
        for theta_m, kappa_m in d.reds:
            red = Position(theta_m)
            if s.bottom == red or s.top == red:
                raise DiagramGeometryError(
                    f"solid endpoint coincides with red strand at {red}"
                )
            if (s.bottom < red) != (s.top < red):
                solid_red.append((s.res, kappa_m))

    return CrossingReport(tuple(solid_solid), tuple(solid_ghost), tuple(solid_red))


def diagram_degree(report: CrossingReport, e: int | None) -> int:
    """Degree of a dotless basis diagram from its crossing report:
    -2 per like-labelled solid-solid crossing, +1 per solid i over ghost
    i-1, +1 per solid-red crossing of equal label."""

    def is_prev(ghost_res: int, solid_res: int) -> bool:
        if e is None:
            return ghost_res == solid_res - 1
        return ghost_res % e == (solid_res - 1) % e

    deg = -2 * sum(1 for a, b in report.solid_solid if a == b)
    deg += sum(1 for solid, ghost in report.solid_ghost if is_prev(ghost, solid))
    deg += sum(1 for solid, red in report.solid_red if solid == red)
    return deg


def tableau_degree(t: Tableau, p: Params) -> int:
    return diagram_degree(count_crossings(build_diagram(t, p)), p.e)


def sstd_generating_poly(
    shape: Multipartition, weight: Multipartition, p: Params
) -> GradedPoly:
    """Sum of t^deg(T) over all semistandard tableaux of this shape and
    weight (the graded dimension of one weight space of a cell module)."""
    out: dict[int, int] = {}
    for t in enumerate_sstd(shape, weight, p):
        k = tableau_degree(t, p)
        out[k] = out.get(k, 0) + 1
    return GradedPoly(out)
