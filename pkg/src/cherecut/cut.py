"""Theta-diagonal cuts: band decompositions, the left/right split, cut-sets
with their closures, the tableau bijection, and graded dimensions of the
subquotient algebras.

A cut is a vertical line x = a.  The loading of a multipartition splits into
the entries left of a - ell, the diagonal band [a - ell, a), and the entries
right of a; all comparisons are eps-exact, so a node whose rational
x-coordinate equals a - ell lands in the band and one whose coordinate
equals a lands on the right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable

from .combinatorics import Multipartition, Params, enumerate_multipartitions, nodes
from .exactpos import Position
from .graded import GradedPoly
from .loading import (
    LoadingEntry,
    charged_loading,
    node_position,
    theta_dominates,
)
from .tableaux import Tableau, enumerate_sstd, sstd_generating_poly, tableau_degree


class InvalidCutError(ValueError):
    pass


@dataclass(frozen=True)
class CutSpec:
    """A rational cut abscissa with a validation mode.

    Strict mode enforces the genericity window: no node of any
    ell-multipartition of n may have rational x-coordinate exactly a.
    Lenient mode (the default) accepts any rational a and relies on exact
    eps comparisons for unambiguous classification.
    """

    a: Position
    mode: str = "lenient"

    def __post_init__(self) -> None:
        if self.a.eps != 0:
            raise ValueError("cut abscissa must have zero eps part")
        if self.mode not in ("strict", "lenient"):
            raise ValueError(f"unknown cut mode: {self.mode!r}")

    @classmethod
    def from_rational(cls, a: Fraction | int | str, mode: str = "lenient") -> "CutSpec":
        return cls(Position(Fraction(a)), mode)


def validate_cut(cut: CutSpec, p: Params) -> None:
    """Raise InvalidCutError when strict mode's genericity condition fails:
    some node (r, c, m) with r + c <= n + 1 has base x-coordinate a."""
    if cut.mode != "strict":
        return
    a = cut.a.base
    for theta_m in p.theta:
        diff = a - theta_m
        if diff.denominator == 1 and diff % p.ell == 0:
            k = int(diff) // p.ell
            if -(p.n - 1) <= k <= p.n - 1:
                raise InvalidCutError(
                    f"strict mode: a = {a} equals the x-coordinate of nodes on "
                    f"diagonal r - c = {k} of a component at theta = {theta_m}"
                )


@dataclass(frozen=True)
class CutDecomposition:
    """Partition of a loading into diagonal band I, left part L and right
    part R.  ``red_in_band`` lists components m whose red line theta_m falls
    inside (a - ell, a); the split still classifies by nodes only, but such
    instances are flagged."""

    I: tuple[LoadingEntry, ...]
    L: tuple[LoadingEntry, ...]
    R: tuple[LoadingEntry, ...]
    red_in_band: tuple[int, ...] = ()


def diagonal_sets(mp: Multipartition, cut: CutSpec, p: Params) -> CutDecomposition:
    validate_cut(cut, p)
    a = cut.a
    a_minus_ell = cut.a.shift(-p.ell)
    band: list[LoadingEntry] = []
    left: list[LoadingEntry] = []
    right: list[LoadingEntry] = []
    for entry in charged_loading(mp, p).entries:
        if entry.pos < a_minus_ell:
            left.append(entry)
        elif entry.pos < a:
            band.append(entry)
        else:
            right.append(entry)
    flagged = tuple(
        m
        for m, theta_m in enumerate(p.theta, start=1)
        if a_minus_ell.base < theta_m < a.base
    )
    return CutDecomposition(tuple(band), tuple(left), tuple(right), flagged)


def admits_cut(
    lam: Multipartition, mu: Multipartition, cut: CutSpec, p: Params
) -> bool:
    """True iff the diagonal loadings agree as charged sets and the left and
    right cardinalities match."""
    if lam.size() != mu.size():
        raise ValueError(
            f"size mismatch: |lam| = {lam.size()} but |mu| = {mu.size()}"
        )
    dl = diagonal_sets(lam, cut, p)
    dm = diagonal_sets(mu, cut, p)
    if len(dl.L) != len(dm.L) or len(dl.R) != len(dm.R):
        return False
    return {(e.pos, e.res) for e in dl.I} == {(e.pos, e.res) for e in dm.I}


def _band_diagonal(theta_m: int, a: Fraction, ell: int) -> int:
    """The unique k with a - ell <= theta_m + ell*k < a."""
    return math.ceil(Fraction(a - theta_m, ell)) - 1


def split(
    mp: Multipartition, cut: CutSpec, p: Params
) -> tuple[Multipartition, Multipartition]:
    """The smallest multipartitions whose loadings contain the diagonal band
    plus the left part (resp. plus the right part)."""
    validate_cut(cut, p)
    a = cut.a.base
    left_comps: list[tuple[int, ...]] = []
    right_comps: list[tuple[int, ...]] = []
    for m, comp in enumerate(mp.components, start=1):
        if not comp:
            left_comps.append(())
            right_comps.append(())
            continue
        k = _band_diagonal(p.theta[m - 1], a, p.ell)
        # rows of diagonal nodes: r - c = k with 1 <= c <= comp[r-1]
        diag_rows = [
            r for r in range(1, len(comp) + 1) if 1 <= r - k <= comp[r - 1]
        ]
        if not diag_rows:
            if len(comp) - 1 < k:
                # every node lies strictly left of a - ell
                left_comps.append(comp)
                right_comps.append(())
            else:
                # every node lies weakly right of a
                left_comps.append(())
                right_comps.append(comp)
            continue
        r = max(diag_rows)
        c = r - k
        left_comps.append(comp[:r])
        right_comps.append((c,) * r + comp[r:])
    return Multipartition(tuple(left_comps)), Multipartition(tuple(right_comps))


def split_pair(
    lam: Multipartition, mu: Multipartition, cut: CutSpec, p: Params
) -> tuple[Multipartition, Multipartition, Multipartition, Multipartition]:
    """Split both members of a pair admitting the cut; returns
    (lam_left, mu_left, lam_right, mu_right)."""
    if not admits_cut(lam, mu, cut, p):
        raise InvalidCutError(
            f"pair does not admit a diagonal cut at x = {cut.a.base}"
        )
    lam_l, lam_r = split(lam, cut, p)
    mu_l, mu_r = split(mu, cut, p)
    assert lam_l.size() == mu_l.size() and lam_r.size() == mu_r.size()
    return lam_l, mu_l, lam_r, mu_r


def left_params(p: Params, n_left: int) -> Params:
    return replace(p, n=n_left)


@dataclass(frozen=True)
class CutSet:
    """The set of multipartitions admitting a common cut with a reference
    multipartition, together with its saturated (E) and cosaturated (F)
    closures under theta-dominance."""

    members: tuple[Multipartition, ...]
    E: tuple[Multipartition, ...]
    F: tuple[Multipartition, ...]


def saturated_closure(
    q: Iterable[Multipartition], p: Params, universe: Iterable[Multipartition] | None = None
) -> tuple[Multipartition, ...]:
    """Smallest downward-closed superset of q under theta-dominance."""
    return _closure(q, p, universe, downward=True)


def cosaturated_closure(
    q: Iterable[Multipartition], p: Params, universe: Iterable[Multipartition] | None = None
) -> tuple[Multipartition, ...]:
    """Smallest upward-closed superset of q under theta-dominance."""
    return _closure(q, p, universe, downward=False)


def _closure(
    q: Iterable[Multipartition],
    p: Params,
    universe: Iterable[Multipartition] | None,
    downward: bool,
) -> tuple[Multipartition, ...]:
    members = set(q)
    if universe is None:
        n = next(iter(members)).size() if members else p.n
        universe = enumerate_multipartitions(n, p.ell)
    universe = tuple(universe)
    closed = set(members)
    changed = True
    while changed:
        changed = False
        for nu in universe:
            if nu in closed:
                continue
            for mu in closed:
                above, below = (mu, nu) if downward else (nu, mu)
                if theta_dominates(above, below, p):
                    closed.add(nu)
                    changed = True
                    break
    return tuple(nu for nu in universe if nu in closed)


def lambda_set(lam: Multipartition, cut: CutSpec, p: Params) -> CutSet:
    """All multipartitions of |lam| admitting the cut together with lam,
    with saturated and cosaturated closures."""
    validate_cut(cut, p)
    universe = enumerate_multipartitions(lam.size(), p.ell)
    members = tuple(mu for mu in universe if admits_cut(lam, mu, cut, p))
    e_set = saturated_closure(members, p, universe)
    f_set = cosaturated_closure(members, p, universe)
    return CutSet(members, e_set, f_set)


def split_tableau(t: Tableau, cut: CutSpec, p: Params) -> tuple[Tableau, Tableau]:
    """Split a semistandard tableau across the cut: nodes on one side keep
    their images, nodes filling the common rectangle map to their own
    positions."""
    a = cut.a
    shape_l, shape_r = split(t.shape, cut, p)
    weight_l, weight_r = split(t.weight, cut, p)
    assignment = t.assignment()

    def piece(shape_piece: Multipartition, weight_piece: Multipartition, keep_left: bool) -> Tableau:
        wl = charged_loading(weight_piece, p)
        own = {e.pos: e for e in wl.entries}
        entries: list[LoadingEntry] = []
        for nd in nodes(shape_piece):
            pos = node_position(nd, p)
            kept = pos < a if keep_left else pos > a
            if kept:
                image = assignment[nd]
                entries.append(LoadingEntry(image.pos, image.res, image.node))
            else:
                if pos not in own:
                    raise InvalidCutError(
                        f"node {nd} of the split piece has no matching entry; "
                        "shape and weight do not share the cut"
                    )
                entries.append(own[pos])
        return Tableau(shape_piece, weight_piece, tuple(entries))

    return piece(shape_l, weight_l, True), piece(shape_r, weight_r, False)


@dataclass(frozen=True)
class BijectionReport:
    bijective: bool
    degree_additive: bool
    count: int
    count_left: int
    count_right: int

    def ok(self) -> bool:
        return self.bijective and self.degree_additive


def verify_tableau_bijection(
    mu: Multipartition, nu: Multipartition, cut: CutSpec, p: Params
) -> BijectionReport:
    """Check that splitting tableaux is a degree-preserving bijection
    SStd(mu, nu) -> SStd(mu_L, nu_L) x SStd(mu_R, nu_R), with both sides
    enumerated independently."""
    mu_l, nu_l, mu_r, nu_r = split_pair(mu, nu, cut, p)
    pl = replace(p, n=mu_l.size())
    pr = replace(p, n=mu_r.size())

    whole = enumerate_sstd(mu, nu, p)
    lefts = {tab.entries: tab for tab in enumerate_sstd(mu_l, nu_l, pl)}
    rights = {tab.entries: tab for tab in enumerate_sstd(mu_r, nu_r, pr)}

    images: set[tuple] = set()
    degree_additive = True
    in_product = True
    for tab in whole:
        tl, tr = split_tableau(tab, cut, p)
        if tl.entries not in lefts or tr.entries not in rights:
            in_product = False
            continue
        images.add((tl.entries, tr.entries))
        if tableau_degree(tab, p) != tableau_degree(tl, pl) + tableau_degree(tr, pr):
            degree_additive = False

    bijective = (
        in_product
        and len(images) == len(whole)
        and len(whole) == len(lefts) * len(rights)
    )
    return BijectionReport(
        bijective, degree_additive, len(whole), len(lefts), len(rights)
    )


def subquotient_graded_dim(cut_set: CutSet | Iterable[Multipartition], p: Params) -> GradedPoly:
    """Graded dimension of the subquotient algebra indexed by a cut-set:
    the sum over triples (alpha, beta, gamma) of members of the product of
    the tableau generating polynomials of (alpha, beta) and (alpha, gamma)."""
    members = cut_set.members if isinstance(cut_set, CutSet) else tuple(cut_set)
    cache: dict[tuple[Multipartition, Multipartition], GradedPoly] = {}

    def gen(alpha: Multipartition, beta: Multipartition) -> GradedPoly:
        key = (alpha, beta)
        if key not in cache:
            cache[key] = sstd_generating_poly(alpha, beta, p)
        return cache[key]

    total = GradedPoly.zero()
    for alpha in members:
        row = GradedPoly.zero()
        for beta in members:
            row = row + gen(alpha, beta)
        total = total + row * row
    return total
