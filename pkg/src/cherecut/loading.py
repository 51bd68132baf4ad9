"""Charged loadings in the Russian array and the theta-dominance order.

The node ``(r, c, m)`` sits at the exact position
``theta_m + ell*(r - c) + (r + c)*epsilon``; the weighting condition
(``theta_j - theta_i`` never a multiple of ell) together with the parity of
the eps coefficients guarantees all positions of a multipartition are
pairwise distinct.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .combinatorics import Multipartition, Node, Params, nodes, residue
from .exactpos import Position


class LoadingEntry(NamedTuple):
    pos: Position
    res: int
    node: Node


@dataclass(frozen=True)
class ChargedLoading:
    """Entries (position, residue) sorted strictly increasing by position,
    each carrying a back-reference to its originating node."""

    entries: tuple[LoadingEntry, ...]

    def positions(self) -> list[Position]:
        return [e.pos for e in self.entries]

    def residues(self) -> list[int]:
        return [e.res for e in self.entries]

    def by_residue(self) -> dict[int, list[Position]]:
        out: dict[int, list[Position]] = {}
        for e in self.entries:
            out.setdefault(e.res, []).append(e.pos)
        return out

    def charged_points(self) -> frozenset[tuple[Position, int]]:
        return frozenset((e.pos, e.res) for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def node_position(node: Node, p: Params) -> Position:
    return Position(
        Fraction(p.theta[node.m - 1] + p.ell * (node.r - node.c)),
        node.r + node.c,
    )


@lru_cache(maxsize=None)
def charged_loading(mp: Multipartition, p: Params) -> ChargedLoading:
    entries = sorted(
        LoadingEntry(node_position(nd, p), residue(nd, p), nd) for nd in nodes(mp)
    )
    for a, b in zip(entries, entries[1:]):
        if a.pos == b.pos:
            raise ValueError(
                f"coincident positions {a.pos} for nodes {a.node} and {b.node}; "
                "is the weighting valid?"
            )
    return ChargedLoading(tuple(entries))


def residue_sequence(mp: Multipartition, p: Params) -> list[int]:
    """Residues read in increasing position order."""
    return charged_loading(mp, p).residues()


def r_dominates(i: ChargedLoading, j: ChargedLoading, r: int) -> bool:
    """True iff for every threshold a the loading ``i`` has at least as many
    residue-r points strictly left of a as ``j`` does.

    Equivalent to the k-th smallest residue-r position of ``i`` being <= the
    k-th smallest of ``j`` for every k (and ``i`` having at least as many)."""
    xs = sorted(e.pos for e in i.entries if e.res == r)
    ys = sorted(e.pos for e in j.entries if e.res == r)
    if len(xs) < len(ys):
        return False
    return all(x <= y for x, y in zip(xs, ys))


def loading_dominates(i: ChargedLoading, j: ChargedLoading) -> bool:
    """r-dominance for every residue occurring in either loading."""
    residues = {e.res for e in i.entries} | {e.res for e in j.entries}
    return all(r_dominates(i, j, r) for r in sorted(residues))


@lru_cache(maxsize=None)
def theta_dominates(lam: Multipartition, mu: Multipartition, p: Params) -> bool:
    """True iff lam theta-dominates mu, i.e. the charged loading of lam
    dominates that of mu residue by residue."""
    if lam.size() != mu.size():
        raise ValueError(
            f"size mismatch: |lam| = {lam.size()} but |mu| = {mu.size()}"
        )
    return loading_dominates(charged_loading(lam, p), charged_loading(mu, p))


def count_left_of(loading: ChargedLoading, a: Position) -> int:
    """Number of entries with position strictly less than ``a``."""
    return bisect_left(loading.positions(), a)
