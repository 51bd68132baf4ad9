"""Exact x-coordinates of the form ``base + eps * epsilon``.

``epsilon`` is a symbolic positive infinitesimal: positions compare
lexicographically on ``(base, eps)``, so no floating tolerance is ever
involved.  ``base`` is an arbitrary-precision rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class Position:
    """A point ``base + eps * epsilon`` on the real line.

    The derived ordering (lexicographic on the field order) is exactly the
    intended total order, since ``epsilon`` is smaller than any positive
    rational.
    """

    base: Fraction
    eps: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", Fraction(self.base))

    def shift(self, r: Fraction | int) -> "Position":
        """Translate the rational part by ``r``; the eps part is unchanged."""
        return Position(self.base + Fraction(r), self.eps)

    def __add__(self, other: "Position") -> "Position":
        return Position(self.base + other.base, self.eps + other.eps)

    def __sub__(self, other: "Position") -> "Position":
        return Position(self.base - other.base, self.eps - other.eps)

    def __str__(self) -> str:
        return format_position(self)


def cmp(p: Position, q: Position) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if p < q:
        return -1
    if p > q:
        return 1
    return 0


def shift(p: Position, r: Fraction | int) -> Position:
    return p.shift(r)


def format_position(p: Position) -> str:
    """Text form ``p/q+k*eps``; the eps term is omitted when k = 0."""
    if p.eps == 0:
        return str(p.base)
    return f"{p.base}{p.eps:+d}*eps"


def parse_position(text: str) -> Position:
    """Inverse of :func:`format_position`."""
    s = text.strip()
    if "eps" in s:
        head, _, _ = s.partition("*eps")
        # split the trailing signed eps coefficient off the base
        cut = max(head.rfind("+"), head.rfind("-", 1))
        if cut <= 0:
            raise ValueError(f"malformed position: {text!r}")
        return Position(Fraction(head[:cut]), int(head[cut:]))
    return Position(Fraction(s))
