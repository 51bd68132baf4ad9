"""Multipartitions, nodes, residues and parameter validation.

A multipartition is an ell-tuple of partitions; nodes are triples
``(r, c, m)`` with 1-based row, column and component indices.  The quantum
characteristic ``e`` is an integer >= 3 or ``None`` (meaning infinity, in
which case residues live in the plain integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


class Node(NamedTuple):
    r: int
    c: int
    m: int


@dataclass(frozen=True)
class Params:
    """Global parameters: size n, level ell, characteristic e, weighting
    theta and multicharge kappa."""

    n: int
    ell: int
    e: int | None
    theta: tuple[int, ...]
    kappa: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", tuple(self.theta))
        object.__setattr__(self, "kappa", tuple(self.kappa))


def validate_params(p: Params) -> str | None:
    """Return ``None`` when the parameters are valid, otherwise a message
    describing the first violated condition."""
    if p.n < 0:
        return "n must be nonnegative"
    if p.ell < 1:
        return "ell must be positive"
    if p.e is not None and p.e < 3:
        return "e must be >= 3 or infinity"
    if len(p.theta) != p.ell:
        return f"theta must have length ell = {p.ell}"
    if len(p.kappa) != p.ell:
        return f"kappa must have length ell = {p.ell}"
    for i in range(p.ell - 1):
        if p.theta[i] >= p.theta[i + 1]:
            return f"theta is not strictly increasing at index {i}"
    for i in range(p.ell):
        for j in range(i + 1, p.ell):
            if (p.theta[j] - p.theta[i]) % p.ell == 0:
                return (
                    f"theta[{j}] - theta[{i}] = {p.theta[j] - p.theta[i]} "
                    f"is a multiple of ell = {p.ell}"
                )
    if p.e is not None:
        for i, k in enumerate(p.kappa):
            if not 0 <= k < p.e:
                return f"kappa[{i}] = {k} is not a residue mod {p.e}"
    return None


def is_well_separated(p: Params) -> bool:
    """True iff every pairwise gap of theta exceeds n * ell."""
    return all(
        abs(p.theta[j] - p.theta[i]) > p.n * p.ell
        for i in range(p.ell)
        for j in range(i + 1, p.ell)
    )


@dataclass(frozen=True)
class Multipartition:
    """An ell-tuple of partitions (weakly decreasing, no trailing zeros)."""

    components: tuple[Partition, ...]

    def __post_init__(self) -> None:
        comps = tuple(tuple(int(x) for x in comp) for comp in self.components)
        for comp in comps:
            if any(x < 1 for x in comp):
                raise ValueError(f"partition entries must be >= 1: {comp}")
            if any(comp[i] < comp[i + 1] for i in range(len(comp) - 1)):
                raise ValueError(f"partition must be weakly decreasing: {comp}")
        object.__setattr__(self, "components", comps)

    @property
    def ell(self) -> int:
        return len(self.components)

    def size(self) -> int:
        return sum(sum(comp) for comp in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(
            "(" + ",".join(map(str, comp)) + ")" for comp in self.components
        ) + ")"


def residue(node: Node, p: Params) -> int:
    """Residue kappa_m + c - r, reduced mod e when e is finite."""
    val = p.kappa[node.m - 1] + node.c - node.r
    if p.e is None:
        return val
    return val % p.e


def nodes(mp: Multipartition) -> list[Node]:
    """The Young diagram of ``mp``, ordered by (m, r, c)."""
    out: list[Node] = []
    for m, comp in enumerate(mp.components, start=1):
        for r, row_len in enumerate(comp, start=1):
            out.extend(Node(r, c, m) for c in range(1, row_len + 1))
    return out


def removable_nodes(mp: Multipartition) -> list[Node]:
    """Nodes whose removal leaves a multipartition, ordered by (m, r, c)."""
    out: list[Node] = []
    for m, comp in enumerate(mp.components, start=1):
        for r, row_len in enumerate(comp, start=1):
            below = comp[r] if r < len(comp) else 0
            if row_len > below:
                out.append(Node(r, row_len, m))
    return out


def remove_node(mp: Multipartition, node: Node) -> Multipartition:
    """Remove a removable node, returning the smaller multipartition."""
    comps = list(mp.components)
    comp = list(comps[node.m - 1])
    if node.r > len(comp) or comp[node.r - 1] != node.c:
        raise ValueError(f"{node} is not removable from {mp}")
    comp[node.r - 1] -= 1
    comps[node.m - 1] = tuple(x for x in comp if x > 0)
    return Multipartition(tuple(comps))


def _partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts <= max_part, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int, ell: int) -> tuple[Multipartition, ...]:
    """All ell-multipartitions of n in a fixed deterministic order
    (lexicographic on the tuple of component tuples)."""
    if n < 0 or ell < 1:
        raise ValueError("need n >= 0 and ell >= 1")

    def rec(remaining: int, comps_left: int) -> Iterator[tuple[Partition, ...]]:
        if comps_left == 1:
            for lam in _partitions(remaining):
                yield (lam,)
            return
        for k in range(remaining + 1):
            for head in _partitions(k):
                for tail in rec(remaining - k, comps_left - 1):
                    yield (head,) + tail

    all_comps = sorted(rec(n, ell))
    return tuple(Multipartition(c) for c in all_comps)
