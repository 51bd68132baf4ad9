"""Graded polynomials in t with nonnegative integer coefficients, and the
factorization / Kunneth arithmetic applied to supplied tables.

Decomposition-number polynomials are never computed from scratch here; they
are validated, multiplied and combined.
"""

from __future__ import annotations

from typing import Mapping


class GradedPoly:
    """A Laurent polynomial in t with nonnegative integer coefficients.

    Exponents may be negative; zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for exp, c in (coeffs or {}).items():
            exp = int(exp)
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficient of t^{exp} must be an integer, got {c!r}")
            if c < 0:
                raise ValueError(f"coefficient of t^{exp} is negative: {c}")
            if c:
                clean[exp] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "GradedPoly":
        return cls({})

    @classmethod
    def one(cls) -> "GradedPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "GradedPoly":
        return cls({exp: coeff})

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "GradedPoly":
        return cls({int(k): v for k, v in obj.items()})

    def to_json(self) -> dict[str, int]:
        return {str(exp): c for exp, c in sorted(self.coeffs.items(), reverse=True)}

    def is_zero(self) -> bool:
        return not self.coeffs

    def total(self) -> int:
        """Evaluation at t = 1."""
        return sum(self.coeffs.values())

    def top_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no top degree")
        return max(self.coeffs)

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return GradedPoly(out)

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return GradedPoly(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"GradedPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            if exp == 0:
                terms.append(str(c))
            else:
                t = "t" if exp == 1 else f"t^{exp}"
                terms.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(terms)


ExtTable = dict[int, GradedPoly]


def poly_mul(f: GradedPoly, g: GradedPoly) -> GradedPoly:
    return f * g


def factor_decomposition(d_left: GradedPoly, d_right: GradedPoly) -> GradedPoly:
    """The decomposition polynomial of a pair admitting a cut is the product
    of the polynomials of its two pieces.  The caller certifies the cut."""
    return d_left * d_right


def kunneth_combine(ext_left: ExtTable, ext_right: ExtTable) -> ExtTable:
    """Combine two Ext tables: result[k] = sum over i + j = k of the products
    of the graded dimensions in homological degrees i and j."""
    out: ExtTable = {}
    for i, f in ext_left.items():
        for j, g in ext_right.items():
            prod = f * g
            if prod.is_zero():
                continue
            k = i + j
            out[k] = out[k] + prod if k in out else prod
    return {k: out[k] for k in sorted(out)}


def ext_table_from_json(obj: Mapping[str, Mapping[str, int]]) -> ExtTable:
    table: ExtTable = {}
    for k, poly in obj.items():
        deg = int(k)
        if deg < 0:
            raise ValueError(f"homological degree must be nonnegative: {deg}")
        table[deg] = GradedPoly.from_json(poly)
    return {k: table[k] for k in sorted(table)}


def ext_table_to_json(table: ExtTable) -> dict[str, dict[str, int]]:
    return {str(k): table[k].to_json() for k in sorted(table)}
