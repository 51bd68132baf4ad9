"""Cut a pair of large bipartitions at x = 26/5 and combine the known
decomposition polynomials of the two pieces.

The pieces are small enough for other methods to handle even though the
original pair is not: the left pieces differ only in residue-0 nodes and the
right pieces only in residue-1 nodes.  Multiplying their polynomials gives
the polynomial of the original pair.
"""

from __future__ import annotations

from fractions import Fraction

from cherecut import (
    CutSpec,
    GradedPoly,
    Multipartition,
    Params,
    admits_cut,
    factor_decomposition,
    split_pair,
)


def main() -> None:
    p = Params(n=57, ell=2, e=5, theta=(0, 1), kappa=(0, 2))
    lam = Multipartition(((11, 9, 7, 3, 3, 2, 1, 1, 1), (9, 4, 2, 1, 1, 1, 1)))
    mu = Multipartition(((10, 9, 8, 4, 3, 1, 1, 1, 1, 1), (8, 4, 2, 1, 1, 1, 1)))
    cut = CutSpec.from_rational(Fraction(26, 5))

    print(f"admits cut at x = {cut.a.base}: {admits_cut(lam, mu, cut, p)}")
    lam_l, mu_l, lam_r, mu_r = split_pair(lam, mu, cut, p)
    for name, piece in [("lambda^L", lam_l), ("lambda^R", lam_r),
                        ("mu^L", mu_l), ("mu^R", mu_r)]:
        print(f"{name} = {piece}")

    d_left = GradedPoly({5: 1, 3: 1})
    d_right = GradedPoly({2: 1})
    print(f"d_left = {d_left}, d_right = {d_right}")
    print(f"combined: {factor_decomposition(d_left, d_right)}")


if __name__ == "__main__":
    main()
