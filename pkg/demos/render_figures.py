"""Emit SVG figures for a small example: the tilted Young diagram of each
multipartition with the cut line, and the strand picture of a semistandard
tableau.  Output lands in the current directory."""

from __future__ import annotations

from fractions import Fraction

from cherecut import (
    CutSpec,
    Multipartition,
    Params,
    enumerate_sstd,
    render_russian,
    render_theta_diagram,
)


def main() -> None:
    p = Params(n=3, ell=1, e=3, theta=(0,), kappa=(0,))
    lam = Multipartition(((3,),))
    mu = Multipartition(((2, 1),))
    cut = CutSpec.from_rational(Fraction(1, 2))

    for name, mp in [("lam", lam), ("mu", mu)]:
        path = f"russian_{name}.svg"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render_russian(mp, cut, p).to_svg())
        print(f"wrote {path}")

    t = enumerate_sstd(lam, mu, p)[0]
    with open("strands.svg", "w", encoding="utf-8") as fh:
        fh.write(render_theta_diagram(t, cut, p).to_svg())
    print("wrote strands.svg")


if __name__ == "__main__":
    main()
