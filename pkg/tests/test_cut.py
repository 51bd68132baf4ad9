from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cherecut.combinatorics import Multipartition, Params, enumerate_multipartitions
from cherecut.cut import (
    CutSpec,
    InvalidCutError,
    admits_cut,
    cosaturated_closure,
    diagonal_sets,
    lambda_set,
    saturated_closure,
    split,
    split_pair,
    split_tableau,
    subquotient_graded_dim,
    verify_tableau_bijection,
)
from cherecut.loading import theta_dominates
from cherecut.tableaux import enumerate_sstd, tableau_degree


def mk(*comps) -> Multipartition:
    return Multipartition(tuple(tuple(c) for c in comps))


RUN = Params(n=15, ell=1, e=3, theta=(0,), kappa=(0,))
RUN_LAM = mk((5, 4, 3, 2, 1))
RUN_MU = mk((4, 4, 4, 1, 1, 1))

BIP = Params(n=57, ell=2, e=5, theta=(0, 1), kappa=(0, 2))
BIP_LAM = mk((11, 9, 7, 3, 3, 2, 1, 1, 1), (9, 4, 2, 1, 1, 1, 1))
BIP_MU = mk((10, 9, 8, 4, 3, 1, 1, 1, 1, 1), (8, 4, 2, 1, 1, 1, 1))

CYC = Params(n=57, ell=2, e=3, theta=(0, 115), kappa=(0, 1))
CYC_LAM = mk((5, 5, 4, 4, 3, 2, 1), (9, 6, 4, 4, 3, 2, 2, 2, 1))
CYC_MU = mk((5, 4, 4, 3, 3, 3), (9, 6, 5, 4, 4, 2, 2, 1, 1, 1))


def test_level_one_cut():
    cut = CutSpec.from_rational(Fraction(1, 2))
    assert admits_cut(RUN_LAM, RUN_MU, cut, RUN)
    dec = diagonal_sets(RUN_LAM, cut, RUN)
    assert {(e.pos.base, e.pos.eps, e.res) for e in dec.I} == {
        (Fraction(0), 2, 0),
        (Fraction(0), 4, 0),
        (Fraction(0), 6, 0),
    }
    assert len(dec.L) == 6 and len(dec.R) == 6
    lam_l, mu_l, lam_r, mu_r = split_pair(RUN_LAM, RUN_MU, cut, RUN)
    assert lam_l == mk((5, 4, 3))
    assert lam_r == mk((3, 3, 3, 2, 1))
    assert mu_l == mk((4, 4, 4))
    assert mu_r == mk((3, 3, 3, 1, 1, 1))


def test_bipartition_cut_at_26_5():
    cut = CutSpec.from_rational(Fraction(26, 5))
    lam_l, mu_l, lam_r, mu_r = split_pair(BIP_LAM, BIP_MU, cut, BIP)
    assert lam_l == mk((11, 9, 7, 3, 3), (9, 4, 2))
    assert lam_r == mk((3, 3, 3, 3, 3, 2, 1, 1, 1), (1,) * 7)
    assert mu_l == mk((10, 9, 8, 4, 3), (8, 4, 2))
    assert mu_r == mk((3, 3, 3, 3, 3, 1, 1, 1, 1, 1), (1,) * 7)


def test_cyclotomic_cut_at_121_lenient():
    cut = CutSpec.from_rational(121, "lenient")
    lam_l, mu_l, lam_r, mu_r = split_pair(CYC_LAM, CYC_MU, cut, CYC)
    assert lam_l == mk((5, 5, 4, 4, 3, 2, 1), (9, 6, 4, 4, 3))
    assert lam_r == mk((), (3, 3, 3, 3, 3, 2, 2, 2, 1))
    assert mu_l == mk((5, 4, 4, 3, 3, 3), (9, 6, 5, 4, 4))
    assert mu_r == mk((), (3, 3, 3, 3, 3, 2, 2, 1, 1, 1))


def test_strict_mode_rejects_node_abscissa():
    cut = CutSpec.from_rational(121, "strict")
    with pytest.raises(InvalidCutError):
        diagonal_sets(CYC_LAM, cut, CYC)


def test_empty_multipartition_decomposition():
    p = Params(n=0, ell=2, e=5, theta=(0, 1), kappa=(0, 2))
    dec = diagonal_sets(mk((), ()), CutSpec.from_rational(Fraction(1, 2)), p)
    assert dec.I == () and dec.L == () and dec.R == ()


def test_decomposition_partitions_loading():
    cut = CutSpec.from_rational(Fraction(3, 2))
    for mp in enumerate_multipartitions(5, 2):
        dec = diagonal_sets(mp, cut, BIP)
        assert len(dec.I) + len(dec.L) + len(dec.R) == mp.size()
        a = cut.a
        assert all(e.pos < a.shift(-BIP.ell) for e in dec.L)
        assert all(a.shift(-BIP.ell) <= e.pos < a for e in dec.I)
        assert all(e.pos > a for e in dec.R)


def test_split_consistent_with_decomposition():
    p = Params(n=6, ell=1, e=3, theta=(0,), kappa=(0,))
    cut = CutSpec.from_rational(Fraction(3, 2))
    for mp in enumerate_multipartitions(6, 1):
        left, right = split(mp, cut, p)
        dec = diagonal_sets(mp, cut, p)
        dl = diagonal_sets(left, cut, p)
        dr = diagonal_sets(right, cut, p)
        # each piece keeps the whole band and its own side unchanged; the
        # shared rectangle may add nodes on the far side of the band
        assert {(e.pos, e.res) for e in dl.I} == {(e.pos, e.res) for e in dec.I}
        assert {(e.pos, e.res) for e in dr.I} == {(e.pos, e.res) for e in dec.I}
        assert dl.L == dec.L
        assert dr.R == dec.R


def test_admits_requires_equal_sizes():
    with pytest.raises(ValueError):
        admits_cut(mk((2,)), mk((3,)), CutSpec.from_rational(Fraction(1, 2)), RUN)


def test_split_pair_rejects_non_admitting():
    cut = CutSpec.from_rational(Fraction(1, 2))
    p = Params(n=3, ell=1, e=3, theta=(0,), kappa=(0,))
    with pytest.raises(InvalidCutError):
        split_pair(mk((3,)), mk((2, 1)), cut, p)


def test_closures_are_idempotent_and_monotone():
    p = Params(n=4, ell=2, e=5, theta=(0, 1), kappa=(0, 2))
    universe = enumerate_multipartitions(4, 2)
    rng = random.Random(7)
    sample = tuple(rng.sample(universe, 5))
    e_set = saturated_closure(sample, p, universe)
    f_set = cosaturated_closure(sample, p, universe)
    assert set(sample) <= set(e_set) and set(sample) <= set(f_set)
    assert set(saturated_closure(e_set, p, universe)) == set(e_set)
    assert set(cosaturated_closure(f_set, p, universe)) == set(f_set)
    # downward closure: anything dominated by a member is a member
    for mu in e_set:
        for nu in universe:
            if theta_dominates(mu, nu, p):
                assert nu in e_set
    for mu in f_set:
        for nu in universe:
            if theta_dominates(nu, mu, p):
                assert nu in f_set


def test_closure_of_everything_is_everything():
    p = Params(n=3, ell=2, e=5, theta=(0, 1), kappa=(0, 2))
    universe = enumerate_multipartitions(3, 2)
    assert set(saturated_closure(universe, p, universe)) == set(universe)
    assert set(cosaturated_closure(universe, p, universe)) == set(universe)
    assert saturated_closure((), p, universe) == ()


def test_lambda_set_is_intersection_of_closures():
    p = Params(n=5, ell=1, e=3, theta=(0,), kappa=(0,))
    cut = CutSpec.from_rational(Fraction(1, 2))
    for lam in enumerate_multipartitions(5, 1):
        cs = lambda_set(lam, cut, p)
        assert set(cs.members) == set(cs.E) & set(cs.F)


def test_identity_pair_bijection():
    cut = CutSpec.from_rational(Fraction(1, 2))
    p = Params(n=4, ell=1, e=3, theta=(0,), kappa=(0,))
    lam = mk((2, 2))
    report = verify_tableau_bijection(lam, lam, cut, p)
    assert report.ok()
    assert (report.count, report.count_left, report.count_right) == (1, 1, 1)


def test_running_example_bijection_and_degrees():
    cut = CutSpec.from_rational(Fraction(1, 2))
    report = verify_tableau_bijection(RUN_LAM, RUN_MU, cut, RUN)
    assert report.ok()


def test_split_tableau_degrees_add():
    p = Params(n=6, ell=1, e=3, theta=(0,), kappa=(0,))
    cut = CutSpec.from_rational(Fraction(1, 2))
    universe = enumerate_multipartitions(6, 1)
    checked = 0
    for lam in universe:
        for mu in universe:
            if not admits_cut(lam, mu, cut, p):
                continue
            for t in enumerate_sstd(lam, mu, p):
                tl, tr = split_tableau(t, cut, p)
                from dataclasses import replace

                pl = replace(p, n=tl.shape.size())
                pr = replace(p, n=tr.shape.size())
                assert tableau_degree(t, p) == tableau_degree(
                    tl, pl
                ) + tableau_degree(tr, pr)
                checked += 1
    assert checked > 0


def test_subquotient_dimension_factorizes():
    p = Params(n=5, ell=1, e=3, theta=(0,), kappa=(0,))
    cut = CutSpec.from_rational(Fraction(1, 2))
    from dataclasses import replace

    lam = mk((3, 2))
    cs = lambda_set(lam, cut, p)
    dim = subquotient_graded_dim(cs, p)
    lam_l, lam_r = split(lam, cut, p)
    pl, pr = replace(p, n=lam_l.size()), replace(p, n=lam_r.size())
    dim_l = subquotient_graded_dim(lambda_set(lam_l, cut, pl), pl)
    dim_r = subquotient_graded_dim(lambda_set(lam_r, cut, pr), pr)
    assert dim == dim_l * dim_r
    assert not dim.is_zero()
