from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as hst

from fracweyl.algebra import WeylElement, X, Y, embed_level
from fracweyl.errors import PreconditionError
from fracweyl.transform import (apply_phi, cut_step, frak_f_and_multiplicity, phi_symbol,
                                run_chain)
from fracweyl.unipoly import UniPoly
from fracweyl.valuation import (Direction, dir_cmp, degree, directions_between, en,
                                leading_part, st, valuation_set, UPPER)
from helpers import COEFFS, rand_cut_input, rand_direction, rand_element

half = Fraction(1, 2)


def test_phi_example():
    d = Direction(2, -1)
    assert apply_phi(X(half) * Y(), 1, d, 2) == X(half) * Y() + embed_level(X(0), 2)


def test_phi_zero_is_identity():
    P = X(3) * Y(2) + X(-1) * Y()
    assert apply_phi(P, 0, Direction(2, -1), 2) == embed_level(P, 2)


def test_phi_divisibility():
    with pytest.raises(PreconditionError):
        apply_phi(X(), 1, Direction(2, -1), 3)


def test_frak_examples():
    d = Direction(3, -1)
    # x^0 y^0 (1 + (x y^3 ... )): f = (1 + x^3)^4
    P = (X(0) + X() * Y(3)) ** 4
    frak, m, lam = frak_f_and_multiplicity(P, d)
    assert frak == UniPoly([1, 0, 0, 1]) ** 4 and (m, lam) == (4, -1)
    Q = (X(0) + X(Fraction(2, 3)) * Y(2)) ** 3
    frak, m, lam = frak_f_and_multiplicity(Q, d)
    assert m == 3 and lam == UniPoly([1, 0, 1])


def test_frak_monomial():
    frak, m, lam = frak_f_and_multiplicity(X(2) * Y(3), Direction(2, -1))
    assert (frak, m, lam) == (UniPoly([0, 0, 0, 1]), 3, 0)


def test_frak_constant():
    frak, m, lam = frak_f_and_multiplicity(X(2), Direction(2, -1))
    assert (m, lam) == (0, None)


def test_cut_example():
    P = X() * Y() + X(2) * Y(4)
    rep = cut_step(P, None, Direction(3, -1))
    assert rep.lam == -1 and rep.m_lambda == 1
    assert rep.predicted_corner.x == 1 and rep.predicted_corner.y == 1
    for k in (5, 6, 8, 9):
        assert rep.status(k) == "pass"
    for k in (1, 2, 3, 4, 7, 10, 11):
        assert rep.status(k) == "skipped"


def test_cut_monomial_rejected():
    with pytest.raises(PreconditionError):
        cut_step(X(2) * Y(), None, Direction(2, -1))


def test_cut_relaxed_pair():
    C = X() * Y() + X(2) * Y(4) + Y()
    d = Direction(3, -1)
    rep = cut_step(C ** 2, C ** 3, d)
    assert rep.hypotheses["b"] is False
    for k in (5, 6, 9):
        assert rep.status(k) == "pass"


def test_irrational_cut():
    P = (X(0) + X(Fraction(2, 3)) * Y(2)) ** 3
    rep = cut_step(P, None, Direction(3, -1))
    assert rep.phiP is None and isinstance(rep.lam, UniPoly)
    assert rep.predicted_corner.y == rep.m_lambda == 3
    assert rep.status(8) in ("pass", "fail")


def test_strict_gate():
    with pytest.raises(PreconditionError):
        run_chain(X(), Y(2), mode="strict")


def test_strict_is_vacuous_on_weyl_pair():
    run = run_chain(X(), Y(), mode="strict")
    assert len(run.steps) == 0 or run.steps[0].report is None


def test_relaxed_run_terminates():
    C = X() * Y() + X(2) * Y(4) + Y()
    run = run_chain(C ** 2, C ** 3, mode="relaxed", max_steps=10)
    measures = [s.measure for s in run.steps]
    assert measures == sorted(measures, reverse=True)
    assert run.stop_reason != "max_steps reached"


def _phi_inputs(rnd):
    d = rand_direction(rnd, 4, sigma_nonpositive=True)
    level = rnd.choice([1, 2, 3])
    P = rand_element(rnd, level=level, max_terms=4, max_xnum=6, max_y=4)
    lam = Fraction(rnd.choice(COEFFS))
    lprime = level * d.rho * rnd.choice([1, 2])
    return d, P, lam, lprime


@given(hst.randoms(use_true_random=False))
def test_automorphism_laws(rnd):
    d, P, lam, lprime = _phi_inputs(rnd)
    img = apply_phi(P, lam, d, lprime)
    assert degree(img, d) == degree(P, d)
    assert leading_part(img, d) == phi_symbol(leading_part(P, d), lam, d, lprime)
    for e in directions_between(d, UPPER, 5):
        assert leading_part(img, e) == embed_level(leading_part(P, e), lprime)


@given(hst.randoms(use_true_random=False))
def test_phi_is_multiplicative(rnd):
    d, P, lam, lprime = _phi_inputs(rnd)
    Q = rand_element(rnd, level=P.level, max_terms=3, max_xnum=4, max_y=3)
    assert apply_phi(P * Q, lam, d, lprime) == apply_phi(P, lam, d, lprime) * apply_phi(Q, lam, d, lprime)


@given(hst.randoms(use_true_random=False))
def test_cut_corner_formula(rnd):
    P, d = rand_cut_input(rnd)
    rep = cut_step(P, None, d)
    assert isinstance(rep.lam, Fraction)
    assert rep.predicted_corner == st(rep.phiP, d)
    assert dir_cmp(rep.new_dir, d) < 0
    if rep.new_dir.interior():
        assert en(rep.phiP, rep.new_dir) == st(rep.phiP, d)
    assert rep.status(8) == "pass"
