from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as hst

from fracweyl.algebra import SupportPoint, WeylElement, X, Y, commutator
from fracweyl.bracket import (bracket_closed_form, bracket_rs, default_dmax,
                              extract_common_root, ode_identity, pavadass_check,
                              radical_divides, solve_F)
from fracweyl.errors import PreconditionError
from fracweyl.unipoly import UniPoly
from fracweyl.valuation import (Direction, aligned_points, degree, en, leading_part,
                                reconstruct_from_f, st)
from helpers import rand_direction, rand_homogeneous, rand_line_element

D10 = Direction(1, 0)


def sym(*pts):
    return WeylElement.from_points({(Fraction(x), y): c for x, y, c in pts}, commutative=True)


class TestExamples:
    def test_defining_relation(self):
        out = bracket_rs(Y(), X(), D10)
        assert not out.proportional and out.value == sym((0, 0, 1))

    def test_x_xy_is_not_proportional(self):
        # v_{1,0}(XY) = 1, so the bound is 1 + 1 - 1 = 1 = v_{1,0}(-X)
        out = bracket_rs(X(), X() * Y(), D10)
        assert not out.proportional
        assert out.value == sym((1, 0, -1))

    def test_sigma_positive_rejected(self):
        with pytest.raises(PreconditionError):
            bracket_rs(X(), Y(), (1, 1))

    def test_ode_x_y(self):
        cert = ode_identity(X(), Y(), D10)
        assert (cert.h, cert.c, cert.a, cert.b, cert.holds) == (0, -1, 0, 1, True)

    def test_ode_rejects_proportional(self):
        P = X(2) * Y() + X(2)
        with pytest.raises(PreconditionError):
            ode_identity(P * P, P * P * P, D10)

    def test_monomial_root(self):
        fac = extract_common_root(X(4) * Y(2), X(6) * Y(3), D10)
        assert (fac.m, fac.n) == (2, 3)
        assert fac.R == sym((2, 1, 1))

    def test_root_absorbs_square(self):
        R = X() * Y() + X(2) * Y(4)
        d = Direction(3, -1)
        fac = extract_common_root(R ** 2, R ** 4, d)
        assert (fac.m, fac.n) == (1, 2)
        assert (fac.R ** 1).scale(fac.lamP) == leading_part(R ** 2, d)

    def test_solve_F_x(self):
        F = solve_F(X(), D10)
        assert F == -(X() * Y())
        assert commutator(X(), F) == X()

    def test_solve_F_degree_gate(self):
        with pytest.raises(PreconditionError):
            solve_F(Y(), D10)

    def test_default_dmax(self):
        P = X(2) * Y(3) + X(2)
        assert default_dmax(P, D10) == 4

    def test_pavadass_gate(self):
        # f_F = (x-1)^2 but [P,F] is not l(P)
        F = sym((1, 1, 1), (1, 2, -2), (1, 3, 1))
        with pytest.raises(PreconditionError):
            pavadass_check(X(2) + X(2) * Y(), F.with_flag(False), D10)

    def test_radical_flag(self):
        fP = UniPoly.from_roots([1, 2])
        assert not radical_divides(fP, UniPoly.from_roots([1]))
        assert radical_divides(fP, UniPoly.from_roots([1, 2, 5]))


def _pair(rnd, sigma_nonpositive=True):
    d = rand_direction(rnd, 4, sigma_nonpositive=True)
    lvl = rnd.choice([1, 2, 3])
    P = rand_homogeneous(rnd, d, rnd.randint(1, 8), lvl)
    Q = rand_homogeneous(rnd, d, rnd.randint(1, 8), lvl)
    return d, P, Q


@given(hst.randoms(use_true_random=False))
def test_closed_form_equals_commutator(rnd):
    d, P, Q = _pair(rnd)
    assume(P is not None and Q is not None)
    out = bracket_rs(P, Q, d)
    comm = commutator(P, Q)
    bound = degree(P, d) + degree(Q, d) - d.total()
    if out.proportional:
        assert comm.is_zero() or degree(comm, d) < bound
        assert bracket_closed_form(P, Q, d).is_zero()
    else:
        assert degree(comm, d) == bound
        assert out.value == leading_part(comm, d)


@given(hst.randoms(use_true_random=False))
def test_ode_identity_holds(rnd):
    d, P, Q = _pair(rnd)
    assume(P is not None and Q is not None)
    assume(not bracket_rs(P, Q, d).proportional)
    cert = ode_identity(P, Q, d)
    assert cert.holds
    assert cert.a == degree(Q, d) / d.rho and cert.b == degree(P, d) / d.rho


@given(hst.randoms(use_true_random=False))
def test_proportional_means_aligned(rnd):
    d = rand_direction(rnd, 4, sigma_nonpositive=True)
    R = rand_line_element(rnd, d, rnd.choice([1, 2]), rnd.randint(1, 3), commutative=False)
    assume(degree(R, d) > 0)
    P, Q = R ** 2, R ** 3
    assert bracket_rs(P, Q, d).proportional
    assert aligned_points(st(P, d), st(Q, d)) and aligned_points(en(P, d), en(Q, d))
    cert = ode_identity(P, Q, d, allow_proportional=True)
    assert cert.c == 0 and cert.holds


@given(hst.randoms(use_true_random=False), hst.integers(2, 4))
def test_power_commutator_formula(rnd, m):
    d, C, E = _pair(rnd)
    assume(C is not None and E is not None)
    base = bracket_rs(C, E, d)
    assume(not base.proportional)
    lhs = bracket_rs(C ** m, E, d)
    assert not lhs.proportional
    assert lhs.value == (leading_part(C, d) ** (m - 1) * base.value).scale(m)


@given(hst.randoms(use_true_random=False))
def test_nonaligned_start_corner(rnd):
    d, P, Q = _pair(rnd)
    assume(P is not None and Q is not None)
    assume(not aligned_points(st(P, d), st(Q, d)))
    out = bracket_rs(P, Q, d)
    assert not out.proportional
    assert st(out.value, d) == st(P, d) + st(Q, d) - SupportPoint(1, 1, 1)


@given(hst.randoms(use_true_random=False), hst.sampled_from([(2, 3), (3, 4), (2, 5)]))
def test_root_round_trip(rnd, mn):
    d = rand_direction(rnd, 4, sigma_nonpositive=True)
    R = rand_line_element(rnd, d, rnd.choice([1, 2]), rnd.randint(2, 3), commutative=True)
    assume(degree(R, d) > 0)
    m, n = mn
    P, Q = (R ** m).with_flag(False), (R ** n).with_flag(False).scale(3)
    fac = extract_common_root(P, Q, d)
    assert (fac.m, fac.n) == (m, n)
    ratio = R.coeff(st(R, d)) / fac.R.coeff(st(fac.R, d))
    assert fac.R.scale(ratio) == R


def test_reconstruct_from_f_inverts():
    d = Direction(3, -1)
    R = WeylElement.from_points({(Fraction(1), 1): 1, (Fraction(2), 4): 2}, commutative=True)
    f = UniPoly([1, 0, 0, 2])
    assert reconstruct_from_f(f, SupportPoint.of(1, 1), d) == R
