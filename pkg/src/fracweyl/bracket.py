"""The (rho, sigma)-bracket and what it controls: the polynomial identity
between f-polynomials, common roots of proportional pairs, and the linear
solve for an element F with [P, F]_{rho,sigma} = l(P)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Optional, Tuple

from .algebra import SupportPoint, WeylElement, commutator
from .errors import ConsistencyError, PreconditionError
from .linsolve import solve_linear
from .unipoly import UniPoly, is_squarefree, power_decompose, radical
from .valuation import (Direction, degree, en, f_polynomial, is_homogeneous,
                        leading_part, reconstruct_from_f)


@dataclass(frozen=True)
class BracketOutcome:
    value: WeylElement
    proportional: bool
    degree_witness: Fraction


@dataclass(frozen=True)
class OdeCertificate:
    h: int
    c: Fraction
    a: Fraction
    b: Fraction
    holds: bool


@dataclass(frozen=True)
class RootFactorization:
    R: WeylElement
    m: int
    n: int
    lamP: Fraction
    lamQ: Fraction


@dataclass(frozen=True)
class PavadassReport:
    separable: bool
    radical_divides: bool

    @property
    def ok(self) -> bool:
        return self.separable and self.radical_divides


def _check_direction(d) -> Direction:
    d = Direction.of(d)
    if d.sigma > 0:
        raise PreconditionError("the bracket is only used with sigma <= 0")
    if not d.interior():
        raise PreconditionError("direction must satisfy rho + sigma > 0")
    return d


def bracket_closed_form(P: WeylElement, Q: WeylElement, d) -> WeylElement:
    """sum_{i,j} lam_i mu_j (q_j x p_i) x^{p_i + q_j - (1,1)} over the leading
    supports; depends on the leading parts only."""
    d = _check_direction(d)
    lp = leading_part(P, d)
    lq = leading_part(Q, d)
    pts: Dict[Tuple[Fraction, int], Fraction] = {}
    for p, lam in lp.items():
        for q, mu in lq.items():
            c = q.cross(p)
            if not c:
                continue
            key = (p.x + q.x - 1, p.y + q.y - 1)
            pts[key] = pts.get(key, 0) + lam * mu * c
    level = lcm(P.level, Q.level)
    return WeylElement.from_points({k: v for k, v in pts.items() if v},
                                   commutative=True, min_level=level)


def bracket_rs(P: WeylElement, Q: WeylElement, d) -> BracketOutcome:
    """Decided from the degree of the full commutator, then cross-checked
    against the closed form."""
    d = _check_direction(d)
    if P.is_zero() or Q.is_zero():
        raise PreconditionError("bracket of a zero element")
    witness = degree(P, d) + degree(Q, d) - d.total()
    comm = commutator(P, Q)
    level = lcm(P.level, Q.level)
    if comm.is_zero() or degree(comm, d) < witness:
        value = WeylElement.zero(level, True)
        proportional = True
    else:
        if degree(comm, d) > witness:
            raise ConsistencyError("commutator degree exceeds the general bound")
        value = leading_part(comm, d)
        proportional = False
    closed = bracket_closed_form(P, Q, d)
    if closed != value:
        raise ConsistencyError("closed-form bracket disagrees with the commutator")
    return BracketOutcome(value, proportional, witness)


def ode_identity(P: WeylElement, Q: WeylElement, d,
                 allow_proportional: bool = False) -> OdeCertificate:
    """Check x^h f_[P,Q] = c f_P f_Q + a x f_P' f_Q - b x f_Q' f_P.

    A proportional pair has no f_[P,Q]; with ``allow_proportional`` the left
    side is taken to be 0 (and h = 0), which is the degenerate identity."""
    d = _check_direction(d)
    outcome = bracket_rs(P, Q, d)
    if outcome.proportional and not allow_proportional:
        raise PreconditionError("proportional pair: f of the bracket is undefined")
    fP, stP = f_polynomial(P, d)
    fQ, stQ = f_polynomial(Q, d)
    a = degree(Q, d) / d.rho
    b = degree(P, d) / d.rho
    c = stQ.cross(stP)
    x = UniPoly.x()
    rhs = c * fP * fQ + a * x * fP.derivative() * fQ - b * x * fQ.derivative() * fP
    if outcome.proportional:
        h, lhs, corner_ok = 0, UniPoly(), True
    else:
        fB, stB = f_polynomial(outcome.value, d)
        h = stB.y - (stP.y + stQ.y - 1)
        slope = Fraction(-d.sigma, d.rho)
        corner_ok = h >= 0 and stB.x == stP.x + stQ.x - 1 + h * slope
        lhs = fB.shift(h) if h >= 0 else UniPoly()
    # c again, read off the identity at x = 0
    c_again = lhs[0] / (fP[0] * fQ[0])
    if corner_ok and c_again != c:
        raise ConsistencyError("scalar c disagrees with its value from the identity")
    return OdeCertificate(h=h, c=c, a=a, b=b, holds=corner_ok and lhs == rhs)


def extract_common_root(P: WeylElement, Q: WeylElement, d) -> RootFactorization:
    """For a proportional pair with positive degrees, return R, m, n with
    l(P) = lamP R^m and l(Q) = lamQ R^n."""
    d = _check_direction(d)
    if not bracket_rs(P, Q, d).proportional:
        raise PreconditionError("pair is not proportional")
    vP, vQ = degree(P, d), degree(Q, d)
    if vP <= 0 or vQ <= 0:
        raise PreconditionError("both degrees must be positive")
    ratio = vP / vQ
    m, n = ratio.numerator, ratio.denominator
    fP, stP = f_polynomial(P, d)
    fQ, stQ = f_polynomial(Q, d)
    if stP.y % m or stQ.y % n:
        raise ConsistencyError("start corners are not multiples of a common point")
    base = stP.scale(Fraction(1, m))
    if stQ != base.scale(n):
        raise ConsistencyError("start corners are not aligned as predicted")
    if fP.degree() == 0:
        g = UniPoly([1])
        lamP = fP[0]
    else:
        g0, M, lamP = power_decompose(fP)
        if M % m:
            raise ConsistencyError("f_P is not an m-th power")
        g = g0 ** (M // m)
    gn = g ** n
    lamQ = fQ.lc() / gn.lc()
    if fQ != gn * lamQ:
        raise ConsistencyError("f_Q is not a multiple of g^n")
    R = reconstruct_from_f(g, base, d)
    if leading_part(P, d) != (R ** m).scale(lamP) or leading_part(Q, d) != (R ** n).scale(lamQ):
        raise ConsistencyError("reconstructed root does not reproduce the leading parts")
    return RootFactorization(R=R, m=m, n=n, lamP=lamP, lamQ=lamQ)


def default_dmax(P: WeylElement, d) -> int:
    return en(P, d).y + 1


def solve_F(P: WeylElement, d, Dmax: Optional[int] = None) -> Optional[WeylElement]:
    """A (rho,sigma)-homogeneous F of degree rho+sigma at the level of P with
    [P, F]_{rho,sigma} = l(P), or None when none exists with y <= Dmax."""
    d = _check_direction(d)
    if degree(P, d) <= 0:
        raise PreconditionError("solve_F needs v_d(P) > 0")
    if Dmax is None:
        Dmax = default_dmax(P, d)
    level = P.level
    lead = leading_part(P, d)
    unknowns = []
    for yy in range(Dmax + 1):
        xx = Fraction(d.total() - d.sigma * yy, d.rho)
        if (xx * level).denominator == 1:
            unknowns.append(SupportPoint.of(xx, yy))
    if not unknowns:
        return None
    row_index: Dict[SupportPoint, int] = {}
    rows = []
    for k, q in enumerate(unknowns):
        for p, lam in lead.items():
            c = q.cross(p)
            if not c:
                continue
            target = p + q - SupportPoint(1, 1, 1)
            i = row_index.setdefault(target, len(rows))
            if i == len(rows):
                rows.append({})
            rows[i][k] = rows[i].get(k, 0) + lam * c
    for p, _ in lead.items():
        if p not in row_index:
            return None  # a coefficient of l(P) that no unknown can reach
    targets = sorted(row_index, key=row_index.get)
    rhs = [lead.coeff(t) for t in targets]
    sol = solve_linear(rows, rhs, len(unknowns))
    if sol is None:
        return None
    F = WeylElement.from_points({(q.x, q.y): c for q, c in zip(unknowns, sol) if c},
                                min_level=level)
    outcome = bracket_rs(P, F, d)
    if outcome.proportional or outcome.value != lead:
        raise ConsistencyError("solver output fails the bracket equation")
    return F


def radical_divides(fP: UniPoly, fF: UniPoly) -> bool:
    """Every irreducible factor of fP divides fF."""
    return radical(fP).divides(fF)


def pavadass_check(P: WeylElement, F: WeylElement, d) -> PavadassReport:
    d = _check_direction(d)
    if not is_homogeneous(F, d):
        raise PreconditionError("F must be (rho,sigma)-homogeneous")
    outcome = bracket_rs(P, F, d)
    if outcome.proportional or outcome.value != leading_part(P, d):
        raise PreconditionError("[P,F]_{rho,sigma} is not l(P)")
    fF, _ = f_polynomial(F, d)
    fP, _ = f_polynomial(P, d)
    return PavadassReport(separable=is_squarefree(fF),
                          radical_divides=radical_divides(fP, fF))
