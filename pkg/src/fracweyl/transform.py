"""The shift automorphism Y -> Y + lam X^{sigma/rho}, the edge-cut step and
the chain driver that iterates it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Tuple, Union

from .algebra import (SupportPoint, WeylElement, add_scale, commutator,
                      embed_level, multiply, one)
from .bracket import bracket_rs, solve_F
from .errors import PreconditionError
from .unipoly import UniPoly, rational_roots, squarefree_decompose
from .valuation import (LOWER, Direction, closed_valuation_set, degree,
                        dir_cmp, direction_key, en, f_polynomial,
                        leading_part, st, valuation_set)

Witness = Union[Fraction, UniPoly, None]


def _check_phi_args(level: int, d: Direction, lprime: int):
    if not d.interior() or d.sigma > 0:
        raise PreconditionError("phi needs rho + sigma > 0 and sigma <= 0")
    if lprime <= 0 or lprime % d.rho or lprime % level:
        raise PreconditionError(f"lprime={lprime} must be a multiple of rho and of the level")


def _substitute(P: WeylElement, lam: Fraction, d: Direction, lprime: int,
                commutative: bool) -> WeylElement:
    lam = Fraction(lam)
    P = embed_level(P, lprime)
    shift = Fraction(d.sigma, d.rho) * lprime
    image_y = WeylElement(lprime, {(0, 1): 1, (int(shift), 0): lam}, commutative)
    powers = [one(lprime, commutative)]
    result = WeylElement.zero(lprime, commutative)
    for (xnum, j), c in P.terms.items():
        while len(powers) <= j:
            powers.append(multiply(powers[-1], image_y))
        head = WeylElement(lprime, {(xnum, 0): c}, commutative)
        result = add_scale(result, multiply(head, powers[j]), 1)
    return result


def apply_phi(P: WeylElement, lam, d, lprime: int) -> WeylElement:
    """phi(X^{1/l'}) = X^{1/l'}, phi(Y) = Y + lam X^{sigma/rho} in W^(l')."""
    d = Direction.of(d)
    _check_phi_args(P.level, d, lprime)
    return _substitute(P.with_flag(False), lam, d, lprime, False)


def phi_symbol(P: WeylElement, lam, d, lprime: int) -> WeylElement:
    """The commutative counterpart y -> y + lam x^{sigma/rho}."""
    d = Direction.of(d)
    _check_phi_args(P.level, d, lprime)
    return _substitute(P.with_flag(True), lam, d, lprime, True)


def frak_f_and_multiplicity(P: WeylElement, d) -> Tuple[UniPoly, int, Witness]:
    """frak_f = x^s f_P, its largest root multiplicity, and a root realizing it
    (rational when possible, otherwise the squarefree factor)."""
    d = Direction.of(d)
    if d.sigma > 0:
        raise PreconditionError("sigma must be <= 0")
    f, start = f_polynomial(P, d)
    frak = f.shift(start.y)
    parts = squarefree_decompose(frak)
    if not parts:
        return frak, 0, None
    m_max, q = parts[-1]
    roots = rational_roots(q)
    if not roots:
        return frak, m_max, q
    nonzero = [r for r in roots if r != 0]
    return frak, m_max, (nonzero[0] if nonzero else roots[0])


@dataclass
class ItemResult:
    item: int
    status: str  # pass | fail | skipped
    detail: str = ""

    def to_json(self):
        return {"item": self.item, "status": self.status, "detail": self.detail}


@dataclass
class CutReport:
    lam: Witness
    m_lambda: int
    new_level: int
    phiP: Optional[WeylElement]
    phiQ: Optional[WeylElement]
    new_dir: Optional[Direction]
    predicted_corner: SupportPoint
    item_results: List[ItemResult] = field(default_factory=list)
    hypotheses: dict = field(default_factory=dict)

    def status(self, item: int) -> str:
        for r in self.item_results:
            if r.item == item:
                return r.status
        raise KeyError(item)

    def hypotheses_hold(self) -> bool:
        return bool(self.hypotheses) and all(self.hypotheses.values())


def _verdict(item: int, ok: bool, detail: str = "") -> ItemResult:
    return ItemResult(item, "pass" if ok else "fail", detail)


def evaluate_hypotheses(P: WeylElement, Q: WeylElement, d: Direction) -> dict:
    """The seven hypotheses (a)-(g) of the cut step, each checked exactly."""
    h = {"a": d.sigma <= 0}
    comm = commutator(Q, P)
    h["b"] = comm == one(comm.level)
    h["c"] = d in valuation_set(P) and d in valuation_set(Q)
    vP, vQ = degree(P, d), degree(Q, d)
    h["d"] = vP > 0 and vQ > 0
    h["e"] = bracket_rs(P, Q, d).proportional
    if h["d"]:
        h["f"] = (vQ / vP).denominator != 1 and (vP / vQ).denominator != 1
    else:
        h["f"] = False
    eP, eQ = en(P, d), en(Q, d)
    h["g"] = eP.x - eP.y < 0 and eQ.x - eQ.y < 0
    return h


def _max_below(P: WeylElement, d: Direction) -> Direction:
    below = [e for e in closed_valuation_set(P) if dir_cmp(e, d) < 0]
    return max(below, key=direction_key)


def _sample_above(d: Direction, limit: int = 6) -> List[Direction]:
    from .valuation import UPPER, directions_between
    return directions_between(d, UPPER, limit)


def cut_step(P: WeylElement, Q: Optional[WeylElement], d,
             Dmax: Optional[int] = None) -> CutReport:
    d = Direction.of(d)
    if d.sigma > 0:
        raise PreconditionError("cut_step needs sigma <= 0")
    if d not in valuation_set(P):
        raise PreconditionError(f"{d} is not in Val(P): the leading part is a monomial")
    _, m_lam, lam = frak_f_and_multiplicity(P, d)
    start = st(P, d)
    ratio = Fraction(d.sigma, d.rho)
    predicted = SupportPoint.of(start.x + start.y * ratio - m_lam * ratio, m_lam)
    level = P.level if Q is None else lcm(P.level, Q.level)
    lprime = lcm(level, d.rho)
    hyps = evaluate_hypotheses(P, Q, d) if Q is not None else {}
    hyps_ok = bool(hyps) and all(hyps.values())
    rational = isinstance(lam, Fraction)
    items: List[ItemResult] = []
    phiP = phiQ = new_dir = None
    end_P = en(P, d)
    if rational:
        phiP = apply_phi(P, lam, d, lprime)
        phiQ = apply_phi(Q, lam, d, lprime) if Q is not None else None
        new_dir = _max_below(phiP, d)
    q_needed = "needs Q and hypotheses (a)-(g)"

    # (1)-(4): conclusions that rely on the hypotheses
    if rational and hyps_ok:
        ok1 = (new_dir.interior() and dir_cmp(new_dir, d) < 0
               and new_dir in valuation_set(phiP) and new_dir in valuation_set(phiQ))
        items.append(_verdict(1, ok1, f"new direction {new_dir}"))
        if new_dir.interior():
            eP, eQ = en(phiP, new_dir), en(phiQ, new_dir)
            items.append(_verdict(2, eP.x - eP.y < 0 and eQ.x - eQ.y < 0))
            vP2, vQ2 = degree(phiP, new_dir), degree(phiQ, new_dir)
            items.append(_verdict(3, vP2 > 0 and vQ2 > 0))
            items.append(_verdict(4, vQ2 != 0 and vP2 / vQ2 == degree(P, d) / degree(Q, d)))
        else:
            items.extend(_verdict(k, False, "new direction is a boundary") for k in (2, 3, 4))
    else:
        items.extend(ItemResult(k, "skipped", q_needed if rational else "irrational cut")
                     for k in (1, 2, 3, 4))

    # (5): leading parts strictly above d are untouched
    if rational:
        ok5 = all(leading_part(phiP, e) == leading_part(P, e) for e in _sample_above(d))
        if Q is not None:
            ok5 = ok5 and all(leading_part(phiQ, e) == leading_part(Q, e)
                              for e in _sample_above(d))
        items.append(_verdict(5, ok5, "checked on sampled directions above d"))
    else:
        items.append(ItemResult(5, "skipped", "irrational cut"))

    # (6): corner hand-off and the closed formula
    if rational:
        start_phi = st(phiP, d)
        ok6 = en(phiP, new_dir) == start_phi == predicted
        items.append(_verdict(6, ok6, f"st_d(phi P) = {start_phi}, predicted {predicted}"))
    else:
        items.append(ItemResult(6, "skipped", "irrational cut"))

    # (7): needs Q
    if rational and hyps_ok and new_dir.interior():
        e_newP, e_newQ = en(phiP, new_dir), en(phiQ, new_dir)
        scale = degree(P, d) / degree(Q, d)
        ok7 = (e_newQ == st(phiQ, d)
               and e_newP.x == scale * e_newQ.x and e_newP.y == scale * e_newQ.y)
        items.append(_verdict(7, ok7))
    else:
        items.append(ItemResult(7, "skipped", q_needed))

    # (8): the dichotomy, from the built element or from the predicted corner
    new_end = en(phiP, new_dir) if rational else predicted
    if new_end.y < end_P.y:
        items.append(_verdict(8, True, "strict drop in y"))
    else:
        equal = new_end == end_P
        step = SupportPoint.of(end_P.x + ratio, end_P.y - 1)
        in_supp = P.coeff(step) != 0 if step.y >= 0 else False
        items.append(_verdict(8, equal and in_supp, "equal corners"))

    # (9): degree preservation
    if rational:
        ok9 = degree(phiP, d) == degree(P, d)
        if Q is not None:
            ok9 = ok9 and degree(phiQ, d) == degree(Q, d)
        items.append(_verdict(9, ok9))
    else:
        items.append(ItemResult(9, "skipped", "irrational cut"))

    # (10): the bracket stays zero
    if rational and hyps_ok:
        items.append(_verdict(10, bracket_rs(phiQ, phiP, d).proportional))
    else:
        items.append(ItemResult(10, "skipped", q_needed))

    # (11): F from the linear solve
    if hyps_ok:
        F = solve_F(P, d, Dmax)
        if F is None:
            items.append(ItemResult(11, "fail", "no F within the degree bound"))
        else:
            ok11 = len(F) > 1
            if en(F, d) == SupportPoint(1, 1, 1) and rational:
                ok11 = ok11 and st(phiP, d) == end_P
            items.append(_verdict(11, ok11, "F found by linear solve"))
    else:
        items.append(ItemResult(11, "skipped", q_needed))

    return CutReport(lam=lam, m_lambda=m_lam, new_level=lprime, phiP=phiP,
                     phiQ=phiQ, new_dir=new_dir, predicted_corner=predicted,
                     item_results=items, hypotheses=hyps)


@dataclass
class ChainStep:
    P: WeylElement
    Q: WeylElement
    d: Direction
    level: int
    measure: int
    report: Optional[CutReport] = None


@dataclass
class ChainRun:
    steps: List[ChainStep]
    stop_reason: str


def default_start(P: WeylElement) -> Optional[Direction]:
    """Largest direction of Val(P) strictly below (1,0)."""
    below = [e for e in valuation_set(P) if dir_cmp(e, Direction(1, 0)) < 0]
    return max(below, key=direction_key) if below else None


def run_chain(P: WeylElement, Q: WeylElement, mode: str = "relaxed",
              max_steps: int = 50, start=None) -> ChainRun:
    """Iterate cut_step.  Strict mode demands [Q,P] = 1 and every hypothesis
    at every step; relaxed mode only needs cut_step's own preconditions."""
    if mode not in ("strict", "relaxed"):
        raise PreconditionError(f"unknown mode {mode!r}")
    if mode == "strict":
        comm = commutator(Q, P)
        if comm != one(comm.level):
            raise PreconditionError("strict mode needs [Q,P] = 1")
    d = Direction.of(start) if start is not None else default_start(P)
    level = lcm(P.level, Q.level)
    steps: List[ChainStep] = []
    if d is None:
        return ChainRun(steps, "no direction of Val(P) below (1,0)")
    for _ in range(max_steps):
        step = ChainStep(P, Q, d, level, en(P, d).y)
        steps.append(step)
        if d.sigma > 0 or not d.interior() or d not in valuation_set(P):
            return ChainRun(steps, f"cut precondition fails at {d}")
        if not bracket_rs(Q, P, d).proportional:
            return ChainRun(steps, "terminal: bracket is nonzero")
        if mode == "strict":
            hyps = evaluate_hypotheses(P, Q, d)
            if not all(hyps.values()):
                bad = ",".join(k for k, v in hyps.items() if not v)
                return ChainRun(steps, f"hypothesis failure: {bad}")
        report = cut_step(P, Q, d)
        step.report = report
        if report.phiP is None:
            return ChainRun(steps, "irrational cut point")
        if not report.new_dir.interior():
            return ChainRun(steps, "no valuation direction below the cut")
        P, Q, d, level = report.phiP, report.phiQ, report.new_dir, report.new_level
    return ChainRun(steps, "max_steps reached")
