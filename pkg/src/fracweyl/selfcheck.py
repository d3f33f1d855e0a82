"""Small deterministic self-checks behind `fracweyl verify`.

Each check returns (name, ok, detail).  The random data comes from a fixed
seed so every run prints the same report."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .algebra import WeylElement, X, Y, commutator, multiply, multiply_oracle, one
from .bracket import (bracket_closed_form, bracket_rs, extract_common_root,
                      ode_identity, pavadass_check, solve_F)
from .chains import Chain, ChainNode, check_conditions, corner_case_enumerator
from .transform import apply_phi, cut_step
from .valuation import Direction, st

Check = Tuple[str, bool, str]


def random_element(rng: random.Random, level: int, terms: int = 4, max_x: int = 8,
                   max_y: int = 4) -> WeylElement:
    out = {}
    for _ in range(rng.randint(1, terms)):
        out[(rng.randint(-max_x, max_x), rng.randint(0, max_y))] = Fraction(
            rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
    return WeylElement(level, out)


def check_algebra() -> List[Check]:
    rng = random.Random(1)
    out = [("defining relation [Y,X]=1", commutator(Y(), X()) == one(), ""),
           ("Y*X^(1/2)", Y() * X(Fraction(1, 2)) ==
            X(Fraction(1, 2)) * Y() + X(Fraction(-1, 2)).scale(Fraction(1, 2)), "")]
    bad = 0
    for _ in range(40):
        lvl = rng.choice([1, 2, 3, 6])
        P, Q = random_element(rng, lvl), random_element(rng, rng.choice([1, 2, 3, 6]))
        bad += multiply(P, Q) != multiply_oracle(P, Q)
    out.append(("multiply agrees with the one-step oracle", bad == 0, f"{bad}/40 mismatches"))
    return out


def _homogeneous(rng: random.Random, d: Direction, deg: Fraction, count: int) -> WeylElement:
    pts = {}
    for _ in range(count):
        y = rng.randint(0, 4)
        x = (deg - d.sigma * y) / d.rho
        pts[(x, y)] = Fraction(rng.choice([-2, -1, 1, 2, 3]))
    return WeylElement.from_points(pts, min_level=1)


def check_bracket() -> List[Check]:
    rng = random.Random(2)
    d = Direction(2, -1)
    bad = 0
    ode_bad = 0
    tried = 0
    while tried < 20:
        P = _homogeneous(rng, d, Fraction(rng.randint(1, 6)), 3)
        Q = _homogeneous(rng, d, Fraction(rng.randint(1, 6)), 3)
        out = bracket_rs(P, Q, d)
        if out.proportional:
            continue
        tried += 1
        bad += out.value != bracket_closed_form(P, Q, d)
        ode_bad += not ode_identity(P, Q, d).holds
    rows = [("bracket closed form equals the commutator", bad == 0, f"{bad}/20"),
            ("f-polynomial identity", ode_bad == 0, f"{ode_bad}/20")]
    d3 = Direction(3, -1)
    R = X() * Y() + X(2) * Y(4)
    fac = extract_common_root(R ** 2, R ** 3, d3)
    ok = (fac.m, fac.n) == (2, 3) and fac.R.scale(1 / fac.R.coeff(st(R, d3))) == R.with_flag(True)
    rows.append(("root extraction from (R^2, R^3)", ok, ""))
    C = X(2) * Y() + X(2)
    P = C ** 2
    F = solve_F(P, Direction(1, 0))
    rows.append(("F-solver on (x^2y + x^2)^2", F is not None
                 and pavadass_check(P, F, Direction(1, 0)).ok, str(F)))
    return rows


def check_transform() -> List[Check]:
    d = Direction(2, -1)
    rows = [("phi(X^(1/2) Y) with lam=1", apply_phi(X(Fraction(1, 2)) * Y(), 1, d, 2)
             == X(Fraction(1, 2)) * Y() + one(2), "")]
    P = X() * Y() + X(2) * Y(4)
    rep = cut_step(P, None, Direction(3, -1))
    ok = rep.lam == -1 and rep.m_lambda == 1 and all(
        rep.status(k) == "pass" for k in (5, 6, 8, 9))
    rows.append(("cut on xy + x^2y^4 at (3,-1)", ok, f"predicted {rep.predicted_corner}"))
    return rows


FAMILY_ONE = Chain((ChainNode.make(9, 21, 3, -1, 1),
                    ChainNode.make(Fraction(13, 3), 7, 5, -3, 3),
                    ChainNode.make(Fraction(11, 15), 1, 3, -2, 15)))


def check_chains() -> List[Check]:
    rows = [("example family 1 passes", check_conditions(FAMILY_ONE, 2, 3).all_pass, "")]
    cases = corner_case_enumerator(3, 9)
    ok = any(c.inner == (2, 6) and c.direction == Direction(5, -1)
             and c.st_candidates == ((2, 4),) for c in cases)
    rows.append(("corner case (3,9)", ok, ""))
    return rows


GROUPS: Dict[str, Callable[[], List[Check]]] = {
    "algebra": check_algebra, "bracket": check_bracket,
    "transform": check_transform, "chains": check_chains}


def run(group: str) -> dict:
    names = list(GROUPS) if group == "all" else [group]
    checks = []
    for g in names:
        for name, ok, detail in GROUPS[g]():
            checks.append({"group": g, "name": name, "status": "pass" if ok else "fail",
                           "detail": detail})
    return {"kind": "verify", "checks": checks,
            "all_pass": all(c["status"] == "pass" for c in checks)}
