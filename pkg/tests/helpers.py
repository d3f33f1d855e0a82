"""Random data shared by the property and acceptance tests."""

import random
from fractions import Fraction
from math import gcd

from hypothesis import strategies as st

from fracweyl.algebra import WeylElement
from fracweyl.valuation import Direction

LEVELS = (1, 2, 3, 6)
COEFFS = (-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(-2, 3), Fraction(5, 4))


def rand_element(rng, level=None, max_terms=6, max_xnum=12, max_y=8, commutative=False):
    level = rng.choice(LEVELS) if level is None else level
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[(rng.randint(-max_xnum, max_xnum), rng.randint(0, max_y))] = Fraction(rng.choice(COEFFS))
    return WeylElement(level, terms, commutative)


def rand_direction(rng, max_abs=5, sigma_nonpositive=False):
    while True:
        rho = rng.randint(1 if sigma_nonpositive else -max_abs, max_abs)
        sigma = rng.randint(-max_abs, 0 if sigma_nonpositive else max_abs)
        if gcd(rho, sigma) == 1 and rho + sigma > 0:
            return Direction(rho, sigma)


def rand_homogeneous(rng, d, deg, level, max_terms=4, max_y=5, commutative=False):
    """Random element all of whose support sits on rho*x + sigma*y = deg."""
    pts = {}
    for _ in range(rng.randint(1, max_terms)):
        y = rng.randint(0, max_y)
        x = (Fraction(deg) - d.sigma * y) / d.rho
        if (x * level).denominator == 1:
            pts[(x, y)] = Fraction(rng.choice(COEFFS))
    if not pts:
        return None
    return WeylElement.from_points(pts, commutative=commutative, min_level=level)


def rand_line_element(rng, d, level, terms, commutative=True, start_y=None):
    """At least two distinct points on one (rho,sigma)-line, lattice-valid."""
    slope = Fraction(-d.sigma, d.rho)
    step = 1
    while (slope * step * level).denominator != 1:
        step += 1
    y0 = rng.randint(0, 3) if start_y is None else start_y
    x0 = Fraction(rng.randint(-4 * level, 6 * level), level)
    ks = sorted(rng.sample(range(0, 5), terms))
    pts = {(x0 + k * step * slope, y0 + k * step): Fraction(rng.choice(COEFFS)) for k in ks}
    return WeylElement.from_points(pts, commutative=commutative, min_level=level)


@st.composite
def elements(draw, level=None, max_terms=5, max_xnum=8, max_y=5, commutative=False):
    lvl = draw(st.sampled_from(LEVELS)) if level is None else level
    keys = draw(st.lists(st.tuples(st.integers(-max_xnum, max_xnum), st.integers(0, max_y)),
                         min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.sampled_from(COEFFS), min_size=len(keys), max_size=len(keys)))
    return WeylElement(lvl, {k: Fraction(c) for k, c in zip(keys, coeffs)}, commutative)


@st.composite
def directions(draw, max_abs=6, sigma_nonpositive=False):
    return draw(st.sampled_from(_valid_directions(max_abs, sigma_nonpositive)))


def _valid_directions(max_abs, sigma_nonpositive):
    out = []
    for rho in range(1 if sigma_nonpositive else -max_abs, max_abs + 1):
        for sigma in range(-max_abs, (0 if sigma_nonpositive else max_abs) + 1):
            if gcd(rho, sigma) == 1 and rho + sigma > 0:
                out.append(Direction(rho, sigma))
    return out


def seeded(seed):
    return random.Random(seed)


def rand_cut_input(rnd, max_abs=4):
    """(P, d) with d in Val(P) and a rational root of maximal multiplicity in
    f_P, plus random terms of lower (rho, sigma)-degree."""
    from fracweyl.unipoly import UniPoly
    from fracweyl.valuation import reconstruct_from_f
    from fracweyl.algebra import SupportPoint, add_scale

    d = rand_direction(rnd, max_abs, sigma_nonpositive=True)
    level = rnd.choice([1, 2, 3]) * d.rho
    roots = []
    for _ in range(rnd.randint(1, 3)):
        r = Fraction(rnd.choice([-3, -2, -1, 1, 2, 3]), rnd.choice([1, 2]))
        roots += [r] * rnd.randint(1, 3)
    f = UniPoly.from_roots(roots, lc=rnd.choice([1, 2, -1]))
    start = SupportPoint(rnd.randint(-2 * level, 4 * level), level, rnd.randint(0, 3))
    P = reconstruct_from_f(f, start, d, level).with_flag(False)
    top = d.weight(start)
    for _ in range(rnd.randint(0, 3)):
        y = rnd.randint(0, 5)
        xnum = rnd.randint(-3 * level, 6 * level)
        if d.rho * Fraction(xnum, level) + d.sigma * y < top:
            P = add_scale(P, WeylElement(level, {(xnum, y): Fraction(rnd.choice(COEFFS))}))
    return P, d
