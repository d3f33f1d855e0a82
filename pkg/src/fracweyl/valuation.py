"""Directions, weighted degrees, leading parts and support corners."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .algebra import SupportPoint, WeylElement, as_fraction
from .unipoly import UniPoly


@functools.total_ordering
class Direction:
    """Primitive (rho, sigma) with rho + sigma >= 0."""

    __slots__ = ("rho", "sigma")

    def __init__(self, rho: int, sigma: int):
        rho, sigma = int(rho), int(sigma)
        if gcd(rho, sigma) != 1:
            raise ValueError(f"direction ({rho},{sigma}) is not primitive")
        if rho + sigma < 0:
            raise ValueError(f"direction ({rho},{sigma}) has rho+sigma < 0")
        self.rho = rho
        self.sigma = sigma

    @classmethod
    def of(cls, d) -> "Direction":
        return d if isinstance(d, Direction) else cls(*d)

    def interior(self) -> bool:
        return self.rho + self.sigma > 0

    def is_lower_boundary(self) -> bool:
        return self.rho == 1 and self.sigma == -1

    def is_upper_boundary(self) -> bool:
        return self.rho == -1 and self.sigma == 1

    def weight(self, p: SupportPoint) -> Fraction:
        return self.rho * p.x + self.sigma * p.y

    def total(self) -> int:
        return self.rho + self.sigma

    def as_tuple(self) -> Tuple[int, int]:
        return self.rho, self.sigma

    def __iter__(self):
        return iter((self.rho, self.sigma))

    def __eq__(self, other):
        if isinstance(other, tuple):
            other = Direction(*other)
        if not isinstance(other, Direction):
            return NotImplemented
        return self.rho == other.rho and self.sigma == other.sigma

    def __hash__(self):
        return hash((self.rho, self.sigma))

    def __lt__(self, other):
        return dir_cmp(self, Direction.of(other)) < 0

    def __repr__(self):
        return f"({self.rho},{self.sigma})"


LOWER = Direction(1, -1)
UPPER = Direction(-1, 1)


def dir_cmp(d1, d2) -> int:
    """-1, 0, 1.  The boundaries are the global extremes; interior directions
    compare through the cross product: d1 <= d2 iff d1 x d2 >= 0."""
    d1, d2 = Direction.of(d1), Direction.of(d2)
    if d1 == d2:
        return 0
    if d1.is_lower_boundary() or d2.is_upper_boundary():
        return -1
    if d2.is_lower_boundary() or d1.is_upper_boundary():
        return 1
    c = d1.rho * d2.sigma - d1.sigma * d2.rho
    return -1 if c > 0 else 1


def direction_key(d: Direction):
    """Sort key agreeing with dir_cmp (angle from the lower boundary)."""
    if d.rho > 0:
        return (0, Fraction(d.sigma, d.rho))
    if d.rho == 0:
        return (1, Fraction(0))
    return (2, Fraction(-d.rho, d.sigma))


def _require_nonzero(P: WeylElement):
    if P.is_zero():
        raise ValueError("operation undefined on the zero element")


def degree(P: WeylElement, d) -> Fraction:
    _require_nonzero(P)
    d = Direction.of(d)
    return max(d.weight(p) for p in P.support())


def leading_part(P: WeylElement, d) -> WeylElement:
    """Symbol-side restriction of P to its top (rho, sigma)-weight."""
    _require_nonzero(P)
    d = Direction.of(d)
    top = degree(P, d)
    terms = {}
    for (xnum, y), c in P.terms.items():
        if d.rho * Fraction(xnum, P.level) + d.sigma * y == top:
            terms[(xnum, y)] = c
    return WeylElement(P.level, terms, True)


def is_homogeneous(P: WeylElement, d) -> bool:
    return leading_part(P, d).terms == P.terms


def w_point(P: WeylElement) -> SupportPoint:
    """w(P): the max-x point on the line of maximal x - y."""
    _require_nonzero(P)
    pts = P.support()
    top = max(p.x - p.y for p in pts)
    return max((p for p in pts if p.x - p.y == top), key=lambda p: p.x)


def ovw_point(P: WeylElement) -> SupportPoint:
    """ov w(P): the max-y point on the line of maximal y - x."""
    _require_nonzero(P)
    pts = P.support()
    top = max(p.y - p.x for p in pts)
    return max((p for p in pts if p.y - p.x == top), key=lambda p: p.y)


def st(P: WeylElement, d) -> SupportPoint:
    d = Direction.of(d)
    if d.is_lower_boundary():
        raise ValueError("st is undefined at (1,-1)")
    return w_point(leading_part(P, d))


def en(P: WeylElement, d) -> SupportPoint:
    d = Direction.of(d)
    if d.is_upper_boundary():
        raise ValueError("en is undefined at (-1,1)")
    return ovw_point(leading_part(P, d))


@dataclass(frozen=True)
class CornerData:
    st: Optional[SupportPoint]
    en: Optional[SupportPoint]
    w: SupportPoint
    ovw: SupportPoint
    lc: Fraction
    ovlc: Fraction


def corners(P: WeylElement, d) -> CornerData:
    d = Direction.of(d)
    w = w_point(P)
    ovw = ovw_point(P)
    return CornerData(
        st=None if d.is_lower_boundary() else st(P, d),
        en=None if d.is_upper_boundary() else en(P, d),
        w=w, ovw=ovw, lc=P.coeff(w), ovlc=P.coeff(ovw))


def aligned_points(a: SupportPoint, b: SupportPoint) -> bool:
    return a.cross(b) == 0


def aligned(P: WeylElement, Q: WeylElement) -> bool:
    return aligned_points(w_point(P), w_point(Q))


def f_polynomial(P: WeylElement, d) -> Tuple[UniPoly, SupportPoint]:
    """Coefficients of l_d(P) read along its support line from st upward:
    l_d(P) = sum a_i x^{r/l - i sigma/rho} y^{s+i}."""
    d = Direction.of(d)
    if d.sigma > 0:
        raise ValueError("f_polynomial requires sigma <= 0")
    if not d.interior():
        raise ValueError("f_polynomial requires a direction with rho+sigma > 0")
    lead = leading_part(P, d)
    start = w_point(lead)
    slope = Fraction(-d.sigma, d.rho)
    coeffs = {}
    for p, c in lead.items():
        i = p.y - start.y
        if i < 0 or p.x != start.x + i * slope:
            raise ValueError(f"support point {p} is off the lattice line from {start}")
        coeffs[i] = c
    top = max(coeffs)
    return UniPoly([coeffs.get(i, 0) for i in range(top + 1)]), start


def reconstruct_from_f(f: UniPoly, start: SupportPoint, d, level: int = 1) -> WeylElement:
    """Inverse of f_polynomial: x^{r/l} y^s f(x^{-sigma/rho} y)."""
    d = Direction.of(d)
    slope = Fraction(-d.sigma, d.rho)
    pts = {}
    for i, c in enumerate(f.coeffs):
        if c:
            pts[(start.x + i * slope, start.y + i)] = c
    return WeylElement.from_points(pts, commutative=True, min_level=level)


def val_of_point(p: SupportPoint) -> Direction:
    """The direction d with rho+sigma > 0 and v_d(p) = 0."""
    r, l, s = p.xnum, p.level, p.y
    diff = r - l * s
    if diff == 0:
        raise ValueError(f"val undefined on the diagonal point {p}")
    g = gcd(r, l * s)
    if diff > 0:
        return Direction(-l * s // g, r // g)
    return Direction(l * s // g, -r // g)


def _hull(points: List[Tuple[Fraction, Fraction]]) -> List[Tuple[Fraction, Fraction]]:
    """Convex hull vertices in counterclockwise order (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def valuation_set(P: WeylElement) -> List[Direction]:
    """Val(P), ascending: the interior directions whose leading support has
    more than one point.  Each is the val of a hull edge."""
    _require_nonzero(P)
    pts = [p for p in P.support()]
    hull = _hull([(p.x, Fraction(p.y)) for p in pts])
    if len(hull) < 2:
        return []
    found = set()
    n = len(hull)
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        dx, dy = b[0] - a[0], b[1] - a[1]
        if dx == dy:
            continue
        d = val_of_point(SupportPoint.of(dx, int(dy)))
        lead = leading_part(P, d)
        if len(lead) > 1:
            found.add(d)
    return sorted(found, key=direction_key)


def closed_valuation_set(P: WeylElement) -> List[Direction]:
    """ovVal(P) = Val(P) plus both boundary directions."""
    return [LOWER] + valuation_set(P) + [UPPER]


def succ_pred(P: WeylElement, d) -> Tuple[Optional[Direction], Optional[Direction]]:
    """(Succ, Pred) from the point-wise definitions, independent of the hull."""
    d = Direction.of(d)
    if not d.interior():
        raise ValueError("succ_pred needs an interior direction")
    pts = P.support()
    top_end = en(P, d)
    bottom = st(P, d)
    above = [val_of_point(p - top_end) for p in pts
             if (p.y - p.x) > (top_end.y - top_end.x)]
    below = [val_of_point(p - bottom) for p in pts
             if (p.x - p.y) > (bottom.x - bottom.y)]
    succ = min(above, key=direction_key) if above else None
    pred = max(below, key=direction_key) if below else None
    return succ, pred


def window_below(p: SupportPoint, d) -> Direction:
    """A direction d'' < d with v_{d'}(p) > 0 for every d' strictly between."""
    d = Direction.of(d)
    if d.weight(p) <= 0:
        raise ValueError("window_below needs v_d(p) > 0")
    i, l, j = p.xnum, p.level, p.y
    if p.x < j:
        g = gcd(j * l, i)
        return Direction(j * l // g, -i // g)
    return LOWER


def directions_between(lo: Direction, hi: Direction, max_rho: int) -> List[Direction]:
    """Interior directions strictly between lo and hi with |rho| <= max_rho."""
    out = []
    for rho in range(-max_rho, max_rho + 1):
        for sigma in range(-max_rho - 1, max_rho + 2):
            if rho + sigma <= 0 or gcd(rho, sigma) != 1:
                continue
            d = Direction(rho, sigma)
            if dir_cmp(lo, d) < 0 and dir_cmp(d, hi) < 0:
                out.append(d)
    return sorted(out, key=direction_key)


def as_point(x, y) -> SupportPoint:
    return SupportPoint.of(as_fraction(x), y)
