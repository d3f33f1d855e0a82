"""Exact arithmetic in W^(l) = K[X, X^{-1/l}, Y] with [Y, X] = 1 and in its
commutative counterpart L^(l), over the rationals.

An element stores its level l and a sparse dict mapping (xnum, y) to a
nonzero Fraction; the pair stands for the normal-form monomial
X^{xnum/l} Y^y (X-powers to the left).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from . import _core

Key = Tuple[int, int]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(value)


class SupportPoint:
    """The point (xnum/level, y); equality ignores the level."""

    __slots__ = ("xnum", "level", "y", "x")

    def __init__(self, xnum: int, level: int, y: int):
        if level <= 0:
            raise ValueError("level must be positive")
        self.xnum = int(xnum)
        self.level = int(level)
        self.y = int(y)
        self.x = Fraction(self.xnum, self.level)

    @classmethod
    def of(cls, x, y) -> "SupportPoint":
        x = as_fraction(x)
        return cls(x.numerator, x.denominator, y)

    def coords(self) -> Tuple[Fraction, Fraction]:
        return self.x, Fraction(self.y)

    def at_level(self, level: int) -> "SupportPoint":
        scaled = self.x * level
        if scaled.denominator != 1:
            raise ValueError(f"{self} is not on the 1/{level} lattice")
        return SupportPoint(scaled.numerator, level, self.y)

    def __eq__(self, other):
        if not isinstance(other, SupportPoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __add__(self, other: "SupportPoint") -> "SupportPoint":
        return SupportPoint.of(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "SupportPoint") -> "SupportPoint":
        return SupportPoint.of(self.x - other.x, self.y - other.y)

    def scale(self, c) -> "SupportPoint":
        c = as_fraction(c)
        y = c * self.y
        if y.denominator != 1:
            raise ValueError("scaled point has a non-integral y")
        return SupportPoint.of(c * self.x, int(y))

    def cross(self, other: "SupportPoint") -> Fraction:
        """Determinant of the 2x2 matrix with rows self, other."""
        return self.x * other.y - self.y * other.x

    def __repr__(self):
        return f"({self.x}, {self.y})"


def cross(a: SupportPoint, b: SupportPoint) -> Fraction:
    return a.cross(b)


class WeylElement:
    """Sparse element of W^(l) (or of L^(l) when ``commutative`` is set)."""

    __slots__ = ("level", "terms", "commutative")

    def __init__(self, level: int, terms: Mapping[Key, Fraction] | None = None,
                 commutative: bool = False):
        if level <= 0:
            raise ValueError("level must be positive")
        clean: Dict[Key, Fraction] = {}
        for (xnum, y), c in (terms or {}).items():
            if y < 0:
                raise ValueError("negative y exponent")
            c = as_fraction(c)
            if c:
                clean[(int(xnum), int(y))] = c
        self.level = int(level)
        self.terms = clean
        self.commutative = bool(commutative)

    # construction helpers
    @classmethod
    def zero(cls, level: int = 1, commutative: bool = False) -> "WeylElement":
        return cls(level, {}, commutative)

    @classmethod
    def monomial(cls, x, y: int, c=1, commutative: bool = False) -> "WeylElement":
        x = as_fraction(x)
        return cls(x.denominator, {(x.numerator, y): c}, commutative)

    @classmethod
    def from_points(cls, points: Mapping[Tuple[Fraction, int], Fraction],
                    commutative: bool = False, min_level: int = 1) -> "WeylElement":
        """Build from {(x, y): c} choosing the smallest admissible level that
        is a multiple of ``min_level``."""
        level = min_level
        for (x, _), c in points.items():
            if c:
                level = lcm(level, as_fraction(x).denominator)
        terms = {}
        for (x, y), c in points.items():
            xnum = as_fraction(x) * level
            terms[(int(xnum), int(y))] = as_fraction(c)
        return cls(level, terms, commutative)

    # views
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def items(self) -> Iterator[Tuple[SupportPoint, Fraction]]:
        for (xnum, y), c in self.terms.items():
            yield SupportPoint(xnum, self.level, y), c

    def support(self) -> list:
        return [SupportPoint(xnum, self.level, y) for (xnum, y) in self.terms]

    def point_map(self) -> Dict[Tuple[Fraction, int], Fraction]:
        return {(Fraction(xnum, self.level), y): c for (xnum, y), c in self.terms.items()}

    def coeff(self, p: SupportPoint) -> Fraction:
        scaled = p.x * self.level
        if scaled.denominator != 1:
            return Fraction(0)
        return self.terms.get((scaled.numerator, p.y), Fraction(0))

    def canonical_terms(self) -> list:
        """Terms sorted by (y, x) descending."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))

    def max_y(self) -> int:
        return max((y for _, y in self.terms), default=0)

    # structural operations
    def embed(self, h: int) -> "WeylElement":
        return embed_level(self, h)

    def with_flag(self, commutative: bool) -> "WeylElement":
        return WeylElement(self.level, self.terms, commutative)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.commutative != other.commutative:
            return False
        return self.point_map() == other.point_map()

    def __hash__(self):
        return hash((self.commutative, frozenset(self.point_map().items())))

    def __add__(self, other):
        return add_scale(self, _coerce(other, self), 1)

    def __radd__(self, other):
        return add_scale(_coerce(other, self), self, 1)

    def __sub__(self, other):
        return add_scale(self, _coerce(other, self), -1)

    def __rsub__(self, other):
        return add_scale(_coerce(other, self), self, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "WeylElement":
        c = as_fraction(c)
        return WeylElement(self.level, {k: v * c for k, v in self.terms.items()},
                           self.commutative)

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "WeylElement":
        if k < 0:
            raise ValueError("negative power")
        result = one(self.level, self.commutative)
        base = self
        while k:
            if k & 1:
                result = multiply(result, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return result

    def __repr__(self):
        if not self.terms:
            return "0"
        var_x, var_y = ("x", "y") if self.commutative else ("X", "Y")
        parts = []
        for (xnum, y), c in self.canonical_terms():
            mono = []
            ex = Fraction(xnum, self.level)
            if ex:
                mono.append(var_x if ex == 1 else f"{var_x}^({ex})")
            if y:
                mono.append(var_y if y == 1 else f"{var_y}^{y}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"({c})*{body}")
        return " + ".join(parts)


def _coerce(value, like: WeylElement) -> WeylElement:
    if isinstance(value, WeylElement):
        return value
    return WeylElement(1, {(0, 0): as_fraction(value)}, like.commutative)


def one(level: int = 1, commutative: bool = False) -> WeylElement:
    return WeylElement(level, {(0, 0): Fraction(1)}, commutative)


def X(power=1, level: int | None = None) -> WeylElement:
    """X^power in the Weyl side; ``power`` may be a Fraction."""
    el = WeylElement.monomial(power, 0)
    return el if level is None else embed_level(el, level)


def Y(power: int = 1) -> WeylElement:
    return WeylElement(1, {(0, power): Fraction(1)})


def embed_level(P: WeylElement, h: int) -> WeylElement:
    if h <= 0 or h % P.level:
        raise ValueError(f"level {h} is not a multiple of {P.level}")
    k = h // P.level
    return WeylElement(h, {(xnum * k, y): c for (xnum, y), c in P.terms.items()},
                       P.commutative)


def align(P: WeylElement, Q: WeylElement) -> Tuple[WeylElement, WeylElement]:
    if P.commutative != Q.commutative:
        raise ValueError("cannot combine Weyl and symbol elements")
    if P.level == Q.level:
        return P, Q
    h = lcm(P.level, Q.level)
    return embed_level(P, h), embed_level(Q, h)


def add_scale(P: WeylElement, Q: WeylElement, c=1) -> WeylElement:
    """P + c*Q at the lcm level."""
    P, Q = align(P, Q)
    c = as_fraction(c)
    out = dict(P.terms)
    if c:
        for k, v in Q.terms.items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return WeylElement(P.level, out, P.commutative)


def _common_denominator(terms: Mapping[Key, Fraction]) -> Tuple[int, list]:
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return den, [(xnum, y, c.numerator * (den // c.denominator))
                 for (xnum, y), c in terms.items()]


def multiply(P: WeylElement, Q: WeylElement) -> WeylElement:
    """Normal-form product.  The noncommutative case moves Y^j across X^{b/l}
    with the closed binomial expansion (done inside the kernel)."""
    P, Q = align(P, Q)
    level = P.level
    if not P.terms or not Q.terms:
        return WeylElement(level, {}, P.commutative)
    dp, p_items = _common_denominator(P.terms)
    dq, q_items = _common_denominator(Q.terms)
    if P.commutative:
        acc = _core.kernels.commutative_product(p_items, q_items)
        den = dp * dq
    else:
        acc = _core.kernels.weyl_product(p_items, q_items, level)
        den = dp * dq * level ** P.max_y()
    return WeylElement(level, {k: Fraction(v, den) for k, v in acc.items() if v},
                       P.commutative)


def multiply_oracle(P: WeylElement, Q: WeylElement) -> WeylElement:
    """Independent product: Y is pushed through X^{1/l} one factor at a time,
    using only Y X^{1/l} = X^{1/l} Y + (1/l) X^{(1-l)/l} and its inverse form
    Y X^{-1/l} = X^{-1/l} Y - (1/l) X^{(-1-l)/l}."""
    P, Q = align(P, Q)
    level = P.level
    if P.commutative:
        out: Dict[Key, Fraction] = {}
        for (a, j), c in P.terms.items():
            for (b, k), d in Q.terms.items():
                key = (a + b, j + k)
                out[key] = out.get(key, 0) + c * d
        return WeylElement(level, out, True)
    result: Dict[Key, Fraction] = {}
    pushed = [dict(Q.terms)]  # pushed[j] = Y^j Q in normal form, built one Y at a time
    for (a, j), c in P.terms.items():
        while len(pushed) <= j:
            pushed.append(_push_one_y(pushed[-1], level))
        for (b, k), d in pushed[j].items():
            key = (a + b, k)
            result[key] = result.get(key, 0) + c * d
    return WeylElement(level, result)


def _push_one_y(terms: Mapping[Key, Fraction], level: int) -> Dict[Key, Fraction]:
    out: Dict[Key, Fraction] = {}
    for (b, k), c in terms.items():
        # Y X^{b/l} Y^k: slide Y past |b| copies of X^{+-1/l}, each leaving +-1/l behind
        out[(b, k + 1)] = out.get((b, k + 1), 0) + c
        sign = 1 if b > 0 else -1
        spill = 0
        for _ in range(abs(b)):
            spill += sign
        if spill:
            key = (b - level, k)
            out[key] = out.get(key, 0) + c * Fraction(spill, level)
    return {k: v for k, v in out.items() if v}


def commutator(P: WeylElement, Q: WeylElement) -> WeylElement:
    return add_scale(multiply(P, Q), multiply(Q, P), -1)


def symbol_map(P: WeylElement) -> WeylElement:
    """Psi: X^{i/l} Y^j -> x^{i/l} y^j."""
    return P.with_flag(True)


def symbol_inverse(P: WeylElement) -> WeylElement:
    return P.with_flag(False)


def graded_split(P: WeylElement) -> Dict[Fraction, WeylElement]:
    """Components by v_{1,-1} degree x - y."""
    buckets: Dict[Fraction, Dict[Key, Fraction]] = {}
    for (xnum, y), c in P.terms.items():
        deg = Fraction(xnum, P.level) - y
        buckets.setdefault(deg, {})[(xnum, y)] = c
    return {d: WeylElement(P.level, t, P.commutative) for d, t in sorted(buckets.items())}


def sum_elements(elements: Iterable[WeylElement], level: int = 1,
                 commutative: bool = False) -> WeylElement:
    total = WeylElement.zero(level, commutative)
    for e in elements:
        total = add_scale(total, e, 1)
    return total


def generalized_binomial(top: Fraction, k: int) -> Fraction:
    """C(top, k) as a falling factorial over k!."""
    num = Fraction(1)
    for i in range(k):
        num *= (top - i)
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num / den


def primitive(a: int, b: int) -> Tuple[int, int]:
    g = gcd(a, b)
    return (a // g, b // g) if g else (a, b)
