"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, List, Sequence, Tuple


def _strip(coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Coefficients indexed by degree, lowest first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Sequence, lc=1) -> "UniPoly":
        p = cls([lc])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return " + ".join(parts)

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        return UniPoly([0] * k + list(self.coeffs)) if self.coeffs else UniPoly()

    def __divmod__(self, other: "UniPoly"):
        other = _poly(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        inv = 1 / other.lc()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        """True when self | other."""
        return (other % self).is_zero()

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = 1 / self.lc()
        return UniPoly([c * inv for c in self.coeffs])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def x_valuation(self) -> int:
        """Multiplicity of the root 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial")

    def integer_primitive(self) -> List[int]:
        """Integer coefficients of the primitive associate with positive lc."""
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints


def _poly(value) -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly([value])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero when both are zero)."""
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def is_squarefree(f: UniPoly) -> bool:
    if f.is_zero():
        return False
    return poly_gcd(f, f.derivative()).degree() == 0


def radical(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    return (f // poly_gcd(f, f.derivative())).monic()


def squarefree_decompose(f: UniPoly) -> List[Tuple[int, UniPoly]]:
    """Yun's algorithm: f = lc * prod q_e^e, q_e monic squarefree pairwise
    coprime.  Only nonconstant factors are listed, by increasing e."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    out = []
    if f.degree() == 0:
        return out
    f = f.monic()
    a = poly_gcd(f, f.derivative())
    b = f // a
    c = f.derivative() // a
    d = c - b.derivative()
    e = 1
    while b.degree() > 0:
        q = poly_gcd(b, d)
        if q.degree() > 0:
            out.append((e, q))
        b = b // q
        c = d // q
        d = c - b.derivative()
        e += 1
    return out


def power_decompose(f: UniPoly) -> Tuple[UniPoly, int, Fraction]:
    """f = lam * g^m with g monic and m as large as possible."""
    if f.degree() < 1:
        raise ValueError("power decomposition needs a nonconstant polynomial")
    parts = squarefree_decompose(f)
    m = 0
    for e, _ in parts:
        m = gcd(m, e)
    g = UniPoly([1])
    for e, q in parts:
        g = g * q ** (e // m)
    return g, m, f.lc()


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(f: UniPoly) -> List[Fraction]:
    """Distinct rational roots, sorted by (|r|, r)."""
    if f.is_zero():
        raise ValueError("zero polynomial has every root")
    roots = set()
    if f.degree() < 1:
        return []
    k = f.x_valuation()
    if k:
        roots.add(Fraction(0))
        f = UniPoly(f.coeffs[k:])
    if f.degree() >= 1:
        ints = f.integer_primitive()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if f(cand) == 0:
                        roots.add(cand)
    return sorted(roots, key=lambda r: (abs(r), r))
