"""Exact cyclotomic field arithmetic.

Elements of Q(zeta_m) are stored on the power basis 1, zeta, ..., zeta^(phi(m)-1)
and reduced eagerly modulo the m-th cyclotomic polynomial, so equality within a
fixed order is coefficient-wise.  Elements of different orders are compared (and
combined) after embedding both into the field of order lcm(m1, m2) via
zeta_m = zeta_L^(L/m).  Rational values normalise to order 1.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import NotInvertible


# ---------------------------------------------------------------------------
# dense univariate polynomials, constant coefficient first


def _ptrim(p):
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return p[:n]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(out)


def _pdivmod(num, den):
    """Quotient and remainder over Q; den need not be monic."""
    num = [Fraction(c) for c in num]
    den = _ptrim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(den[-1])
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    r = list(num)
    while len(_ptrim(r)) >= len(den):
        r = _ptrim(r)
        shift = len(r) - len(den)
        factor = r[-1] / lead
        q[shift] = factor
        for i, d in enumerate(den):
            r[shift + i] -= factor * d
        r[-1] = Fraction(0)
    return _ptrim(q), _ptrim(r)


def _pxgcd(a, b):
    """Extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = [Fraction(c) for c in a], [Fraction(c) for c in b]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while _ptrim(r1):
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, [-c for c in _pmul(q, s1)])
        t0, t1 = t1, _padd(t0, [-c for c in _pmul(q, t1)])
    return _ptrim(r0), _ptrim(s0), _ptrim(t0)


def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """m-th cyclotomic polynomial as an integer coefficient tuple, constant first.

    Computed from x^m - 1 = prod_{d | m} Phi_d by exact division.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q, r = _pdivmod(poly, list(cyclotomic_poly(d)))
            assert not r, "cyclotomic division must be exact"
            poly = q
    return tuple(int(c) for c in poly)


@functools.lru_cache(maxsize=None)
def _phi_deg(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@functools.lru_cache(maxsize=None)
def _xpow_mod(m: int, e: int) -> tuple:
    """Coefficient tuple of x^e reduced mod Phi_m (length phi(m))."""
    d = _phi_deg(m)
    phi = cyclotomic_poly(m)
    if e < d:
        out = [Fraction(0)] * d
        out[e] = Fraction(1)
        return tuple(out)
    prev = list(_xpow_mod(m, e - 1))
    shifted = [Fraction(0)] + prev  # multiply by x
    if len(shifted) > d:
        top = shifted.pop()
        # x^d = -(phi[0] + ... + phi[d-1] x^(d-1))  (Phi_m is monic)
        for i in range(d):
            shifted[i] -= top * phi[i]
    shifted += [Fraction(0)] * (d - len(shifted))
    return tuple(shifted)


class Cyclo:
    """An element of a cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        d = _phi_deg(order)
        if len(coeffs) > d:
            reduced = [Fraction(0)] * d
            for e, c in enumerate(coeffs):
                if c:
                    pw = _xpow_mod(order, e)
                    for i in range(d):
                        reduced[i] += c * pw[i]
            coeffs = reduced
        else:
            coeffs = coeffs + [Fraction(0)] * (d - len(coeffs))
        if order > 1 and all(c == 0 for c in coeffs[1:]):
            order, coeffs = 1, [coeffs[0]]
        self.order = order
        self.coeffs = tuple(coeffs)

    # -- constructors

    @staticmethod
    def from_rational(q) -> "Cyclo":
        return Cyclo(1, [Fraction(q)])

    @staticmethod
    def zeta(m: int, power: int = 1) -> "Cyclo":
        power %= m
        return Cyclo(m, _xpow_mod(m, power))

    # -- predicates / conversions

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return self.order == 1

    def as_rational(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.order), math.sin(2 * math.pi / self.order))
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    # -- promotion

    def _coeffs_at(self, order: int):
        """Raw power-basis coordinates in Q(zeta_order); no renormalisation."""
        if order == self.order:
            return list(self.coeffs)
        if order % self.order != 0:
            raise ValueError("can only promote to a multiple of the current order")
        step = order // self.order
        d = _phi_deg(order)
        out = [Fraction(0)] * d
        for e, c in enumerate(self.coeffs):
            if c:
                pw = _xpow_mod(order, e * step)
                for i in range(d):
                    out[i] += c * pw[i]
        return out

    def promote(self, order: int) -> "Cyclo":
        return Cyclo(order, self._coeffs_at(order)) if order != self.order else self

    def _pair(self, other: "Cyclo"):
        m = self.order * other.order // math.gcd(self.order, other.order)
        return self._coeffs_at(m), other._coeffs_at(m), m

    # -- arithmetic

    def __add__(self, other):
        other = _coerce(other)
        a, b, m = self._pair(other)
        return Cyclo(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        a, b, m = self._pair(other)
        return Cyclo(m, _pmul(a, b))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise NotInvertible("division by zero")
        if self.order == 1:
            return Cyclo(1, [1 / self.coeffs[0]])
        g, u, _ = _pxgcd(list(self.coeffs), list(cyclotomic_poly(self.order)))
        assert len(g) == 1 and g[0] != 0, "element coprime to Phi_m"
        return Cyclo(self.order, [c / g[0] for c in u])

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc, base = Cyclo.from_rational(1), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def conjugate(self) -> "Cyclo":
        """Complex conjugation, the Galois map zeta -> zeta^(-1)."""
        m = self.order
        if m == 1:
            return self
        out = [Fraction(0)] * _phi_deg(m)
        for e, c in enumerate(self.coeffs):
            if c:
                pw = _xpow_mod(m, (-e) % m)
                for i in range(len(out)):
                    out[i] += c * pw[i]
        return Cyclo(m, out)

    # -- comparisons / hashing

    def __eq__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        a, b, _ = self._pair(other)
        return a == b

    __hash__ = None  # equal values may be stored at different orders

    def __repr__(self):
        if self.order == 1:
            return f"Cyclo({self.coeffs[0]})"
        return f"Cyclo(zeta{self.order}; {list(self.coeffs)})"


def _coerce(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclo.from_rational(x)
    raise TypeError(f"cannot coerce {type(x)} to Cyclo")


ZERO = Cyclo.from_rational(0)
ONE = Cyclo.from_rational(1)
