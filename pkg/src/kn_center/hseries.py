"""Dense formal series with half-integer exponents.

A HalfSeries stores coefficients for exponents alpha, alpha+1, alpha+2, ...
where alpha lies in (1/2)Z; internally everything is tracked through doubled
exponents (offset2 = 2*alpha) so that all bookkeeping is integer.  Every series
carries a truncation order (inclusive, also doubled); None means the series is
an exact polynomial.  Arithmetic propagates the weakest truncation of the
operands.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegrablePole, NotInvertible, ParityMismatch
from .scalar import Scalar, _coerce_scalar

HALF = Fraction(1, 2)


def _min2(*values):
    vals = [v for v in values if v is not None]
    return min(vals) if vals else None


class HalfSeries:
    __slots__ = ("offset2", "coeffs", "trunc2")

    def __init__(self, offset2: int, coeffs, trunc2=None):
        coeffs = list(coeffs)
        if trunc2 is not None:
            keep = (trunc2 - offset2) // 2 + 1
            coeffs = coeffs[:max(keep, 0)]
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            offset2 += 2
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            offset2 = 0
        self.offset2 = offset2
        self.coeffs = coeffs
        self.trunc2 = trunc2

    # -- constructors

    @staticmethod
    def from_terms(pairs, trunc=None) -> "HalfSeries":
        """Build from (exponent, Scalar) pairs; exponents may be half-integers."""
        pairs = [(Fraction(e), _coerce_scalar(c)) for e, c in pairs]
        pairs = [(e, c) for e, c in pairs if not c.is_zero()]
        trunc2 = None if trunc is None else int(2 * Fraction(trunc))
        if not pairs:
            return HalfSeries(0, [], trunc2)
        doubled = sorted((int(2 * e), c) for e, c in pairs)
        off2 = doubled[0][0]
        if any((e2 - off2) % 2 for e2, _ in doubled):
            raise ParityMismatch("exponents must share one half-integer grid")
        coeffs = [Scalar.zero()] * ((doubled[-1][0] - off2) // 2 + 1)
        for e2, c in doubled:
            coeffs[(e2 - off2) // 2] = coeffs[(e2 - off2) // 2] + c
        return HalfSeries(off2, coeffs, trunc2)

    @staticmethod
    def zero(trunc=None) -> "HalfSeries":
        return HalfSeries.from_terms([], trunc)

    @staticmethod
    def one() -> "HalfSeries":
        return HalfSeries(0, [Scalar.one()])

    # -- inspection

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def offset(self) -> Fraction:
        return Fraction(self.offset2, 2)

    @property
    def trunc(self):
        return None if self.trunc2 is None else Fraction(self.trunc2, 2)

    def coefficient(self, exponent) -> Scalar:
        e2 = int(2 * Fraction(exponent))
        if self.trunc2 is not None and e2 > self.trunc2:
            raise ValueError(f"exponent {exponent} beyond truncation {self.trunc}")
        idx, rem = divmod(e2 - self.offset2, 2)
        if rem or idx < 0 or idx >= len(self.coeffs):
            return Scalar.zero()
        return self.coeffs[idx]

    def terms(self):
        return [
            (Fraction(self.offset2 + 2 * j, 2), c)
            for j, c in enumerate(self.coeffs)
            if not c.is_zero()
        ]

    def has_integer_exponents(self) -> bool:
        return self.is_zero() or self.offset2 % 2 == 0

    # -- arithmetic

    def __add__(self, other: "HalfSeries") -> "HalfSeries":
        trunc2 = _min2(self.trunc2, other.trunc2)
        if self.is_zero():
            return HalfSeries(other.offset2, other.coeffs, trunc2)
        if other.is_zero():
            return HalfSeries(self.offset2, self.coeffs, trunc2)
        if (self.offset2 - other.offset2) % 2:
            raise ParityMismatch("cannot add series on different half-integer grids")
        off2 = min(self.offset2, other.offset2)
        top2 = max(self.offset2 + 2 * (len(self.coeffs) - 1),
                   other.offset2 + 2 * (len(other.coeffs) - 1))
        out = [Scalar.zero()] * ((top2 - off2) // 2 + 1)
        for s in (self, other):
            base = (s.offset2 - off2) // 2
            for j, c in enumerate(s.coeffs):
                out[base + j] = out[base + j] + c
        return HalfSeries(off2, out, trunc2)

    def __neg__(self) -> "HalfSeries":
        return HalfSeries(self.offset2, [-c for c in self.coeffs], self.trunc2)

    def __sub__(self, other: "HalfSeries") -> "HalfSeries":
        return self + (-other)

    def scale(self, factor) -> "HalfSeries":
        factor = _coerce_scalar(factor)
        return HalfSeries(self.offset2, [factor * c for c in self.coeffs], self.trunc2)

    def shift2(self, k2: int) -> "HalfSeries":
        """Multiply by z^(k2/2)."""
        t2 = None if self.trunc2 is None else self.trunc2 + k2
        return HalfSeries(self.offset2 + k2, self.coeffs, t2)

    def __mul__(self, other):
        if isinstance(other, HalfSeries):
            if self.is_zero() or other.is_zero():
                trunc2 = _min2(
                    None if self.trunc2 is None else self.trunc2 + other.offset2,
                    None if other.trunc2 is None else other.trunc2 + self.offset2,
                )
                return HalfSeries(0, [], trunc2)
            off2 = self.offset2 + other.offset2
            trunc2 = _min2(
                None if self.trunc2 is None else self.trunc2 + other.offset2,
                None if other.trunc2 is None else other.trunc2 + self.offset2,
            )
            nmax = len(self.coeffs) + len(other.coeffs) - 1
            if trunc2 is not None:
                nmax = min(nmax, (trunc2 - off2) // 2 + 1)
            out = [Scalar.zero()] * max(nmax, 0)
            for i, a in enumerate(self.coeffs):
                if a.is_zero() or i >= nmax:
                    continue
                for j, b in enumerate(other.coeffs):
                    if i + j >= nmax:
                        break
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return HalfSeries(off2, out, trunc2)
        return self.scale(other)

    __rmul__ = __mul__

    def truncated(self, order) -> "HalfSeries":
        t2 = int(2 * Fraction(order))
        return HalfSeries(self.offset2, self.coeffs, _min2(self.trunc2, t2))

    def derivative(self) -> "HalfSeries":
        out = []
        for j, c in enumerate(self.coeffs):
            beta = Fraction(self.offset2 + 2 * j, 2)
            out.append(c * Scalar.from_rational(beta))
        t2 = None if self.trunc2 is None else self.trunc2 - 2
        return HalfSeries(self.offset2 - 2, out, t2)

    def __eq__(self, other):
        if not isinstance(other, HalfSeries):
            return NotImplemented
        return (
            self.offset2 == other.offset2
            and self.trunc2 == other.trunc2
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def same_terms(self, other: "HalfSeries", through=None) -> bool:
        """Coefficient-wise agreement up to `through` (defaults to the common
        truncation; exact series compare over their full support)."""
        hi2 = _min2(self.trunc2, other.trunc2,
                    None if through is None else int(2 * Fraction(through)))
        if hi2 is None:
            return self.terms() == other.terms()
        for s in (self, other):
            for e, c in s.terms():
                if 2 * e <= hi2 and not (self.coefficient(e) == other.coefficient(e)):
                    return False
        return True

    def __repr__(self):
        body = " + ".join(f"({c})*z^{e}" for e, c in self.terms()) or "0"
        tail = "" if self.trunc2 is None else f" + O(z^{Fraction(self.trunc2, 2) + 1})"
        return f"HalfSeries[{body}{tail}]"


def series_integrate(f: HalfSeries) -> HalfSeries:
    """Term-by-term formal integral with zero constant of integration.

    Raises NonIntegrablePole if a z^(-1) term is present.
    """
    out = []
    for j, c in enumerate(f.coeffs):
        beta = Fraction(f.offset2 + 2 * j, 2)
        if beta == -1:
            if not c.is_zero():
                raise NonIntegrablePole("cannot integrate a z^-1 term")
            out.append(Scalar.zero())
        else:
            out.append(c * Scalar.from_rational(1 / (beta + 1)))
    t2 = None if f.trunc2 is None else f.trunc2 + 2
    return HalfSeries(f.offset2 + 2, out, t2)


def _binom(e: Fraction, n: int) -> Fraction:
    acc = Fraction(1)
    for i in range(n):
        acc *= (e - i) / (i + 1)
    return acc


def series_frac_pow(f: HalfSeries, e, order) -> HalfSeries:
    """Raise a series with integer offset and unit leading coefficient to the
    power e in {1/2, -3/2}, truncated at `order` (inclusive).

    The result is (leading term)^e times the Newton binomial expansion of the
    unit part, so it satisfies g*g = f (e = 1/2) resp. g*g*f^3 = 1 (e = -3/2)
    up to the truncation order.
    """
    e = Fraction(e)
    if e not in (Fraction(1, 2), Fraction(-3, 2)):
        raise ValueError("supported exponents are 1/2 and -3/2")
    if f.is_zero():
        raise NotInvertible("cannot take a fractional power of zero")
    if f.offset2 % 2:
        raise ParityMismatch("fractional powers require an integer offset")
    lead = f.coeffs[0]
    inv_lead = lead.invert()
    root = lead.sqrt()
    prefactor = root if e == HALF else root.invert() ** 3
    off = Fraction(f.offset2) * e
    assert off.denominator == 1
    new_off2 = off.numerator
    order2 = int(2 * Fraction(order))
    rel2 = order2 - new_off2
    if f.trunc2 is not None:
        rel2 = min(rel2, f.trunc2 - f.offset2)
    nterms = rel2 // 2 + 1
    if nterms <= 0:
        return HalfSeries(0, [], order2)
    # unit part 1 + w, indexed by relative exponent
    w = [Scalar.zero()] * nterms
    for k in range(1, min(nterms, len(f.coeffs))):
        w[k] = inv_lead * f.coeffs[k]
    out = [Scalar.zero()] * nterms
    out[0] = Scalar.one()
    wpow = list(out)
    for n in range(1, nterms):
        nxt = [Scalar.zero()] * nterms
        for i in range(nterms):
            a = wpow[i]
            if a.is_zero():
                continue
            for j in range(1, nterms - i):
                if not w[j].is_zero():
                    nxt[i + j] = nxt[i + j] + a * w[j]
        wpow = nxt
        if all(c.is_zero() for c in wpow):
            break
        coef = Scalar.from_rational(_binom(e, n))
        for k in range(n, nterms):
            if not wpow[k].is_zero():
                out[k] = out[k] + coef * wpow[k]
    out = [prefactor * c for c in out]
    return HalfSeries(new_off2, out, new_off2 + rel2)
