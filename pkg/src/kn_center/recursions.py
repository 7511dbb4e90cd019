"""Reduction-coefficient tables for hyperelliptic coordinate rings.

A curve is p(t) = a_1 t + ... + a_{r+1} t^{r+1}, monic with a_1 a unit and no
constant term.  The tables P[k, i] (k >= -r) and Q[m, i] (m >= 1), indexed with
-r <= i <= -1, express the classes of t^m u dt in the basis
omega_0 = [t^-1 dt], omega_k = [t^-k u dt]:

    (2k + r + 3) P[k, i] = - sum_{j=1}^{r} (3j + 2k - 2r) a_j P[k-r+j-1, i]
    (2m - 3) a_1 Q[m, i] =   sum_{j=2}^{r+1} (3j - 2m) a_j Q[m-j+1, i]

with Kronecker-delta initial conditions.  Both recursions are filled bottom-up
and every division is by an odd integer (times a_1 for Q), so all entries are
exact scalars in the curve coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import CurveFormatError, NotInvertible, TableTooSmall
from .scalar import Scalar, parse_scalar, scalar_to_str


@dataclass(frozen=True)
class CurveSpec:
    """Coefficients a_j of p(t), deg p = r + 1, p(0) = 0, monic."""

    r: int
    coeffs: dict  # j -> Scalar for 1 <= j <= r+1; absent means zero

    def __post_init__(self):
        if self.r < 1:
            raise CurveFormatError("deg p must be at least 2")
        for j in self.coeffs:
            if not 1 <= j <= self.r + 1:
                raise CurveFormatError(f"coefficient index {j} outside 1..{self.r + 1}")
        if not self.a(self.r + 1).is_one():
            raise CurveFormatError("p must be monic (leading coefficient 1)")
        if self.a(1).is_zero():
            raise CurveFormatError("a_1 must be nonzero (p has a simple root at 0)")

    def a(self, j: int) -> Scalar:
        if not 1 <= j <= self.r + 1:
            return Scalar.zero()
        return self.coeffs.get(j, Scalar.zero())

    def support(self):
        return sorted(j for j, c in self.coeffs.items() if not c.is_zero())

    @property
    def variables(self):
        names = set()
        for c in self.coeffs.values():
            names.update(c.vars)
        return tuple(sorted(names))

    # -- JSON format: {"r": 4, "variables": ["c"], "coeffs": {"1": "1", ...}}

    @staticmethod
    def from_json(data) -> "CurveSpec":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise CurveFormatError(f"malformed curve JSON: {exc}") from exc
        try:
            r = int(data["r"])
            raw = data["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CurveFormatError(f"curve JSON must carry 'r' and 'coeffs': {exc}") from exc
        coeffs = {}
        for key, lit in raw.items():
            coeffs[int(key)] = parse_scalar(lit)
        return CurveSpec(r, coeffs)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "variables": list(self.variables),
            "coeffs": {str(j): scalar_to_str(c) for j, c in sorted(self.coeffs.items())},
        }


def curve_from_dict(r: int, coeffs: dict) -> CurveSpec:
    """Coefficients may be ints, Fractions, strings, or Scalars."""
    out = {}
    for j, c in coeffs.items():
        if isinstance(c, str):
            c = parse_scalar(c)
        elif isinstance(c, (int, Fraction)):
            c = Scalar.from_rational(c)
        out[int(j)] = c
    return CurveSpec(r, out)


class PTable:
    """P[k, i] for -r <= k <= kmax, -r <= i <= -1."""

    def __init__(self, curve: CurveSpec, kmax: int, values: dict):
        self.curve = curve
        self.kmax = kmax
        self.values = values

    def value(self, k: int, i: int) -> Scalar:
        if not -self.curve.r <= i <= -1:
            raise TableTooSmall(f"column i={i} outside -r..-1")
        if k < -self.curve.r or k > self.kmax:
            raise TableTooSmall(f"P table covers k <= {self.kmax}, asked for {k}")
        return self.values[(k, i)]


class QTable:
    """Q[m, i] for 1 <= m <= mmax, -r <= i <= -1."""

    def __init__(self, curve: CurveSpec, mmax: int, values: dict):
        self.curve = curve
        self.mmax = mmax
        self.values = values

    def value(self, m: int, i: int) -> Scalar:
        if not -self.curve.r <= i <= -1:
            raise TableTooSmall(f"column i={i} outside -r..-1")
        if m < 1 or m > self.mmax:
            raise TableTooSmall(f"Q table covers m <= {self.mmax}, asked for {m}")
        return self.values[(m, i)]


def compute_P(curve: CurveSpec, kmax: int) -> PTable:
    """Fill the P table bottom-up from the delta initial condition."""
    r = curve.r
    values = {}
    for i in range(-r, 0):
        for l in range(-r, 0):
            values[(l, i)] = Scalar.one() if l == i else Scalar.zero()
    for k in range(0, kmax + 1):
        inv = Scalar.from_rational(Fraction(-1, 2 * k + r + 3))
        for i in range(-r, 0):
            acc = Scalar.zero()
            for j in range(1, r + 1):
                aj = curve.a(j)
                if aj.is_zero():
                    continue
                factor = 3 * j + 2 * k - 2 * r
                if factor:
                    acc = acc + Scalar.from_rational(factor) * aj * values[(k - r + j - 1, i)]
            values[(k, i)] = inv * acc
    return PTable(curve, kmax, values)


def compute_Q(curve: CurveSpec, mmax: int) -> QTable:
    """Fill the Q table bottom-up; requires a_1 to be a unit."""
    r = curve.r
    a1_inv = curve.a(1).invert()  # raises NotInvertible for non-unit a_1
    values = {}
    for i in range(-r, 0):
        for m in range(1, r + 1):
            values[(m, i)] = Scalar.one() if m == -i else Scalar.zero()
    for m in range(r + 1, mmax + 1):
        scale = Scalar.from_rational(Fraction(1, 2 * m - 3)) * a1_inv
        for i in range(-r, 0):
            acc = Scalar.zero()
            for j in range(2, r + 2):
                aj = curve.a(j)
                if aj.is_zero():
                    continue
                factor = 3 * j - 2 * m
                if factor:
                    acc = acc + Scalar.from_rational(factor) * aj * values[(m - j + 1, i)]
            values[(m, i)] = scale * acc
    return QTable(curve, mmax, values)


def closed_form_P_oddcurve(n: int, k: int, i: int) -> Fraction:
    """Closed-form P[k, i] for the curve t^(2n+1) - t.

    Zero off the congruence class k = i (mod 2n); on it, a telescoping product
    of the single-term recursion.
    """
    if not -2 * n <= i <= -1:
        raise ValueError(f"i={i} outside -2n..-1")
    if k < 0:
        return Fraction(1) if k == i else Fraction(0)
    if (k - i) % (2 * n):
        return Fraction(0)
    steps = (k - i) // (2 * n)
    acc = Fraction(1)
    for j in range(1, steps + 1):
        acc *= Fraction(-4 * j * n + 2 * k + 3, (2 - 4 * (j - 1)) * n + 2 * k + 3)
    return acc
