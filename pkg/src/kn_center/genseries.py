"""Generating series for the reduction tables via hyperelliptic integrals.

The series P_i(z) = sum_k P[k,i] z^(k+r) and Q_i(z) = sum_m Q[m,i] z^(m+r+1)
satisfy first-order linear ODEs whose integrating factors turn them into

    P_i(z) = z^((r-3)/2) sqrt(T(z)) * Integral R_i(z) / (2 z^((r-1)/2) T(z)^(3/2)) dz
    Q_i(z) = z^(r+2)   sqrt(P(z))  * Integral S_i(z) / (2 z^(r+3)   P(z)^(3/2)) dz

with T(z) = sum_j a_j z^(r+1-j), P(z) = sum_j a_j z^j, and explicit polynomial
right-hand sides R_i, S_i.  Constants of integration are zero.  The fractional
powers are expanded two independent ways: Newton's binomial series ("direct")
and Faa di Bruno's formula through partial Bell polynomials ("bell").

All intermediate series have half-integer exponents; the assembled generating
series land on integer exponents, which is asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvertible, ParityMismatch
from .hseries import HalfSeries, series_frac_pow, series_integrate
from .recursions import CurveSpec
from .scalar import Scalar

HALF = Fraction(1, 2)
MINUS_3_HALVES = Fraction(-3, 2)


def double_factorial_odd(n: int) -> int:
    """n!! for odd n >= -3, with (-1)!! = 1 and (-3)!! = -1."""
    if n % 2 == 0:
        raise ValueError("only odd arguments are supported")
    if n == -3:
        return -1
    if n == -1:
        return 1
    acc = 1
    for m in range(1, n + 1, 2):
        acc *= m
    return acc


def bell_partial(m: int, k: int, args) -> Scalar:
    """Partial Bell polynomial B_{m,k} evaluated at Scalar arguments z_1, z_2, ...

    Sum over l_1 + ... + l_(m-k+1) = k with sum j*l_j = m of
    m!/(prod l_j!) * prod (z_j / j!)^(l_j).
    """
    if m < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k == 0:
        return Scalar.one() if m == 0 else Scalar.zero()
    if k > m:
        return Scalar.zero()
    nargs = m - k + 1
    args = list(args)
    if len(args) < nargs:
        raise ValueError(f"need {nargs} arguments for B_{m},{k}")
    total = Scalar.zero()
    mfact = math.factorial(m)

    def walk(j, count_left, weight_left, factor):
        nonlocal total
        if j > nargs:
            if count_left == 0 and weight_left == 0:
                total = total + factor
            return
        # l_j can be at most what the count and weight budgets allow
        max_l = count_left if j == 0 else min(count_left, weight_left // j)
        for l in range(max_l + 1):
            if count_left - l < 0 or weight_left - j * l < 0:
                break
            piece = factor
            if l:
                base = args[j - 1] * Scalar.from_rational(Fraction(1, math.factorial(j)))
                piece = piece * (base**l) * Scalar.from_rational(Fraction(1, math.factorial(l)))
            walk(j + 1, count_left - l, weight_left - j * l, piece)

    walk(1, k, m, Scalar.from_rational(mfact))
    return total


def faa_di_bruno_pow(f: HalfSeries, e, order) -> HalfSeries:
    """Expand f^e, e in {1/2, -3/2}, by Faa di Bruno's formula: coefficient m is
    (1/m!) sum_l g^(l)(f(0)) B_{m,l}(f'(0), f''(0), ...) with g(x) = x^e and

        g^(l)(x) = (-1)^l (2l+1)!! / (2^l x^((2l+3)/2))      for e = -3/2,
        g^(l)(x) = (-1)^(l+1) (2l-3)!! / (2^l x^((2l-1)/2))  for e = 1/2.

    Cross-checks series_frac_pow, which expands the same power by Newton's
    binomial series.
    """
    e = Fraction(e)
    if e not in (HALF, MINUS_3_HALVES):
        raise ValueError("supported exponents are 1/2 and -3/2")
    if f.is_zero() or f.offset2 != 0:
        raise NotInvertible("constant term must be a unit")
    v = f.coeffs[0]
    s = v.sqrt()  # g^(l) needs half powers of f(0)
    order2 = int(2 * Fraction(order))
    rel2 = order2
    if f.trunc2 is not None:
        rel2 = min(rel2, f.trunc2)
    if rel2 % 2:
        rel2 -= 1
    nterms = rel2 // 2 + 1
    if nterms <= 0:
        return HalfSeries(0, [], order2)
    derivs = [
        Scalar.from_rational(math.factorial(nu)) * f.coefficient(nu)
        for nu in range(1, nterms)
    ]
    out = []
    for m in range(nterms):
        acc = Scalar.zero()
        for l in range(m + 1):
            if e == MINUS_3_HALVES:
                num = Fraction((-1) ** l * double_factorial_odd(2 * l + 1), 2**l)
                gl = Scalar.from_rational(num) * (s ** (-(2 * l + 3)))
            else:
                num = Fraction((-1) ** (l + 1) * double_factorial_odd(2 * l - 3), 2**l)
                gl = Scalar.from_rational(num) * (s ** (1 - 2 * l))
            bell = bell_partial(m, l, derivs)
            if not bell.is_zero():
                acc = acc + gl * bell
        out.append(Scalar.from_rational(Fraction(1, math.factorial(m))) * acc)
    return HalfSeries(0, out, rel2)


@dataclass
class OdeData:
    """The pieces of the first-order ODE 2z*base*S' - qfun*S = rhs satisfied by
    a generating series S, along with its integrating factor mu."""

    curve: CurveSpec
    kind: str  # "P" or "Q"
    index: int
    base: HalfSeries
    qfun: HalfSeries
    rhs: HalfSeries
    mu: HalfSeries


def _t_series(curve: CurveSpec) -> HalfSeries:
    return HalfSeries.from_terms(
        [(curve.r + 1 - j, curve.a(j)) for j in range(1, curve.r + 2)]
    )


def _p_series(curve: CurveSpec) -> HalfSeries:
    return HalfSeries.from_terms([(j, curve.a(j)) for j in range(1, curve.r + 2)])


def _r_rhs(curve: CurveSpec, i: int) -> HalfSeries:
    r = curve.r
    terms = []
    for j in range(1, r + 2):
        k = i + r + 1 - j
        if 1 - j <= k <= -1:
            terms.append((k + r, Scalar.from_rational(3 * j + 2 * k - 2 * r) * curve.a(j)))
    return HalfSeries.from_terms(terms)


def _s_rhs(curve: CurveSpec, i: int) -> HalfSeries:
    r = curve.r
    terms = []
    for m in range(1, r + 2):
        j = m + i
        if 1 <= j <= m - 1:
            terms.append((m + r + 1, Scalar.from_rational(-(3 * j - 2 * m + 2)) * curve.a(j)))
    return HalfSeries.from_terms(terms)


def _check_index(curve: CurveSpec, i: int) -> None:
    if not -curve.r <= i <= -1:
        raise ValueError(f"series index {i} outside -r..-1")


def p_side_data(curve: CurveSpec, i: int, order: int) -> OdeData:
    _check_index(curve, i)
    r = curve.r
    work = order + r + 3
    T = _t_series(curve)
    qfun = T.derivative().shift2(2) + T.scale(r - 3)
    mu = (series_frac_pow(T, MINUS_3_HALVES, work) * T).shift2(-(r - 3))
    return OdeData(curve, "P", i, T, qfun, _r_rhs(curve, i), mu)


def q_side_data(curve: CurveSpec, i: int, order: int) -> OdeData:
    _check_index(curve, i)
    r = curve.r
    work = order + r + 3
    P = _p_series(curve)
    qfun = P.derivative().shift2(2) + P.scale(2 * (r + 2))
    mu = (series_frac_pow(P, MINUS_3_HALVES, work) * P).shift2(-2 * (r + 2))
    return OdeData(curve, "Q", i, P, qfun, _s_rhs(curve, i), mu)


def gen_P(curve: CurveSpec, i: int, order: int, route: str = "direct") -> HalfSeries:
    """Generating series of the P column i through z^order; coefficient of
    z^(k+r) is P[k, i]."""
    _check_index(curve, i)
    r = curve.r
    work = order + r + 3
    T = _t_series(curve)
    pow_fn = series_frac_pow if route == "direct" else faa_di_bruno_pow
    if route not in ("direct", "bell"):
        raise ValueError(f"unknown route {route!r}")
    t_m32 = pow_fn(T, MINUS_3_HALVES, work)
    t_p12 = pow_fn(T, HALF, work)
    integrand = (_r_rhs(curve, i) * t_m32).shift2(-(r - 1)).scale(Fraction(1, 2))
    result = (series_integrate(integrand) * t_p12).shift2(r - 3)
    if not result.has_integer_exponents():
        raise ParityMismatch("half powers failed to cancel in the P series")
    assert result.trunc2 is None or result.trunc2 >= 2 * order
    return result.truncated(order)


def gen_Q(curve: CurveSpec, i: int, order: int) -> HalfSeries:
    """Generating series of the Q column i through z^order; coefficient of
    z^(m+r+1) is Q[m, i].

    P(z) = a_1 z (1 + ...) is factored so that only integer powers of a_1
    appear: the half powers of the leading coefficient cancel between sqrt(P)
    and P^(-3/2), leaving a net 1/a_1.
    """
    _check_index(curve, i)
    r = curve.r
    a1_inv = curve.a(1).invert()
    work = order + r + 3
    unit = HalfSeries.from_terms(
        [(j - 1, curve.a(j) * a1_inv) for j in range(1, curve.r + 2)]
    )
    w_m32 = series_frac_pow(unit, MINUS_3_HALVES, work)
    w_p12 = series_frac_pow(unit, HALF, work)
    integrand = (_s_rhs(curve, i) * w_m32).shift2(-2 * r - 9).scale(Fraction(1, 2))
    result = (series_integrate(integrand) * w_p12).shift2(2 * r + 5).scale(a1_inv)
    if not result.has_integer_exponents():
        raise ParityMismatch("half powers failed to cancel in the Q series")
    assert result.trunc2 is None or result.trunc2 >= 2 * order
    return result.truncated(order)


def ode_residual(data: OdeData, series: HalfSeries) -> HalfSeries:
    """2z*base*dS/dz - qfun*S - rhs; zero to truncation when S generates the
    table column."""
    lhs = (data.base * series.derivative()).shift2(2).scale(2) - data.qfun * series
    return lhs - data.rhs
