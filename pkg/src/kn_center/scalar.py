"""Multivariate Laurent polynomials over cyclotomic fields.

This is the universal coefficient domain of the package: every quantity that is
exact (recursion table entries, matrix entries, cocycle values) is a Scalar.
A Scalar is a finite sum of terms coeff * x1^e1 * ... * xn^en with integer
(possibly negative) exponents and Cyclo coefficients.  Units are exactly the
single-term scalars, which is all the invertibility the recursions ever need;
there is deliberately no gcd or fraction-field machinery.

The module also implements the literal mini-grammar shared by the CLI and the
JSON file formats: integers, rationals n/d, variable names, ^ with integer
exponents, * + -, parentheses, and zeta(m) for a primitive m-th root of unity.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclo import Cyclo
from .errors import NotASquare, NotInvertible, ScalarParseError


def _coerce_cyclo(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclo.from_rational(x)
    raise TypeError(f"cannot use {type(x)} as a coefficient")


class Scalar:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        """Internal constructor; prefer the static factories below."""
        vars = tuple(vars)
        terms = dict(terms or {})
        # drop zero coefficients
        terms = {e: c for e, c in terms.items() if not c.is_zero()}
        # drop variables unused by every term, keeping names sorted
        if vars:
            used = [any(e[i] != 0 for e in terms) for i in range(len(vars))]
            if not all(used):
                keep = [i for i, u in enumerate(used) if u]
                vars = tuple(vars[i] for i in keep)
                terms = {tuple(e[i] for i in keep): c for e, c in terms.items()}
        order = sorted(range(len(vars)), key=lambda i: vars[i])
        if order != list(range(len(vars))):
            vars = tuple(vars[i] for i in order)
            terms = {tuple(e[i] for i in order): c for e, c in terms.items()}
        self.vars = vars
        self.terms = terms

    # -- factories

    @staticmethod
    def zero() -> "Scalar":
        return Scalar()

    @staticmethod
    def one() -> "Scalar":
        return Scalar.from_rational(1)

    @staticmethod
    def from_rational(q) -> "Scalar":
        c = Cyclo.from_rational(q)
        return Scalar((), {(): c} if not c.is_zero() else {})

    @staticmethod
    def from_cyclo(c) -> "Scalar":
        c = _coerce_cyclo(c)
        return Scalar((), {(): c} if not c.is_zero() else {})

    @staticmethod
    def var(name: str, exponent: int = 1) -> "Scalar":
        return Scalar((name,), {(exponent,): Cyclo.from_rational(1)})

    @staticmethod
    def monomial(coeff, exps: dict) -> "Scalar":
        """coeff * prod(name^e) for a {name: e} dict."""
        c = _coerce_cyclo(coeff)
        names = tuple(sorted(exps))
        return Scalar(names, {tuple(exps[n] for n in names): c})

    @staticmethod
    def zeta(m: int, power: int = 1) -> "Scalar":
        return Scalar.from_cyclo(Cyclo.zeta(m, power))

    # -- structure

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self == _ONE

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly the single-term scalars."""
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Cyclo:
        if self.vars:
            raise ValueError(f"{self} is not constant")
        if not self.terms:
            return Cyclo.from_rational(0)
        return self.terms[()]

    def is_rational(self) -> bool:
        return self.is_constant() and (self.is_zero() or self.constant_value().is_rational())

    def as_rational(self) -> Fraction:
        return self.constant_value().as_rational() if self.terms else Fraction(0)

    # -- alignment of variable sets

    def _aligned(self, other: "Scalar"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        names = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(s):
            pos = [s.vars.index(n) if n in s.vars else None for n in names]
            return {
                tuple(0 if p is None else e[p] for p in pos): c
                for e, c in s.terms.items()
            }

        return names, remap(self), remap(other)

    # -- arithmetic

    def __add__(self, other):
        other = _coerce_scalar(other)
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out[e] + c if e in out else c
        return Scalar(names, out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce_scalar(other))

    def __rsub__(self, other):
        return _coerce_scalar(other) + (-self)

    def __mul__(self, other):
        other = _coerce_scalar(other)
        names, a, b = self._aligned(other)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                out[e] = out[e] + prod if e in out else prod
        return Scalar(names, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        acc, base = Scalar.one(), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def invert(self) -> "Scalar":
        """Inverse of a unit; raises NotInvertible on multi-term scalars."""
        if self.is_zero():
            raise NotInvertible("zero is not invertible")
        if len(self.terms) != 1:
            raise NotInvertible(f"{self} has {len(self.terms)} terms; units are single terms")
        (exps, coeff), = self.terms.items()
        return Scalar(self.vars, {tuple(-x for x in exps): coeff.inverse()})

    def __truediv__(self, other):
        return self * _coerce_scalar(other).invert()

    def sqrt(self) -> "Scalar":
        """Square root of a unit whose exponents are even and whose coefficient
        is a rational square times a root of unity.  Raises NotASquare otherwise."""
        if self.is_zero():
            return self
        if len(self.terms) != 1:
            raise NotASquare(f"{self} is not a unit")
        (exps, coeff), = self.terms.items()
        if any(x % 2 for x in exps):
            raise NotASquare(f"odd variable exponent in {self}")
        half = tuple(x // 2 for x in exps)
        return Scalar(self.vars, {half: _cyclo_sqrt(coeff)})

    def conjugate(self) -> "Scalar":
        return Scalar(self.vars, {e: c.conjugate() for e, c in self.terms.items()})

    def to_complex(self, assign=None) -> complex:
        assign = assign or {}
        acc = 0j
        for e, c in self.terms.items():
            v = c.to_complex()
            for name, x in zip(self.vars, e):
                if x:
                    v *= complex(assign[name]) ** x
            acc += v
        return acc

    # -- comparisons

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = _coerce_scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.vars != other.vars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    __hash__ = None  # equality is value-based across cyclotomic orders

    def __repr__(self):
        return f"Scalar({scalar_to_str(self)!r})"

    def __str__(self):
        return scalar_to_str(self)


def _coerce_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_rational(x)
    if isinstance(x, Cyclo):
        return Scalar.from_cyclo(x)
    raise TypeError(f"cannot coerce {type(x)} to Scalar")


def _cyclo_sqrt(c: Cyclo) -> Cyclo:
    """Square root of q*zeta_m^j with q a rational square (up to sign)."""
    if c.is_rational():
        return _rational_sqrt(c.as_rational())
    nz = [(j, x) for j, x in enumerate(c.coeffs) if x != 0]
    if len(nz) == 1:
        j, q = nz[0]
        return _rational_sqrt(q) * Cyclo.zeta(2 * c.order, j)
    raise NotASquare(f"no square root implemented for {c!r}")


def _rational_sqrt(q: Fraction) -> Cyclo:
    if q == 0:
        return Cyclo.from_rational(0)
    sign = 1 if q > 0 else -1
    q = abs(q)
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise NotASquare(f"{sign * q} is not a rational square")
    root = Cyclo.from_rational(Fraction(rn, rd))
    if sign < 0:
        root = root * Cyclo.zeta(4)
    return root


ZERO = Scalar.zero()
_ONE = Scalar.one()


# ---------------------------------------------------------------------------
# literal grammar


def scalar_to_str(s: Scalar) -> str:
    """Canonical literal form; deterministic and re-parseable.

    A common integer denominator is factored out, matching the style
    "(6160*c^4-3388*c^2+153)/4641".
    """
    if s.is_zero():
        return "0"
    denom = 1
    for c in s.terms.values():
        for q in c.coeffs:
            denom = denom * q.denominator // math.gcd(denom, q.denominator)
    scaled = s * denom if denom != 1 else s
    parts = []
    for exps in sorted(scaled.terms, reverse=True):
        coeff = scaled.terms[exps]
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(scaled.vars, exps)
            if e != 0
        )
        if coeff.is_rational():
            g = coeff.as_rational()
            assert g.denominator == 1
            g = g.numerator
            if not mono:
                piece = str(g)
            elif g == 1:
                piece = mono
            elif g == -1:
                piece = f"-{mono}"
            else:
                piece = f"{g}*{mono}"
        else:
            body = _cyclo_int_str(coeff)
            piece = f"({body})*{mono}" if mono else f"({body})"
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    if denom != 1:
        out = f"({out})/{denom}"
    return out


def _cyclo_int_str(c: Cyclo) -> str:
    parts = []
    for j in range(len(c.coeffs) - 1, -1, -1):
        g = c.coeffs[j]
        if g == 0:
            continue
        assert g.denominator == 1
        g = g.numerator
        if j == 0:
            piece = str(g)
        else:
            z = f"zeta({c.order})" if j == 1 else f"zeta({c.order})^{j}"
            piece = z if g == 1 else f"-{z}" if g == -1 else f"{g}*{z}"
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        out += piece if piece.startswith("-") else "+" + piece
    return out


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ScalarParseError(f"unexpected character {ch!r} in scalar literal")
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ScalarParseError(f"expected {kind!r}, found {tok[1]!r}")
        return tok

    def expr(self) -> Scalar:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Scalar:
        acc = self.unary()
        while self.peek() in ("*", "/"):
            op = self.next()[0]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                try:
                    acc = acc / rhs
                except NotInvertible as exc:
                    raise ScalarParseError(f"division by non-unit: {exc}") from exc
        return acc

    def unary(self) -> Scalar:
        if self.peek() == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            e = sign * self.expect("int")[1]
            try:
                base = base**e
            except NotInvertible as exc:
                raise ScalarParseError(f"negative power of non-unit: {exc}") from exc
        return base

    def atom(self) -> Scalar:
        kind, value = self.next()
        if kind == "int":
            return Scalar.from_rational(value)
        if kind == "name":
            if value == "zeta":
                self.expect("(")
                m = self.expect("int")[1]
                self.expect(")")
                if m < 1:
                    raise ScalarParseError("zeta order must be >= 1")
                return Scalar.zeta(m)
            return Scalar.var(value)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ScalarParseError(f"unexpected token {value!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal.  Raises ScalarParseError on malformed input."""
    parser = _Parser(_tokenize(text))
    out = parser.expr()
    if parser.peek() != "end":
        raise ScalarParseError(f"trailing input at {parser.tokens[parser.pos][1]!r}")
    return out
