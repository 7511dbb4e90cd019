"""Automorphisms of the hyperelliptic coordinate ring and their classification.

For p(t) = t(t - alpha_1)...(t - alpha_2n) the ring C[t, t^-1, u : u^2 = p(t)]
admits two kinds of automorphisms:

  * rotations phi: t -> zeta t, u -> +-xi u with xi^2 = zeta a primitive k-th
    root of unity, k | 2n, available iff the coefficient support lies in
    j = 1 (mod k);
  * reflections psi: t -> c^2/t, u -> +-c^(n+1) t^(-n-1) u (times i in the
    minus case), available iff a_j = +-c^(2n-2j+2) a_(2n+2-j) for all j, the
    sign matching a_1 = +-c^(2n).

The group generated is C_2k, D_2k (order 4k), U_k, V_2k, or Dic_k, decided by
the sign case and the parity of l = 2n/k.  Detection works either exactly on
coefficients or numerically on root lists.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AmbiguousC,
    DuplicateRoot,
    InconsistentParams,
    KnDomainError,
    ToleranceConflict,
    ZeroRoot,
)
from .recursions import CurveSpec
from .scalar import Scalar, scalar_to_str


@dataclass(frozen=True)
class RingMonomial:
    """coeff * t^exponent * u^parity"""

    coeff: Scalar
    exponent: int
    parity: int


@dataclass(frozen=True)
class GroupName:
    family: str  # "C", "D", "U", "V", "Dic"
    subscript: int
    order: int

    @property
    def name(self) -> str:
        return f"{self.family}_{self.subscript}"

    def to_json(self) -> dict:
        return {"name": self.name, "family": self.family, "order": self.order}


@dataclass
class SymmetryReport:
    n: int
    k: int
    l: int
    dihedral: bool
    sign_case: str | None  # "a", "b", or None
    c: object  # Scalar, complex, or None
    group: GroupName

    def to_json(self) -> dict:
        if isinstance(self.c, Scalar):
            c_out = scalar_to_str(self.c)
        elif isinstance(self.c, complex):
            c_out = [self.c.real, self.c.imag]
        else:
            c_out = None
        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "dihedral": self.dihedral,
            "sign_case": self.sign_case,
            "c": c_out,
            "group": self.group.to_json(),
        }


def _group_for(k: int, n: int, dihedral: bool, sign_case) -> GroupName:
    if not dihedral:
        return GroupName("C", 2 * k, 2 * k)
    l = 2 * n // k
    if sign_case == "a":
        if l % 2 == 0:
            return GroupName("D", 2 * k, 4 * k)
        return GroupName("U", k, 4 * k)
    if l % 2 == 1:
        return GroupName("V", 2 * k, 4 * k)
    return GroupName("Dic", k, 4 * k)


def roots_to_coeffs(roots) -> CurveSpec:
    """Expand t * prod(t - alpha_i) into a CurveSpec with exact coefficients.

    Roots must be pairwise distinct and nonzero; they may be ints, Fractions,
    or Scalars (e.g. cyclotomic values).
    """
    roots = [
        a if isinstance(a, Scalar) else Scalar.from_rational(a) for a in roots
    ]
    for a in roots:
        if a.is_zero():
            raise ZeroRoot("0 is already a root of p; the alpha_i must be nonzero")
    for idx, a in enumerate(roots):
        for b in roots[idx + 1 :]:
            if a == b:
                raise DuplicateRoot(f"repeated root {a}")
    poly = [Scalar.one()]
    for a in roots:
        nxt = [Scalar.zero()] * (len(poly) + 1)
        for d, coeff in enumerate(poly):
            nxt[d + 1] = nxt[d + 1] + coeff
            nxt[d] = nxt[d] - a * coeff
        poly = nxt
    return CurveSpec(len(roots), {d + 1: c for d, c in enumerate(poly) if not c.is_zero()})


def _divisors_desc(n: int):
    return sorted((d for d in range(1, n + 1) if n % d == 0), reverse=True)


def detect_cyclic(curve: CurveSpec) -> int:
    """Largest divisor k of 2n with coefficient support inside j = 1 (mod k)."""
    if curve.r % 2:
        raise KnDomainError("rotation detection needs deg p odd (r = 2n)")
    support = curve.support()
    for k in _divisors_desc(curve.r):
        if all((j - 1) % k == 0 for j in support):
            return k
    return 1


def check_dihedral(curve: CurveSpec, c: Scalar, sign: int) -> bool:
    """Does a_j = sign * c^(2n-2j+2) * a_(2n+2-j) hold for every j?"""
    if curve.r % 2:
        raise KnDomainError("reflection symmetry needs deg p odd (r = 2n)")
    if not c.is_unit():
        # powers of c below may be negative
        c.invert()  # raises NotInvertible
    two_n = curve.r
    s = Scalar.from_rational(sign)
    for j in range(1, two_n + 2):
        lhs = curve.a(j)
        rhs = s * (c ** (two_n - 2 * j + 2)) * curve.a(two_n + 2 - j)
        if not lhs == rhs:
            return False
    return True


def _rational_nth_root(q: Fraction, n: int):
    """Positive rational n-th root of q > 0, or None."""
    if q <= 0:
        return None

    def iroot(x: int):
        if x == 0:
            return 0
        lo, hi = 0, max(2, int(round(x ** (1.0 / n))) + 2)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**n < x:
                lo = mid + 1
            else:
                hi = mid
        return lo

    rn, rd = iroot(q.numerator), iroot(q.denominator)
    if rn**n == q.numerator and rd**n == q.denominator:
        return Fraction(rn, rd)
    return None


def classify(curve: CurveSpec, c: Scalar | None = None, sign: str | None = None) -> SymmetryReport:
    """Classify Aut of the coordinate ring from exact coefficients.

    With c supplied, the reflection symmetry is tested for the given sign (or
    both).  Without c, the coefficients must be rational constants and c is
    searched among positive rationals with c^(2n) = +-a_1.
    """
    if curve.r % 2:
        raise KnDomainError("classification needs deg p odd (r = 2n)")
    n = curve.r // 2
    k = detect_cyclic(curve)
    signs = {"a": [1], "b": [-1], None: [1, -1]}[sign]

    found = []
    if c is not None:
        for s in signs:
            if check_dihedral(curve, c, s):
                found.append((c, s))
    else:
        if not all(coeff.is_rational() for coeff in curve.coeffs.values()):
            raise InconsistentParams(
                "symbolic coefficients require an explicit reflection parameter c"
            )
        a1 = curve.a(1).as_rational()
        for s in signs:
            root = _rational_nth_root(s * a1, 2 * n)
            if root is None:
                continue
            cand = Scalar.from_rational(root)
            if check_dihedral(curve, cand, s):
                found.append((cand, s))
        if len(found) > 1:
            raise AmbiguousC(
                "several reflection parameters pass: "
                + ", ".join(f"c={fc} (sign {'a' if fs > 0 else 'b'})" for fc, fs in found)
            )

    if not found:
        return SymmetryReport(n, k, 2 * n // k, False, None, None, _group_for(k, n, False, None))
    c_found, s_found = found[0]
    case = "a" if s_found > 0 else "b"
    return SymmetryReport(
        n, k, 2 * n // k, True, case, c_found, _group_for(k, n, True, case)
    )


# ---------------------------------------------------------------------------
# numeric detection from root lists


def _match_multiset(images, roots, tol):
    """Injective matching of images onto roots within tol; None if impossible."""
    used = [False] * len(roots)
    perm = []
    for w in images:
        best, best_d = None, tol
        for idx, a in enumerate(roots):
            if used[idx]:
                continue
            d = abs(w - a)
            if d < best_d:
                best, best_d = idx, d
        if best is None:
            return None
        used[best] = True
        perm.append(best)
    return perm


def detect_from_roots(roots, tol: float = 1e-9) -> SymmetryReport:
    """Numeric classification from the 2n nonzero roots of p(t)/t.

    Finds the largest rotation order k and searches for a reflection parameter
    c^2 among products of root pairs.  Every accepted matching must also hold
    at tol/10; a matching that passes at tol but fails the tighter check raises
    ToleranceConflict.
    """
    roots = [complex(z) for z in roots]
    if len(roots) % 2 or not roots:
        raise KnDomainError("need the 2n roots of p(t)/t")
    n = len(roots) // 2
    for z in roots:
        if abs(z) <= tol:
            raise ZeroRoot("roots must be nonzero")
    for i, z in enumerate(roots):
        for w in roots[i + 1 :]:
            if abs(z - w) <= tol:
                raise DuplicateRoot(f"roots {z} and {w} coincide within tol")

    k_found = 1
    for k in _divisors_desc(2 * n):
        zeta = cmath.exp(2j * cmath.pi / k)
        loose = _match_multiset([zeta * z for z in roots], roots, tol)
        if loose is None:
            continue
        tight = _match_multiset([zeta * z for z in roots], roots, tol / 10)
        if tight is None:
            raise ToleranceConflict(
                f"rotation of order {k} matches at tol but not at tol/10"
            )
        k_found = k
        break

    # reflection search: c^2 must equal alpha_1 * alpha_j for some j.
    # Distinct passing candidates differ by rotations and are all genuine;
    # the one with the smallest argument is reported.
    verdicts = []
    seen = []
    prod = 1.0 + 0j
    for z in roots:
        prod *= z
    for j in range(len(roots)):
        s = roots[0] * roots[j]
        if any(abs(s - t) < tol for t in seen):
            continue
        seen.append(s)
        loose = _match_multiset([s / z for z in roots], roots, tol)
        if loose is None:
            continue
        if _match_multiset([s / z for z in roots], roots, tol / 10) is None:
            raise ToleranceConflict(
                f"pairing with c^2={s} matches at tol but not at tol/10"
            )
        sn = s**n
        scale = max(1.0, abs(prod), abs(sn))
        plus = abs(prod - sn)
        minus = abs(prod + sn)
        if min(plus, minus) > tol * scale:
            raise ToleranceConflict(
                f"pairing c^2={s} exists but a_1 = +-c^(2n) fails at tol"
            )
        verdicts.append((s, "a" if plus <= minus else "b"))

    if not verdicts:
        return SymmetryReport(
            n, k_found, 2 * n // k_found, False, None, None,
            _group_for(k_found, n, False, None),
        )
    verdicts.sort(key=lambda sv: (abs(cmath.phase(sv[0])), abs(sv[0] - 1), sv[0].real, sv[0].imag))
    s, case = verdicts[0]
    return SymmetryReport(
        n, k_found, 2 * n // k_found, True, case, cmath.sqrt(s),
        _group_for(k_found, n, True, case),
    )


# ---------------------------------------------------------------------------
# applying automorphisms


@dataclass(frozen=True)
class AutoParams:
    n: int
    k: int
    c: Scalar | None = None
    sign_case: str | None = None


def apply_automorphism(curve: CurveSpec, which: str, params: AutoParams, x: RingMonomial):
    """Apply phi+/phi-/psi+/psi- to a ring monomial; returns a singleton list.

    phi: coeff * t^i u^e -> xi^(2i+e) (+-1)^e coeff * t^i u^e, xi = zeta_2k.
    psi: coeff * t^i u^e -> (+-c^(n+1))^e i^(e * [case b]) c^(2i) coeff
                              * t^(-i - e(n+1)) u^e.
    """
    if which not in ("phi+", "phi-", "psi+", "psi-"):
        raise InconsistentParams(f"unknown automorphism {which!r}")
    n, k = params.n, params.k
    if curve.r != 2 * n:
        raise InconsistentParams("params.n must match deg p = 2n+1")
    if (2 * n) % k:
        raise InconsistentParams("k must divide 2n")
    sign = 1 if which.endswith("+") else -1
    i, eps = x.exponent, x.parity & 1
    if which.startswith("phi"):
        factor = Scalar.zeta(2 * k, (2 * i + eps) % (2 * k))
        if sign < 0 and eps:
            factor = -factor
        return [RingMonomial(factor * x.coeff, i, eps)]
    c = params.c
    if c is None or params.sign_case not in ("a", "b"):
        raise InconsistentParams("psi needs c and a sign case")
    if not check_dihedral(curve, c, 1 if params.sign_case == "a" else -1):
        raise InconsistentParams("curve does not satisfy the claimed symmetry")
    factor = c ** (2 * i)
    if eps:
        factor = factor * (c ** (n + 1))
        if sign < 0:
            factor = -factor
        if params.sign_case == "b":
            factor = factor * Scalar.zeta(4)
    return [RingMonomial(factor * x.coeff, -i - eps * (n + 1), eps)]


def apply_to_polynomial(curve: CurveSpec, which: str, params: AutoParams, poly: dict) -> dict:
    """Apply an automorphism to sum coeff * t^e (parity 0); {exponent: Scalar}."""
    out = {}
    for e, coeff in poly.items():
        for mono in apply_automorphism(curve, which, params, RingMonomial(coeff, e, 0)):
            cur = out.get(mono.exponent, Scalar.zero()) + mono.coeff
            if cur.is_zero():
                out.pop(mono.exponent, None)
            else:
                out[mono.exponent] = cur
    return out


def homomorphism_certificate(curve: CurveSpec, which: str, params: AutoParams) -> bool:
    """Exact check that the map respects u^2 = p(t): image(u)^2 = image(p)."""
    u = RingMonomial(Scalar.one(), 0, 1)
    (img,) = apply_automorphism(curve, which, params, u)
    # image(u)^2 = coeff^2 * t^(2 exp) * p(t)
    lhs = {}
    for j, aj in curve.coeffs.items():
        e = 2 * img.exponent + j
        cur = lhs.get(e, Scalar.zero()) + img.coeff * img.coeff * aj
        if cur.is_zero():
            lhs.pop(e, None)
        else:
            lhs[e] = cur
    rhs = apply_to_polynomial(curve, which, params, {j: aj for j, aj in curve.coeffs.items()})
    keys = set(lhs) | set(rhs)
    zero = Scalar.zero()
    return all(lhs.get(e, zero) == rhs.get(e, zero) for e in keys)
