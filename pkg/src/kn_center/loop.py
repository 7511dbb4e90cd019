"""The bracket of the universal central extension of g tensor R.

Elements live in (g tensor R) + Omega_R/dR with R the hyperelliptic coordinate
ring; the g-part is a combination of monomials x_b tensor t^i u^eps and the
central part is a CenterVector.  The bracket of two monomials is

    [x (x) t^i u^e1, y (x) t^j u^e2]
        = [x, y] (x) t^(i+j) u^(e1+e2 mod 2) p(t)^(e1 and e2)
          + kappa(x, y) * [t^i u^e1 d(t^j u^e2)]

with kappa the invariant form carried by the SimpleLieData, extended
bilinearly; central elements bracket to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .differentials import CenterVector, reduce_form
from .recursions import CurveSpec, PTable, QTable
from .scalar import Scalar, scalar_to_str


@dataclass(frozen=True)
class SimpleLieData:
    """Structure constants and invariant form of a finite-dimensional simple
    Lie algebra: [x_i, x_j] = sum_k c[i,j][k] x_k, form[i][j] = kappa(x_i, x_j)."""

    labels: tuple
    structure: dict  # (i, j) -> {k: Fraction}
    form: tuple      # tuple of tuples of Fraction

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.structure.get((i, j), {})

    def kappa(self, i: int, j: int) -> Fraction:
        return self.form[i][j]

    def validate(self) -> None:
        """Check antisymmetry, the Jacobi identity, and invariance of the form
        on all basis triples."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                cij = self.bracket_basis(i, j)
                cji = self.bracket_basis(j, i)
                for k in set(cij) | set(cji):
                    if cij.get(k, 0) != -cji.get(k, 0):
                        raise ValueError(f"bracket not antisymmetric at ({i},{j},{k})")
                if self.form[i][j] != self.form[j][i]:
                    raise ValueError(f"form not symmetric at ({i},{j})")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    acc = {}
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, cm in self.bracket_basis(a, b).items():
                            for l, cl in self.bracket_basis(m, c).items():
                                acc[l] = acc.get(l, Fraction(0)) + cm * cl
                    if any(v != 0 for v in acc.values()):
                        raise ValueError(f"Jacobi identity fails on triple ({i},{j},{k})")
                    lhs = sum(
                        cm * self.form[m][k] for m, cm in self.bracket_basis(i, j).items()
                    )
                    rhs = sum(
                        cm * self.form[i][m] for m, cm in self.bracket_basis(j, k).items()
                    )
                    if lhs != rhs:
                        raise ValueError(f"form not invariant on triple ({i},{j},{k})")


def make_sl2() -> SimpleLieData:
    """sl2 with basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h, and the
    Killing form kappa(h,h) = 8, kappa(e,f) = 4."""
    E, H, F = 0, 1, 2
    two = Fraction(2)
    structure = {
        (H, E): {E: two},
        (E, H): {E: -two},
        (H, F): {F: -two},
        (F, H): {F: two},
        (E, F): {H: Fraction(1)},
        (F, E): {H: Fraction(-1)},
    }
    form = (
        (Fraction(0), Fraction(0), Fraction(4)),
        (Fraction(0), Fraction(8), Fraction(0)),
        (Fraction(4), Fraction(0), Fraction(0)),
    )
    return SimpleLieData(("e", "h", "f"), structure, form)


class LoopElement:
    """g-part: {(basis index, exponent, parity): Scalar}; central part: CenterVector."""

    __slots__ = ("curve", "gterms", "center")

    def __init__(self, curve: CurveSpec, gterms=None, center=None):
        self.curve = curve
        self.gterms = {k: v for k, v in (gterms or {}).items() if not v.is_zero()}
        self.center = center if center is not None else CenterVector(curve)

    @staticmethod
    def monomial(curve, basis_index: int, exponent: int, parity: int, coeff=1) -> "LoopElement":
        c = coeff if isinstance(coeff, Scalar) else Scalar.from_rational(coeff)
        return LoopElement(curve, {(basis_index, exponent, parity & 1): c})

    @staticmethod
    def central(curve, vector: CenterVector) -> "LoopElement":
        return LoopElement(curve, {}, vector)

    def __add__(self, other: "LoopElement") -> "LoopElement":
        terms = dict(self.gterms)
        for key, c in other.gterms.items():
            terms[key] = terms[key] + c if key in terms else c
        return LoopElement(self.curve, terms, self.center + other.center)

    def __neg__(self) -> "LoopElement":
        return LoopElement(
            self.curve, {k: -v for k, v in self.gterms.items()}, -self.center
        )

    def __sub__(self, other: "LoopElement") -> "LoopElement":
        return self + (-other)

    def scale(self, factor) -> "LoopElement":
        f = factor if isinstance(factor, Scalar) else Scalar.from_rational(factor)
        return LoopElement(
            self.curve,
            {k: f * v for k, v in self.gterms.items()},
            self.center.scale(f),
        )

    def is_zero(self) -> bool:
        return not self.gterms and self.center.is_zero()

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        keys = set(self.gterms) | set(other.gterms)
        zero = Scalar.zero()
        return self.center == other.center and all(
            self.gterms.get(k, zero) == other.gterms.get(k, zero) for k in keys
        )

    __hash__ = None

    def to_json(self, lie: SimpleLieData) -> dict:
        gpart = {}
        for (b, i, eps), c in sorted(self.gterms.items()):
            key = f"{lie.labels[b]}@{i}" + ("*u" if eps else "")
            gpart[key] = scalar_to_str(c)
        return {"g": gpart, "center": self.center.to_json()}

    def __repr__(self):
        parts = [f"({c})*[{b}]@{i}{'u' if e else ''}" for (b, i, e), c in sorted(self.gterms.items())]
        if not self.center.is_zero():
            parts.append(repr(self.center))
        return "LoopElement[" + (" + ".join(parts) or "0") + "]"


def bracket(
    lie: SimpleLieData,
    x: LoopElement,
    y: LoopElement,
    ptab: PTable,
    qtab: QTable,
) -> LoopElement:
    """Bilinear extension of the monomial bracket; central parts are central."""
    curve = x.curve
    out_g = {}
    out_center = CenterVector(curve)

    def add_g(key, scal):
        if key in out_g:
            s = out_g[key] + scal
            if s.is_zero():
                del out_g[key]
            else:
                out_g[key] = s
        elif not scal.is_zero():
            out_g[key] = scal

    for (bx, i, e1), cx in x.gterms.items():
        for (by, j, e2), cy in y.gterms.items():
            coeff = cx * cy
            lie_part = lie.bracket_basis(bx, by)
            if lie_part:
                parity = (e1 + e2) & 1
                if e1 and e2:
                    monomials = [(i + j + m, am) for m, am in curve.coeffs.items()]
                else:
                    monomials = [(i + j, None)]
                for exp, am in monomials:
                    for k, ck in lie_part.items():
                        scal = coeff * Scalar.from_rational(ck)
                        if am is not None:
                            scal = scal * am
                        add_g((k, exp, parity), scal)
            kap = lie.kappa(bx, by)
            if kap:
                psi = reduce_form(curve, i, e1, j, e2, ptab, qtab)
                out_center = out_center + psi.scale(coeff * Scalar.from_rational(kap))
    return LoopElement(curve, out_g, out_center)


def jacobi_defect(
    lie: SimpleLieData,
    x: LoopElement,
    y: LoopElement,
    z: LoopElement,
    ptab: PTable,
    qtab: QTable,
) -> LoopElement:
    """[[x,y],z] + [[y,z],x] + [[z,x],y]; identically zero for a Lie bracket."""
    out = bracket(lie, bracket(lie, x, y, ptab, qtab), z, ptab, qtab)
    out = out + bracket(lie, bracket(lie, y, z, ptab, qtab), x, ptab, qtab)
    out = out + bracket(lie, bracket(lie, z, x, ptab, qtab), y, ptab, qtab)
    return out
