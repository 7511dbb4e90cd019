"""Reduction of differentials to the basis of Kaehler differentials mod exact forms.

The space Omega_R/dR for R = C[t, t^-1, u : u^2 = p(t)] has basis
omega_0 = [t^-1 dt], omega_k = [t^-k u dt] (1 <= k <= r).  This module reduces
the four monomial shapes t^i u^e1 d(t^j u^e2) to that basis, using the P/Q
tables for the odd part, and provides an independent brute-force oracle that
row-reduces the lattice spanned by exact forms and the module relation
2u du = p'(t) dt over an explicit monomial window.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import WindowTooSmall
from .recursions import CurveSpec, PTable, QTable
from .scalar import Scalar, scalar_to_str


class CenterVector:
    """Element of Omega_R/dR in coordinates (omega_0, omega_1, ..., omega_r)."""

    __slots__ = ("curve", "coords")

    def __init__(self, curve: CurveSpec, coords=None):
        self.curve = curve
        if coords is None:
            coords = [Scalar.zero()] * (curve.r + 1)
        coords = list(coords)
        if len(coords) != curve.r + 1:
            raise ValueError(f"need {curve.r + 1} coordinates")
        self.coords = coords

    @staticmethod
    def basis(curve: CurveSpec, k: int) -> "CenterVector":
        v = CenterVector(curve)
        v.coords[k] = Scalar.one()
        return v

    def __add__(self, other: "CenterVector") -> "CenterVector":
        return CenterVector(self.curve, [a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "CenterVector":
        return CenterVector(self.curve, [-a for a in self.coords])

    def __sub__(self, other: "CenterVector") -> "CenterVector":
        return self + (-other)

    def scale(self, factor) -> "CenterVector":
        f = factor if isinstance(factor, Scalar) else Scalar.from_rational(factor)
        return CenterVector(self.curve, [f * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, CenterVector):
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def to_json(self) -> dict:
        return {f"omega{k}": scalar_to_str(c) for k, c in enumerate(self.coords)}

    def __repr__(self):
        body = " + ".join(
            f"({c})*omega{k}" for k, c in enumerate(self.coords) if not c.is_zero()
        )
        return f"CenterVector[{body or '0'}]"


def reduce_even(curve: CurveSpec, i: int, j: int) -> CenterVector:
    """Class of t^i d(t^j) = j delta_{i+j,0} omega_0."""
    v = CenterVector(curve)
    if j != 0 and i + j == 0:
        v.coords[0] = Scalar.from_rational(j)
    return v


def reduce_uu(curve: CurveSpec, i: int, j: int) -> CenterVector:
    """Class of t^i u d(t^j u) = sum_k (j + k/2) a_k delta_{i+j,-k} omega_0."""
    v = CenterVector(curve)
    k = -(i + j)
    if 1 <= k <= curve.r + 1:
        v.coords[0] = Scalar.from_rational(Fraction(2 * j + k, 2)) * curve.a(k)
    return v


def reduce_udt(curve: CurveSpec, m: int, ptab: PTable, qtab: QTable) -> CenterVector:
    """Class of t^m u dt: the P row for m >= -r, the Q row below."""
    from .errors import TableTooSmall

    v = CenterVector(curve)
    if m >= -curve.r:
        if ptab is None:
            raise TableTooSmall("no P table supplied")
        for k in range(1, curve.r + 1):
            v.coords[k] = ptab.value(m, -k)
    else:
        if qtab is None:
            raise TableTooSmall("no Q table supplied")
        for k in range(1, curve.r + 1):
            v.coords[k] = qtab.value(-m, -k)
    return v


def reduce_u(curve: CurveSpec, i: int, j: int, ptab: PTable, qtab: QTable) -> CenterVector:
    """Class of t^i u d(t^j) = j * [t^(i+j-1) u dt]."""
    if j == 0:
        return CenterVector(curve)
    return reduce_udt(curve, i + j - 1, ptab, qtab).scale(j)


def reduce_form(
    curve: CurveSpec, i: int, eps1: int, j: int, eps2: int, ptab: PTable, qtab: QTable
) -> CenterVector:
    """Class of t^i u^eps1 d(t^j u^eps2), all four parity combinations.

    The mixed case (0, 1) uses d(t^(i+j) u) being exact:
    t^i d(t^j u) = -i * [t^(i+j-1) u dt].
    """
    if (eps1, eps2) == (0, 0):
        return reduce_even(curve, i, j)
    if (eps1, eps2) == (1, 1):
        return reduce_uu(curve, i, j)
    if (eps1, eps2) == (1, 0):
        return reduce_u(curve, i, j, ptab, qtab)
    if i == 0:
        return CenterVector(curve)
    return reduce_udt(curve, i + j - 1, ptab, qtab).scale(-i)


# ---------------------------------------------------------------------------
# brute-force oracle
#
# Coordinates of the ambient span: ('x', a) = t^a dt, ('y', a) = t^a u dt,
# ('z', a) = t^a du, ('w', a) = t^a u du.  The quotient is by
#   - exact forms d(t^j) = j t^(j-1) dt and d(t^j u) = j t^(j-1) u dt + t^j du,
#   - the module relations t^a (2u du - p' dt) = 0 and
#     t^a u (2u du - p' dt) = 2 t^a p du - t^a p' u dt = 0,
# which present Omega_R/dR without reference to the recursion tables.


def _row_add(row, coord, scal):
    if scal.is_zero():
        return
    if coord in row:
        s = row[coord] + scal
        if s.is_zero():
            del row[coord]
        else:
            row[coord] = s
    else:
        row[coord] = scal


def _row_axpy(target, factor, row):
    for coord, scal in row.items():
        _row_add(target, coord, factor * scal)


def _reduce_by_pivots(row, pivots):
    changed = True
    while changed:
        changed = False
        for coord in list(row):
            if coord in pivots:
                factor = row.pop(coord)
                _row_axpy(row, factor, pivots[coord])
                changed = True
    return row


def _oracle_rows(curve: CurveSpec, window: int):
    rows = []
    support = [(j, curve.a(j)) for j in range(1, curve.r + 2) if not curve.a(j).is_zero()]
    for j in range(-window, window + 1):
        if j != 0:
            rows.append({("x", j - 1): Scalar.from_rational(j)})
        row = {("z", j): Scalar.one()}
        if j != 0:
            _row_add(row, ("y", j - 1), Scalar.from_rational(j))
        rows.append(row)
    two = Scalar.from_rational(2)
    for a in range(-window, window + 1):
        row0 = {("w", a): two}
        row1 = {}
        for j, aj in support:
            _row_add(row0, ("x", a + j - 1), Scalar.from_rational(-j) * aj)
            _row_add(row1, ("z", a + j), two * aj)
            _row_add(row1, ("y", a + j - 1), Scalar.from_rational(-j) * aj)
        rows.append(row0)
        rows.append(row1)
    return rows


def _pick_pivot(row, basis):
    candidates = [c for c in row if c not in basis]
    if not candidates:
        return None
    for kind in ("w", "z", "x"):
        found = [c for c in candidates if c[0] == kind]
        if found:
            found.sort(key=lambda c: (abs(c[1]), c[1]), reverse=True)
            for c in found:
                if c in row and row[c].is_unit():
                    return c
    ys = sorted(c[1] for c in candidates if c[0] == "y")
    if not ys:
        return None
    ordered = [a for a in reversed(ys) if a >= 0] + [a for a in ys if a < 0]
    for a in ordered:
        if row[("y", a)].is_unit():
            return ("y", a)
    return None


def oracle_reduce(curve: CurveSpec, m: int, eps: int, window: int) -> CenterVector:
    """Express [t^m u^eps dt] in the basis by exact Gaussian elimination over
    the window |j| <= window, independently of the recursion tables.

    Raises WindowTooSmall if the window cannot connect the target to the basis.
    """
    basis = {("x", -1)} | {("y", -k) for k in range(1, curve.r + 1)}
    pivots = {}
    queue = _oracle_rows(curve, window)
    progress = True
    while progress:
        progress = False
        deferred = []
        for row in queue:
            row = _reduce_by_pivots(dict(row), pivots)
            if not row:
                continue
            coord = _pick_pivot(row, basis)
            if coord is None:
                deferred.append(row)
                continue
            inv = row.pop(coord).invert()
            norm = {c: -inv * s for c, s in row.items()}
            for prow in pivots.values():
                if coord in prow:
                    factor = prow.pop(coord)
                    _row_axpy(prow, factor, norm)
            pivots[coord] = norm
            progress = True
        queue = deferred

    target = {("y" if eps else "x", m): Scalar.one()}
    target = _reduce_by_pivots(target, pivots)
    if any(c not in basis for c in target):
        missing = sorted(c for c in target if c not in basis)
        raise WindowTooSmall(f"window {window} leaves unresolved coordinates {missing}")
    v = CenterVector(curve)
    for (kind, a), scal in target.items():
        v.coords[0 if kind == "x" else -a] = scal
    return v
