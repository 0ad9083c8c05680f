"""Lagrange interpolation over Z/nZ with unit node differences.

Two routes produce the same canonical interpolant (degree < number of
points):

* :func:`lagrange_interpolate` sums ``y_i * L_i`` with the explicit basis
  ``L_i = prod_{j != i} (x_i - x_j)^{-1} (t - x_j)``.
* :func:`interpolate_via_crt` treats the nodes as coprime principal ideals
  ``(t - x_i)`` of (Z/nZ)[t], builds their idempotents from pairwise
  Bezout identities, and reduces ``sum(y_i * u_i)`` modulo the monic
  product ``prod (t - x_j)``.
"""
from dataclasses import dataclass
from math import gcd
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .errors import EmptyInput, NonPositiveModulus, NotUnitDifference
from .poly import Polynomial, expand_from_roots, monic_divmod, poly_add, poly_mul
from .ring import mod_inverse


class UnitViolation(NamedTuple):
    i: int
    j: int
    gcd: int


def check_unit_differences(xs: Sequence[int], n: int) -> Optional[UnitViolation]:
    """``None`` if every ``x_i - x_j`` (i < j) is a unit mod ``n``, else the first bad pair.

    A repeated node gives ``gcd(0, n) = n``.
    """
    if n <= 0:
        raise NonPositiveModulus(n)
    if n == 1:
        return None
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            g = gcd(xs[j] - xs[i], n)
            if g != 1:
                return UnitViolation(i, j, g)
    return None


def _require_units(xs, n):
    bad = check_unit_differences(xs, n)
    if bad is not None:
        raise NotUnitDifference(bad.i, bad.j, bad.gcd, n, nodes=[x % n for x in xs])


@dataclass(frozen=True)
class PointSet:
    """Interpolation data ``(x_k, y_k)`` over Z/nZ.

    Coordinates are normalized into ``[0, modulus)``. Construction fails with
    :class:`NotUnitDifference` if two nodes differ by a non-unit.
    """

    modulus: int
    points: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        n = int(self.modulus)
        if n <= 0:
            raise NonPositiveModulus(n)
        pts = tuple((int(x) % n, int(y) % n) for x, y in self.points)
        object.__setattr__(self, "modulus", n)
        object.__setattr__(self, "points", pts)
        _require_units(self.xs, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "PointSet":
        """Parse ``"x:y"`` pairs separated by commas, e.g. ``"1:1,2:4,3:2"``."""
        pts = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            x, sep, y = tok.partition(":")
            if not sep:
                raise ValueError(f"point {tok!r} is not of the form x:y")
            pts.append((int(x), int(y)))
        return cls(n, tuple(pts))

    @property
    def xs(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.points)

    @property
    def ys(self) -> Tuple[int, ...]:
        return tuple(y for _, y in self.points)

    def __len__(self):
        return len(self.points)


def lagrange_basis(xs: Sequence[int], n: int) -> List[Polynomial]:
    """Basis polynomials ``L_i`` with ``L_i(x_j) = [i == j]``.

    Raises:
        NotUnitDifference: if some node difference is not a unit.
    """
    xs = [x % n for x in xs]
    _require_units(xs, n)
    basis = []
    for i, xi in enumerate(xs):
        others = xs[:i] + xs[i + 1:]
        scale = 1
        for xj in others:
            scale = scale * mod_inverse(xi - xj, n).value % n
        basis.append(expand_from_roots(others, n) * scale)
    return basis


def lagrange_interpolate(pts: PointSet) -> Polynomial:
    """Interpolant of degree ``< len(pts)`` through every point.

    >>> str(lagrange_interpolate(PointSet(7, ((1, 1), (2, 4), (3, 2)))))
    't^2'
    """
    if not pts.points:
        raise EmptyInput("cannot interpolate through zero points")
    n = pts.modulus
    out = Polynomial.zero(n)
    for y, L in zip(pts.ys, lagrange_basis(pts.xs, n)):
        out = poly_add(out, L * y)
    return out


def ideal_bezout_pair(xi: int, xj: int, n: int) -> Tuple[Polynomial, Polynomial]:
    """Return ``(a, b)`` with ``a + b = 1``, ``a`` in ``(t - xi)``, ``b`` in ``(t - xj)``.

    ``a = (xj - xi)^{-1} (t - xi)`` and ``b = (xi - xj)^{-1} (t - xj)``.
    """
    a = Polynomial.linear(xi, n) * mod_inverse(xj - xi, n).value
    b = Polynomial.linear(xj, n) * mod_inverse(xi - xj, n).value
    return a, b


def ideal_idempotents(xs: Sequence[int], n: int) -> List[Polynomial]:
    """Idempotents ``u_i`` for the coprime ideals ``(t - x_i)`` of (Z/nZ)[t].

    Expanding ``prod_{j != i} (a_ij + b_ij) = 1`` leaves ``u_i = prod_j b_ij``
    as the only term outside ``(t - x_i)``; ``u_i`` lies in every other
    ideal and ``1 - u_i`` lies in ``(t - x_i)``.
    """
    xs = [x % n for x in xs]
    _require_units(xs, n)
    us = []
    for i, xi in enumerate(xs):
        u = Polynomial.constant(1, n)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            a, b = ideal_bezout_pair(xi, xj, n)
            assert poly_add(a, b) == Polynomial.constant(1, n)
            u = poly_mul(u, b)
        us.append(u)
    return us


def interpolate_via_crt(pts: PointSet) -> Polynomial:
    """Interpolant obtained by solving ``p = y_i (mod t - x_i)`` in (Z/nZ)[t].

    The combination ``sum(y_i * u_i)`` is reduced modulo the monic modulus
    ``prod (t - x_j)``, which picks the degree ``< len(pts)`` representative.
    """
    if not pts.points:
        raise EmptyInput("cannot interpolate through zero points")
    n = pts.modulus
    if n == 1:
        return Polynomial.zero(1)
    combo = Polynomial.zero(n)
    for y, u in zip(pts.ys, ideal_idempotents(pts.xs, n)):
        combo = poly_add(combo, u * y)
    _, rem = monic_divmod(combo, expand_from_roots(pts.xs, n))
    return rem
