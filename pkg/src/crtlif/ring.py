"""Integer and Z/mZ substrate: canonical residues, extended Euclid, inverses.

Python ints are already arbitrary precision, so "Integer" is just ``int``.
"""
from typing import NamedTuple

from .errors import NonPositiveModulus, NotInvertible


class Residue(NamedTuple):
    """Canonical element of Z/mZ, ``0 <= value < modulus``."""

    value: int
    modulus: int

    def __int__(self):
        return self.value


class ExtGcdResult(NamedTuple):
    g: int
    s: int
    t: int


def _check_modulus(m):
    if m <= 0:
        raise NonPositiveModulus(m)


def residue_normalize(value: int, modulus: int) -> Residue:
    """Return the least non-negative representative of ``value`` mod ``modulus``.

    >>> residue_normalize(-5, 7)
    Residue(value=2, modulus=7)
    """
    _check_modulus(modulus)
    return Residue(value % modulus, modulus)


def extended_gcd(a: int, b: int) -> ExtGcdResult:
    """Iterative extended Euclid.

    Returns ``(g, s, t)`` with ``g = gcd(a, b) >= 0`` and ``g == s*a + t*b``.
    ``extended_gcd(0, 0)`` is ``(0, 0, 0)``.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        return ExtGcdResult(0, 0, 0)
    return ExtGcdResult(old_r, old_s, old_t)


def mod_inverse(a: int, m: int) -> Residue:
    """Inverse of ``a`` in Z/mZ.

    Raises:
        NonPositiveModulus: if ``m <= 0``.
        NotInvertible: if ``gcd(a, m) != 1``; the exception carries the gcd.
    """
    _check_modulus(m)
    a %= m
    g, s, _ = extended_gcd(a, m)
    if m == 1:
        # zero ring: 0 is both 0 and 1
        return Residue(0, 1)
    if g != 1:
        raise NotInvertible(a, m, g)
    return Residue(s % m, m)


def is_unit(a: int, m: int) -> bool:
    """True iff ``a`` is invertible mod ``m``. Every element of Z/1Z is a unit."""
    _check_modulus(m)
    if m == 1:
        return True
    return extended_gcd(a % m, m).g == 1
