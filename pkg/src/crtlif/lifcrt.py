"""Classical integer CRT through an integer interpolation polynomial.

Nodes and moduli coincide: the polynomial

    p(t) = sum_i b_i r_i prod_{j != i} (t - m_j)

satisfies ``p(m_k) = b_k (mod m_k)``, and since ``p(m_k) = p(0) (mod m_k)``
the constant term ``p(0)`` solves the system.
"""
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence, Tuple

from .crt import CongruenceSystem, CrtSolution, _require_coprime
from .poly import convolve, format_terms, horner, strip_trailing_zeros
from .ring import mod_inverse


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial over Z, ascending coefficients, never reduced."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", strip_trailing_zeros([int(c) for c in self.coeffs]))

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __call__(self, a: int) -> int:
        return horner(self.coeffs, a)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        return IntPolynomial(tuple(convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __str__(self):
        return format_terms(self.coeffs)


def interpolation_multipliers(moduli: Sequence[int]) -> Tuple[int, ...]:
    """``r_i`` in ``[0, m_i)`` with ``r_i * prod_{j != i} (m_i - m_j) = 1 (mod m_i)``.

    Coprimality makes each ``m_i - m_j = -m_j`` a unit mod ``m_i``.
    """
    moduli = tuple(moduli)
    _require_coprime(moduli)
    rs = []
    for i, mi in enumerate(moduli):
        d = prod(mi - mj for j, mj in enumerate(moduli) if j != i)
        rs.append(mod_inverse(d, mi).value)
    return tuple(rs)


def build_crt_polynomial(system: CongruenceSystem) -> IntPolynomial:
    moduli = system.moduli
    rs = interpolation_multipliers(moduli)
    p = IntPolynomial()
    for i, (b, r) in enumerate(zip(system.residues, rs)):
        term = IntPolynomial((b * r,))
        for j, mj in enumerate(moduli):
            if j != i:
                term = term * IntPolynomial((-mj, 1))
        p = p + term
    return p


def crt_via_interpolation(system: CongruenceSystem) -> CrtSolution:
    """Solve a coprime system as ``p(0) mod M`` for the integer interpolation polynomial.

    >>> crt_via_interpolation(CongruenceSystem(((2, 3), (3, 5), (2, 7))))
    CrtSolution(x=23, modulus=105)
    """
    p = build_crt_polynomial(system)
    M = prod(system.moduli)
    return CrtSolution(p(0) % M, M)
