"""Simultaneous congruences over the integers.

The coprime solver builds the idempotent basis from Bezout splits
``v_i + u_i = 1`` with ``v_i`` in ``m_i Z`` and ``u_i`` in the ideal
generated by the product of the other moduli, then sets
``x = sum(y_i * u_i)``.
"""
from dataclasses import dataclass
from math import gcd, prod
from typing import NamedTuple, Optional, Sequence, Tuple

from .errors import Inconsistent, NonPositiveModulus, NotCoprime
from .ring import mod_inverse


@dataclass(frozen=True)
class CongruenceSystem:
    """Ordered congruences ``x = residue (mod modulus)``.

    Residues are normalized into ``[0, modulus)`` on construction. An empty
    system is allowed and means "no constraint".
    """

    items: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        items = []
        for residue, modulus in self.items:
            residue, modulus = int(residue), int(modulus)
            if modulus <= 0:
                raise NonPositiveModulus(modulus)
            items.append((residue % modulus, modulus))
        object.__setattr__(self, "items", tuple(items))

    @classmethod
    def from_lists(cls, residues: Sequence[int], moduli: Sequence[int]) -> "CongruenceSystem":
        if len(residues) != len(moduli):
            raise ValueError(
                f"got {len(residues)} residues but {len(moduli)} moduli")
        return cls(tuple(zip(residues, moduli)))

    @property
    def residues(self) -> Tuple[int, ...]:
        return tuple(r for r, _ in self.items)

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


class CrtSolution(NamedTuple):
    """Solution class ``x + modulus*Z`` with ``0 <= x < modulus``."""

    x: int
    modulus: int


class IdempotentBasis(NamedTuple):
    u: Tuple[int, ...]
    M: int


class CoprimeViolation(NamedTuple):
    i: int
    j: int
    gcd: int


def _check_moduli(moduli):
    for m in moduli:
        if m <= 0:
            raise NonPositiveModulus(m)


def pairwise_coprime(moduli: Sequence[int]) -> Optional[CoprimeViolation]:
    """Return ``None`` if the moduli are pairwise coprime, else the first bad pair.

    Pairs are scanned in lexicographic ``(i, j)`` order, ``i < j``.
    """
    _check_moduli(moduli)
    n = len(moduli)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(moduli[i], moduli[j])
            if g != 1:
                return CoprimeViolation(i, j, g)
    return None


def _require_coprime(moduli):
    bad = pairwise_coprime(moduli)
    if bad is not None:
        raise NotCoprime(bad.i, bad.j, bad.gcd, moduli=tuple(moduli))


def bezout_split(i: int, moduli: Sequence[int]) -> Tuple[int, int]:
    """Split ``1 = v + u`` with ``m_i | v`` and ``prod_{j != i} m_j | u``.

    ``u`` is ``P * (P^{-1} mod m_i)`` where ``P`` is the product of the other
    moduli; the identity ``v + u == 1`` is exact over the integers.

    Raises:
        NotCoprime: if the moduli are not pairwise coprime.
        IndexError: if ``i`` is out of range.
    """
    moduli = tuple(moduli)
    if not 0 <= i < len(moduli):
        raise IndexError(f"index {i} out of range for {len(moduli)} moduli")
    _require_coprime(moduli)
    m_i = moduli[i]
    others = prod(moduli[:i] + moduli[i + 1:])
    # any multiplier works when m_i == 1; pick 1 so a singleton gives (0, 1)
    k = 1 if m_i == 1 else mod_inverse(others, m_i).value
    u = others * k
    return 1 - u, u


def idempotent_basis(moduli: Sequence[int]) -> IdempotentBasis:
    """Integers ``u_i`` with ``u_i = 1 (mod m_i)`` and ``u_i = 0 (mod m_j)``, j != i.

    Each ``u_i`` is reduced into ``[0, M)`` where ``M`` is the product.
    """
    moduli = tuple(moduli)
    _require_coprime(moduli)
    M = prod(moduli)
    u = tuple(bezout_split(i, moduli)[1] % M for i in range(len(moduli)))
    return IdempotentBasis(u, M)


def solve_crt(system: CongruenceSystem) -> CrtSolution:
    """Solve a pairwise-coprime system as ``x = sum(y_i * u_i) mod M``.

    >>> solve_crt(CongruenceSystem(((2, 3), (3, 5), (2, 7))))
    CrtSolution(x=23, modulus=105)
    """
    moduli = system.moduli
    if not moduli:
        return CrtSolution(0, 1)
    basis = idempotent_basis(moduli)
    x = sum(y * u for y, u in zip(system.residues, basis.u))
    return CrtSolution(x % basis.M, basis.M)


def solve_crt_general(system: CongruenceSystem) -> CrtSolution:
    """Solve a system whose moduli need not be coprime; result is modulo the lcm.

    The system is solvable iff every pair is consistent, i.e.
    ``gcd(m_i, m_j) | b_i - b_j``.

    Raises:
        Inconsistent: for the first conflicting pair in index order.
    """
    residues, moduli = system.residues, system.moduli
    n = len(moduli)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(moduli[i], moduli[j])
            if (residues[j] - residues[i]) % g:
                raise Inconsistent(i, j, g, moduli=moduli, residues=residues)

    x, L = 0, 1
    for b, m in system:
        g = gcd(L, m)
        # x + L*k = b (mod m)  <=>  (L/g) k = (b - x)/g  (mod m/g)
        step = m // g
        k = ((b - x) // g) * mod_inverse(L // g, step).value % step
        x += L * k
        L *= step
        x %= L
    return CrtSolution(x, L)


def verify_solution(system: CongruenceSystem, x: int) -> bool:
    return all((x - b) % m == 0 for b, m in system)
