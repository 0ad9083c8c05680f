"""Univariate polynomials over Z/nZ.

Coefficients are stored in ascending degree order and kept canonical:
every coefficient lies in ``[0, n)`` and there are no trailing zeros, so
the zero polynomial is the empty tuple and ``degree`` is ``None``.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import LimitExceeded, ModulusMismatch, NonPositiveModulus, NotMonic

DEFAULT_SCAN_LIMIT = 10**6


def strip_trailing_zeros(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def convolve(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Schoolbook product of two coefficient lists, exact over Z."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def horner(coeffs: Sequence[int], a: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * a + c
    return acc


def format_terms(coeffs: Sequence[int], var: str = "t") -> str:
    """Render ascending coefficients in descending caret notation, e.g. ``t^2 + 3t + 1``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if c == 1 else f"{c}{mono}"
        if not terms:
            terms.append(body if sign == "+" else "-" + body)
        else:
            terms.append(f"{sign} {body}")
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Polynomial:
    """Element of (Z/nZ)[t]."""

    coeffs: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        n = int(self.modulus)
        if n <= 0:
            raise NonPositiveModulus(n)
        object.__setattr__(self, "modulus", n)
        object.__setattr__(self, "coeffs", strip_trailing_zeros([int(c) % n for c in self.coeffs]))

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls((), n)

    @classmethod
    def constant(cls, c: int, n: int) -> "Polynomial":
        return cls((c,), n)

    @classmethod
    def linear(cls, root: int, n: int) -> "Polynomial":
        """The monic polynomial ``t - root``."""
        return cls((-root, 1), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Parse comma-separated ascending coefficients: ``"1,1,1"`` is ``t^2 + t + 1``."""
        text = text.strip()
        if not text:
            return cls.zero(n)
        return cls(tuple(int(tok) for tok in text.split(",")), n)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1 % self.modulus

    def to_csv(self) -> str:
        return ",".join(map(str, self.coeffs))

    def __str__(self):
        return format_terms(self.coeffs)

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)

    def __add__(self, other):
        return poly_add(self, other)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs), self.modulus)

    def __sub__(self, other):
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coeffs), self.modulus)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return monic_divmod(self, other)


def _same_ring(f: Polynomial, g: Polynomial) -> int:
    if f.modulus != g.modulus:
        raise ModulusMismatch(f.modulus, g.modulus)
    return f.modulus


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    n = _same_ring(f, g)
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    return Polynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)), n)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    n = _same_ring(f, g)
    return Polynomial(tuple(convolve(f.coeffs, g.coeffs)), n)


def poly_eval(f: Polynomial, a: int) -> int:
    """Horner evaluation at ``a``, result in ``[0, n)``."""
    n = f.modulus
    a %= n
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * a + c) % n
    return acc


def expand_from_roots(roots: Iterable[int], n: int) -> Polynomial:
    """Monic ``prod(t - r)`` over Z/nZ, one factor per root (multiplicity kept)."""
    out = Polynomial.constant(1, n)
    for r in roots:
        out = poly_mul(out, Polynomial.linear(r, n))
    return out


def monic_divmod(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Long division ``f = q*g + r`` by a monic ``g``, with ``deg r < deg g``.

    Monic divisors never need a leading-coefficient inverse, so this works
    over any Z/nZ, composite or not.

    Raises:
        NotMonic: if ``g`` is zero or its leading coefficient is not 1.
        ModulusMismatch: if ``f`` and ``g`` live over different rings.
    """
    n = _same_ring(f, g)
    if not g.is_monic():
        raise NotMonic(f"divisor {g} is not monic over Z/{n}")
    dg = len(g.coeffs) - 1
    rem = list(f.coeffs)
    if len(rem) <= dg:
        return Polynomial.zero(n), f
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] % n
        if c == 0:
            continue
        quot[k - dg] = c
        for j, gc in enumerate(g.coeffs):
            rem[k - dg + j] = (rem[k - dg + j] - c * gc) % n
    return Polynomial(tuple(quot), n), Polynomial(tuple(rem[:dg]), n)


def roots_mod_n(f: Polynomial, n: Optional[int] = None, *,
                limit: int = DEFAULT_SCAN_LIMIT) -> Tuple[int, ...]:
    """All ``a`` in ``[0, n)`` with ``f(a) = 0``, ascending, by exhaustive scan.

    ``n`` defaults to ``f.modulus``; if given it must agree with it.

    Raises:
        LimitExceeded: if ``n > limit``.
    """
    if n is None:
        n = f.modulus
    elif n != f.modulus:
        raise ModulusMismatch(f.modulus, n)
    if n > limit:
        raise LimitExceeded(n, limit)
    return tuple(a for a in range(n) if poly_eval(f, a) == 0)
