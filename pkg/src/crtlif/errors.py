"""Exception types shared across the package.

Every precondition failure carries its witness (offending indices, gcd)
as attributes so callers and the CLI can report it without re-parsing
the message.
"""


class CrtLifError(ArithmeticError):
    """Base class for all errors raised by crtlif."""


class NonPositiveModulus(CrtLifError, ValueError):
    def __init__(self, modulus):
        self.modulus = modulus
        super().__init__(f"modulus must be >= 1, got {modulus}")


class NotInvertible(CrtLifError):
    """``a`` has no inverse modulo ``m``; ``gcd`` is the obstruction."""

    def __init__(self, a, modulus, gcd):
        self.a = a
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"{a} is not invertible mod {modulus}: gcd({a}, {modulus}) = {gcd}")


class _PairError(CrtLifError):
    def __init__(self, i, j, gcd, message):
        self.i = i
        self.j = j
        self.gcd = gcd
        super().__init__(message)

    @property
    def pair(self):
        return (self.i, self.j)


class NotCoprime(_PairError):
    """Two moduli share a nontrivial factor."""

    def __init__(self, i, j, gcd, moduli=None):
        self.moduli = None if moduli is None else (moduli[i], moduli[j])
        if self.moduli is None:
            msg = f"moduli at indices {i} and {j} are not coprime: gcd = {gcd}"
        else:
            a, b = self.moduli
            msg = (f"moduli {a} and {b} (indices {i}, {j}) are not coprime: "
                   f"gcd({a}, {b}) = {gcd}")
        super().__init__(i, j, gcd, msg)


class Inconsistent(_PairError):
    """Two congruences with non-coprime moduli contradict each other."""

    def __init__(self, i, j, gcd, moduli=None, residues=None):
        self.moduli = None if moduli is None else (moduli[i], moduli[j])
        self.residues = None if residues is None else (residues[i], residues[j])
        msg = f"congruences {i} and {j} are inconsistent: gcd = {gcd}"
        if self.moduli is not None and self.residues is not None:
            (a, b), (ra, rb) = self.moduli, self.residues
            msg = (f"congruences {i} (x = {ra} mod {a}) and {j} (x = {rb} mod {b}) "
                   f"are inconsistent: gcd({a}, {b}) = {gcd} does not divide {rb - ra}")
        super().__init__(i, j, gcd, msg)


class NotUnitDifference(_PairError):
    """Two interpolation nodes differ by a non-unit."""

    def __init__(self, i, j, gcd, modulus, nodes=None):
        self.modulus = modulus
        self.nodes = None if nodes is None else (nodes[i], nodes[j])
        # difference reported as the canonical residue of x_j - x_i
        diff = gcd if self.nodes is None else (self.nodes[1] - self.nodes[0]) % modulus
        self.difference = diff
        msg = f"x_i − x_j not a unit: gcd({diff}, {modulus}) = {gcd}"
        if self.nodes is not None:
            msg += f" (points {i} and {j}, x = {self.nodes[0]} and {self.nodes[1]})"
        super().__init__(i, j, gcd, msg)


class EmptyInput(CrtLifError, ValueError):
    pass


class ModulusMismatch(CrtLifError, ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"polynomials live over different rings: Z/{left} vs Z/{right}")


class NotMonic(CrtLifError, ValueError):
    pass


class LimitExceeded(CrtLifError):
    def __init__(self, modulus, limit):
        self.modulus = modulus
        self.limit = limit
        super().__init__(f"exhaustive scan of Z/{modulus} exceeds the limit {limit}")
