"""
Integer CRT from an interpolation polynomial
============================================

Use the moduli themselves as nodes. The integer polynomial
p(t) = sum b_i r_i prod_{j != i} (t - m_j) hits every b_i modulo m_i at
t = m_i, and its constant term p(0) solves the system.
"""
import random
from math import gcd

from crtlif import (
    CongruenceSystem,
    build_crt_polynomial,
    crt_via_interpolation,
    interpolation_multipliers,
    solve_crt,
)

system = CongruenceSystem(((2, 3), (3, 5), (2, 7)))
print("multipliers r:", interpolation_multipliers(system.moduli))
p = build_crt_polynomial(system)
print("p(t) =", p)
print("p(m_k) mod m_k:", [p(m) % m for m in system.moduli])
print("p(0) =", p(0), "->", crt_via_interpolation(system))

rng = random.Random(1)
agree = 0
for _ in range(200):
    moduli = []
    for _ in range(rng.randint(1, 5)):
        m = rng.randint(2, 60)
        if all(gcd(m, k) == 1 for k in moduli):
            moduli.append(m)
    s = CongruenceSystem.from_lists([rng.randint(0, 10**6) for _ in moduli], moduli)
    agree += crt_via_interpolation(s) == solve_crt(s)
print(f"both routes agree on {agree}/200 random systems")
