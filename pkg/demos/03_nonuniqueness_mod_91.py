"""
Same roots, different polynomials
=================================

Over a ring with zero divisors a polynomial can have more roots than its
degree, and two distinct polynomials can share a root set.
"""
from crtlif import Polynomial, expand_from_roots, monic_divmod, roots_mod_n

p = Polynomial((1, 1, 1), 91)
roots = roots_mod_n(p)
print(f"p(t) = {p} has roots {roots} in Z/91")

q = expand_from_roots(roots, 91)
print(f"q(t) = prod (t - r) = {q}, roots {roots_mod_n(q)}")
print("p == q:", p == q)

# q leaves remainder zero on division by each linear factor, and so does p
for r in roots:
    print(r, monic_divmod(p, Polynomial.linear(r, 91))[1], monic_divmod(q, Polynomial.linear(r, 91))[1])
