"""
Solving congruences with an idempotent basis
=============================================

Every pairwise-coprime set of moduli has integers u_i that are 1 modulo
their own modulus and 0 modulo all the others. Any system is then solved
by the weighted sum of residues.
"""
from crtlif import CongruenceSystem, bezout_split, idempotent_basis, solve_crt, verify_solution

moduli = (3, 5, 7)
residues = (2, 3, 2)

# Bezout splits: v + u = 1 with 3 | v and 35 | u, and so on
for i in range(len(moduli)):
    v, u = bezout_split(i, moduli)
    print(f"modulus {moduli[i]}: v = {v}, u = {u}, v + u = {v + u}")

basis = idempotent_basis(moduli)
print("idempotents:", basis.u, "modulo", basis.M)
for ui in basis.u:
    print("  residues of", ui, "->", [ui % m for m in moduli])

system = CongruenceSystem.from_lists(residues, moduli)
sol = solve_crt(system)
print(f"x = {sol.x} (mod {sol.modulus})", "checks:", verify_solution(system, sol.x))

# moduli of any size work; Python ints never overflow
big = CongruenceSystem.from_lists([1, 2, 3], [2**61 - 1, 2**89 - 1, 10**30 + 3])
print(solve_crt(big))
