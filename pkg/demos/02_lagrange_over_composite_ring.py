"""
Interpolation over Z/91Z
========================

Lagrange interpolation needs node differences to be units, not a field.
Over Z/91Z = Z/7 x Z/13 the nodes must be distinct modulo 7 and modulo 13.
"""
from crtlif import (
    NotUnitDifference,
    PointSet,
    check_unit_differences,
    interpolate_via_crt,
    lagrange_basis,
    lagrange_interpolate,
    poly_eval,
)

n = 91
pts = PointSet(n, ((0, 9), (1, 16), (3, 40)))

for i, L in enumerate(lagrange_basis(pts.xs, n)):
    print(f"L_{i}(t) = {L}   values at nodes: {[poly_eval(L, x) for x in pts.xs]}")

p = lagrange_interpolate(pts)
print("explicit formula :", p)
print("ideal-theoretic  :", interpolate_via_crt(pts))
print("values at nodes  :", [poly_eval(p, x) for x in pts.xs])

# 9 and 16 differ by 7, a zero divisor mod 91
print(check_unit_differences((9, 16), n))
try:
    PointSet(n, ((9, 0), (16, 0)))
except NotUnitDifference as exc:
    print("rejected:", exc)
