"""Exit criteria. Every check is exact (zero tolerance) against brute force.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""
import io
import json
import random
import time
from itertools import combinations, product
from math import prod

import pytest

from crtlif import (
    CongruenceSystem,
    Inconsistent,
    NotCoprime,
    NotUnitDifference,
    PointSet,
    Polynomial,
    bezout_split,
    build_crt_polynomial,
    check_unit_differences,
    cli,
    crt_via_interpolation,
    expand_from_roots,
    idempotent_basis,
    interpolate_via_crt,
    interpolation_multipliers,
    lagrange_interpolate,
    monic_divmod,
    pairwise_coprime,
    poly_add,
    poly_eval,
    poly_mul,
    roots_mod_n,
    solve_crt,
    solve_crt_general,
)
from oracles import all_polys_below_degree, brute_gcd, naive_eval, scan_solutions


def random_coprime_moduli(rng, max_n=5, max_m=50, max_product=10**6):
    n = rng.randint(1, max_n)
    moduli = []
    attempts = 0
    while len(moduli) < n and attempts < 200:
        attempts += 1
        m = rng.randint(2, max_m)
        if all(brute_gcd(m, k) == 1 for k in moduli) and prod(moduli) * m <= max_product:
            moduli.append(m)
    return moduli


@pytest.fixture(scope="module")
def crt_systems():
    rng = random.Random(20261016)
    systems = []
    for _ in range(1000):
        moduli = random_coprime_moduli(rng)
        residues = [rng.randint(-10**4, 10**4) for _ in moduli]
        systems.append(CongruenceSystem.from_lists(residues, moduli))
    return systems


def random_point_set(rng, n, k):
    xs = []
    while len(xs) < k:
        x = rng.randrange(n)
        if all(brute_gcd(x - other, n) == 1 for other in xs):
            xs.append(x)
    return PointSet(n, tuple((x, rng.randrange(n)) for x in xs))


def test_criterion_01_remark_reproduction():
    start = time.perf_counter()
    p = Polynomial((1, 1, 1), 91)
    roots = roots_mod_n(p, 91)
    q = expand_from_roots(roots, 91)
    elapsed = time.perf_counter() - start
    assert roots == (9, 16, 74, 81)
    assert q.coeffs == (1, 2, 3, 2, 1)
    assert p != q
    assert roots_mod_n(q, 91) == roots
    assert elapsed < 0.1


def test_criterion_02_crt_oracle_equivalence(crt_systems):
    assert len(crt_systems) == 1000
    for system in crt_systems:
        M = prod(system.moduli)
        assert M <= 10**6 and len(system) <= 5 and max(system.moduli) <= 50
        sol = solve_crt(system)
        assert sol.modulus == M
        assert scan_solutions(system.residues, system.moduli, M) == [sol.x]


def test_criterion_03_interpolation_route_agreement(crt_systems):
    for system in crt_systems:
        assert crt_via_interpolation(system) == solve_crt(system)
        p = build_crt_polynomial(system)
        for b, m in system:
            assert (p(m) - b) % m == 0


def test_criterion_04_interpolation_and_route_equivalence():
    rng = random.Random(4)
    for _ in range(500):
        n = rng.choice((7, 53, 91, 97))
        pts = random_point_set(rng, n, rng.randint(1, 6))
        p = lagrange_interpolate(pts)
        assert all(naive_eval(p.coeffs, x, n) == y for x, y in pts.points)
        assert p.degree is None or p.degree <= len(pts) - 1
        assert interpolate_via_crt(pts).coeffs == p.coeffs


@pytest.mark.parametrize("n", [5, 7])
def test_criterion_05_small_field_uniqueness(n):
    for k in (1, 2, 3):
        candidates = list(all_polys_below_degree(k, n))
        for xs in combinations(range(n), k):
            table = {}
            for cs in candidates:
                ys = tuple(naive_eval(cs, x, n) for x in xs)
                table.setdefault(ys, []).append(cs)
            # every value vector is hit by exactly one polynomial of degree < k
            assert len(table) == n**k
            assert all(len(v) == 1 for v in table.values())
            for ys in product(range(n), repeat=k):
                pts = PointSet(n, tuple(zip(xs, ys)))
                assert lagrange_interpolate(pts).coeffs == table[ys][0]


def test_criterion_06_idempotent_basis_laws():
    rng = random.Random(6)
    for _ in range(200):
        moduli = random_coprime_moduli(rng)
        u, M = idempotent_basis(moduli)
        assert M == prod(moduli)
        for i, ui in enumerate(u):
            for j, mj in enumerate(moduli):
                assert ui % mj == (1 if i == j else 0)
                if i != j:
                    assert ui * u[j] % M == 0
            assert ui * ui % M == ui % M
        assert sum(u) % M == 1 % M


def test_criterion_07_kernel_is_product():
    rng = random.Random(7)
    hits = 0
    for _ in range(200):
        moduli = random_coprime_moduli(rng)
        M = prod(moduli)
        for k in range(50):
            if k % 2:
                x = rng.randint(-10**6, 10**6)
            else:
                # force the interesting side: multiples of M or of a single modulus
                base = M if k % 4 == 0 else rng.choice(moduli)
                x = base * rng.randint(-10**6 // base, 10**6 // base)
            in_every = all(x % m == 0 for m in moduli)
            hits += in_every
            assert in_every == (x % M == 0)
    assert hits > 0


def test_criterion_08_monic_division():
    rng = random.Random(8)
    for _ in range(500):
        n = rng.choice((91, 97))
        f = Polynomial(tuple(rng.randrange(n) for _ in range(rng.randint(0, 10))), n)
        g = Polynomial(tuple(rng.randrange(n) for _ in range(rng.randint(0, 5))) + (1,), n)
        q, r = monic_divmod(f, g)
        assert poly_add(poly_mul(q, g), r) == f
        assert r.degree is None or r.degree < g.degree
        a = rng.randrange(n)
        _, r1 = monic_divmod(f, Polynomial.linear(a, n))
        assert r1.coeffs == Polynomial.constant(naive_eval(f.coeffs, a, n), n).coeffs
        assert poly_eval(f, a) == naive_eval(f.coeffs, a, n)


ERROR_TABLE = [
    (lambda: solve_crt(CongruenceSystem(((1, 4), (2, 6)))), NotCoprime, (0, 1, 2)),
    (lambda: solve_crt(CongruenceSystem(((0, 3), (0, 5), (0, 10)))), NotCoprime, (1, 2, 5)),
    (lambda: idempotent_basis((9, 5, 12)), NotCoprime, (0, 2, 3)),
    (lambda: bezout_split(0, (7, 14)), NotCoprime, (0, 1, 7)),
    (lambda: interpolation_multipliers((15, 4, 21)), NotCoprime, (0, 2, 3)),
    (lambda: crt_via_interpolation(CongruenceSystem(((1, 8), (1, 12)))), NotCoprime, (0, 1, 4)),
    (lambda: PointSet(91, ((9, 0), (16, 0))), NotUnitDifference, (0, 1, 7)),
    (lambda: lagrange_interpolate(PointSet(91, ((9, 0), (16, 0)))), NotUnitDifference, (0, 1, 7)),
    (lambda: PointSet(91, ((0, 1), (1, 1), (13, 1))), NotUnitDifference, (0, 2, 13)),
    (lambda: PointSet(10, ((3, 1), (3, 2))), NotUnitDifference, (0, 1, 10)),
    (lambda: solve_crt_general(CongruenceSystem(((1, 4), (2, 6)))), Inconsistent, (0, 1, 2)),
    (lambda: solve_crt_general(CongruenceSystem(((1, 9), (2, 5), (3, 6)))), Inconsistent, (0, 2, 3)),
]


@pytest.mark.parametrize("call, error, witness", ERROR_TABLE,
                         ids=[f"{e.__name__}-{i}" for i, (_, e, _) in enumerate(ERROR_TABLE)])
def test_criterion_09_error_taxonomy(call, error, witness):
    with pytest.raises(error) as info:
        call()
    exc = info.value
    assert (exc.i, exc.j, exc.gcd) == witness
    # the witness pairs agree with the non-raising checkers
    if error is NotCoprime and exc.moduli is not None:
        assert brute_gcd(*exc.moduli) == exc.gcd
    if error is NotUnitDifference:
        a, b = exc.nodes
        assert brute_gcd(b - a, exc.modulus) == exc.gcd


def test_criterion_09_checkers_return_witnesses():
    assert pairwise_coprime((4, 6)) == (0, 1, 2)
    assert check_unit_differences((9, 16), 91) == (0, 1, 7)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue()


def test_criterion_10_cli_contract():
    code, text = _cli("demo", "nonuniqueness", "--json")
    assert code == 0
    doc = json.loads(text)
    assert json.loads(json.dumps(doc, sort_keys=True)) == doc
    assert doc["ok"] and doc["p_roots"] == [9, 16, 74, 81]
    assert doc["q"]["coefficients"] == [1, 2, 3, 2, 1]
    code, plain = _cli("demo", "nonuniqueness")
    assert code == 0 and "roots: 9, 16, 74, 81" in plain
    for route in ("idempotent", "interpolation"):
        code, out = _cli("solve", "-m", "3,5,7", "-r", "2,3,2", "--route", route)
        assert code == 0 and "x = 23 (mod 105)" in out
