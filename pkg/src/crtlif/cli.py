"""Command-line front end.

Exit codes: 0 success, 1 internal regression (demo canary), 2 malformed
input, 3 unsolvable input or failed precondition.
"""
import argparse
import json
import sys

from . import crt, interp, lifcrt, poly
from .errors import CrtLifError, EmptyInput, NonPositiveModulus

EXIT_OK = 0
EXIT_REGRESSION = 1
EXIT_INPUT = 2
EXIT_UNSOLVABLE = 3

# Facts the nonuniqueness demo recomputes and compares against.
DEMO_MODULUS = 91
DEMO_P = (1, 1, 1)
EXPECTED_ROOTS = (9, 16, 74, 81)
EXPECTED_Q = (1, 2, 3, 2, 1)


class InputError(ValueError):
    pass


def parse_ints(text):
    """``"3,5,-7"`` -> ``[3, 5, -7]``; empty text gives ``[]``."""
    text = (text or "").strip()
    if not text:
        return []
    try:
        return [int(tok.strip()) for tok in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def parse_modulus(text):
    try:
        n = int(text)
    except (TypeError, ValueError):
        raise InputError(f"modulus must be an integer, got {text!r}") from None
    if n <= 0:
        raise InputError(f"modulus must be >= 1, got {n}")
    return n


def _error_payload(exc):
    payload = {"type": type(exc).__name__, "message": str(exc)}
    for attr in ("i", "j", "gcd", "moduli", "residues", "modulus", "nodes",
                 "difference", "limit"):
        val = getattr(exc, attr, None)
        if val is not None:
            payload[attr] = list(val) if isinstance(val, tuple) else val
    return payload


def _poly_payload(p):
    return {"modulus": p.modulus, "coefficients": list(p.coeffs),
            "pretty": str(p), "degree": p.degree}


# -- commands -------------------------------------------------------------
# Each returns (exit_code, report, lines) where report is the structured
# document and lines the plain rendering.

def cmd_solve(moduli, residues, route="idempotent", show_idempotents=False, general=False):
    if len(moduli) != len(residues):
        raise InputError(f"{len(moduli)} moduli but {len(residues)} residues")
    system = crt.CongruenceSystem.from_lists(residues, moduli)
    report = {"command": "solve", "route": "general" if general else route,
              "moduli": list(system.moduli), "residues": list(system.residues)}
    lines = []
    if general:
        sol = crt.solve_crt_general(system)
    elif route == "interpolation":
        p = lifcrt.build_crt_polynomial(system)
        rs = lifcrt.interpolation_multipliers(system.moduli)
        sol = lifcrt.crt_via_interpolation(system)
        report["multipliers"] = list(rs)
        report["polynomial"] = list(p.coeffs)
        report["p0"] = p(0)
        lines.append(f"multipliers r = {', '.join(map(str, rs))}")
        lines.append(f"p(t) = {p}")
        lines.append(f"p coefficients (ascending): {', '.join(map(str, p.coeffs)) or '0'}")
        lines.append(f"p(0) = {p(0)}")
    else:
        sol = crt.solve_crt(system)
    if show_idempotents and not general:
        basis = crt.idempotent_basis(system.moduli)
        report["idempotents"] = list(basis.u)
        lines.append(f"idempotents u = {', '.join(map(str, basis.u))}")
    report["x"], report["modulus"] = sol.x, sol.modulus
    lines.append(f"x = {sol.x} (mod {sol.modulus})")
    return EXIT_OK, report, lines


def cmd_interp(modulus, points, route="lagrange", check=False):
    pts = interp.PointSet.parse(points, modulus)
    if route == "crt":
        p = interp.interpolate_via_crt(pts)
    else:
        p = interp.lagrange_interpolate(pts)
    report = {"command": "interp", "route": route, "modulus": modulus,
              "points": [list(pt) for pt in pts.points], "polynomial": _poly_payload(p)}
    lines = [f"p(t) = {p}", f"coefficients (ascending): {p.to_csv() or '0'}"]
    code = EXIT_OK
    if check:
        values = [poly.poly_eval(p, x) for x in pts.xs]
        ok = values == list(pts.ys)
        report["check"] = {"values": values, "ok": ok}
        for (x, y), v in zip(pts.points, values):
            lines.append(f"p({x}) = {v} (want {y}) {'ok' if v == y else 'MISMATCH'}")
        if not ok:
            code = EXIT_REGRESSION
    return code, report, lines


def _roots_text(roots):
    return ", ".join(map(str, roots)) if roots else "(none)"


def cmd_roots(modulus, coeffs, limit=poly.DEFAULT_SCAN_LIMIT):
    f = poly.Polynomial(tuple(coeffs), modulus)
    roots = poly.roots_mod_n(f, limit=limit)
    report = {"command": "roots", "polynomial": _poly_payload(f), "roots": list(roots)}
    return EXIT_OK, report, [_roots_text(roots)]


def cmd_expand(modulus, roots):
    q = poly.expand_from_roots(roots, modulus)
    report = {"command": "expand", "roots": [r % modulus for r in roots],
              "polynomial": _poly_payload(q)}
    return EXIT_OK, report, [str(q)]


def cmd_demo_nonuniqueness(expected_roots=None, expected_q=None):
    """Recompute the Z/91 example of two distinct polynomials sharing four roots."""
    expected_roots = EXPECTED_ROOTS if expected_roots is None else tuple(expected_roots)
    expected_q = EXPECTED_Q if expected_q is None else tuple(expected_q)
    n = DEMO_MODULUS
    p = poly.Polynomial(DEMO_P, n)
    p_roots = poly.roots_mod_n(p)
    q = poly.expand_from_roots(p_roots, n)
    q_roots = poly.roots_mod_n(q)
    checks = {
        "p_roots_match": p_roots == expected_roots,
        "q_matches_expansion": q.coeffs == expected_q,
        "q_roots_match": q_roots == expected_roots,
        "p_differs_from_q": p != q,
    }
    ok = all(checks.values())
    verdict = ("p != q yet both have the same roots: interpolation is not unique over Z/91"
               if ok else "REGRESSION: recomputed facts disagree with the expected values")
    report = {
        "command": "demo", "demo": "nonuniqueness", "modulus": n,
        "p": _poly_payload(p), "p_roots": list(p_roots),
        "q": _poly_payload(q), "q_roots": list(q_roots),
        "expected_roots": list(expected_roots), "expected_q": list(expected_q),
        "checks": checks, "ok": ok, "verdict": verdict,
    }
    lines = [
        f"ring: Z/{n}Z",
        f"p(t) = {p}",
        f"roots: {_roots_text(p_roots)}",
        f"q(t) = {' '.join(f'(t - {r})' for r in p_roots)}",
        f"     = {q}",
        f"roots of q: {_roots_text(q_roots)}",
        f"p == q: {p == q}",
        f"verdict: {verdict}",
    ]
    return (EXIT_OK if ok else EXIT_REGRESSION), report, lines


# -- argument parsing -----------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a single JSON document instead of text")

    parser = argparse.ArgumentParser(
        prog="crtlif", description="Chinese remaindering and Lagrange interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="solve x = r_i (mod m_i)")
    s.add_argument("-m", "--moduli", required=True)
    s.add_argument("-r", "--residues", required=True)
    s.add_argument("--route", choices=("idempotent", "interpolation"), default="idempotent")
    s.add_argument("--show-idempotents", action="store_true")
    s.add_argument("--general", action="store_true",
                   help="allow non-coprime moduli; solve modulo the lcm")

    s = sub.add_parser("interp", parents=[common], help="interpolate points over Z/nZ")
    s.add_argument("-n", "--modulus", required=True)
    s.add_argument("-p", "--points", required=True, help='e.g. "1:1,2:4,3:2"')
    s.add_argument("--route", choices=("lagrange", "crt"), default="lagrange")
    s.add_argument("--check", action="store_true", help="re-evaluate at every node")

    s = sub.add_parser("roots", parents=[common], help="enumerate roots over Z/nZ")
    s.add_argument("-n", "--modulus", required=True)
    s.add_argument("-f", "--poly", required=True, help="ascending coefficients, e.g. 1,1,1")
    s.add_argument("--limit", type=int, default=poly.DEFAULT_SCAN_LIMIT)

    s = sub.add_parser("expand", parents=[common], help="expand prod (t - x) over Z/nZ")
    s.add_argument("-n", "--modulus", required=True)
    s.add_argument("-x", "--roots", default="", nargs="?", const="")

    s = sub.add_parser("demo", parents=[common], help="built-in demonstrations")
    s.add_argument("name", choices=("nonuniqueness",))
    return parser


def _dispatch(args):
    if args.command == "solve":
        return cmd_solve(parse_ints(args.moduli), parse_ints(args.residues), args.route,
                         args.show_idempotents, args.general)
    if args.command == "interp":
        try:
            return cmd_interp(parse_modulus(args.modulus), args.points, args.route, args.check)
        except ValueError as exc:
            if isinstance(exc, (CrtLifError, InputError)):
                raise
            raise InputError(str(exc)) from None
    if args.command == "roots":
        return cmd_roots(parse_modulus(args.modulus), parse_ints(args.poly), args.limit)
    if args.command == "expand":
        return cmd_expand(parse_modulus(args.modulus), parse_ints(args.roots))
    return cmd_demo_nonuniqueness()


def _emit(as_json, report, lines, out):
    if as_json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def main(argv=None, stdout=None, stderr=None):
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    try:
        code, report, lines = _dispatch(args)
    except (InputError, NonPositiveModulus, EmptyInput) as exc:
        code, report, lines = EXIT_INPUT, None, None
        error = exc
    except CrtLifError as exc:
        code, report, lines = EXIT_UNSOLVABLE, None, None
        error = exc
    else:
        _emit(args.json, report, lines, out)
        return code

    if args.json:
        doc = {"command": args.command, "error": _error_payload(error)}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    err.write(f"error: {error}\n")
    return code


def run():
    sys.exit(main())
