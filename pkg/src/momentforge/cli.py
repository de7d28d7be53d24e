"""Command-line surface.

Subcommands: monomials, moment, sqlength, grad, orbits, diagonal, critical,
verify, reproduce-paper, emit-points.  Polynomials travel as JSON files (see
the package README for the schema).  Exit codes: 0 success, 1 usage error,
2 degenerate input, 3 fixture mismatch in reproduce-paper.

``MOMENTFORGE_THREADS`` caps worker threads; output is deterministic
regardless of parallelism, and JSON output uses sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .critical import AlgebraicNumber, gradient_system, solve_real, verify_critical
from .diagonal import diagonal_families, is_identically_diagonal
from .moment import (
    gradient,
    gradient_symbolic,
    moment_matrix,
    square_length,
    square_length_symbolic,
    symbolic_moment_matrix,
)
from .orbits import build_family, orbit_classes, uses_all_variables
from .polyring import (
    DegenerateInputError,
    SparsePoly,
    evaluate_poly,
    format_scalar,
    poly_from_json,
    poly_to_json,
)
from .reproduce import run_case
from .symd import enumerate_monomials

USAGE_ERROR = 1
DEGENERATE_INPUT = 2
FIXTURE_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_ERROR)


def _fmt_float(v: float) -> float:
    return float(format(v, ".12g"))


def _dump_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _load_poly(path: str) -> SparsePoly:
    with open(path, "r", encoding="utf-8") as fh:
        return poly_from_json(json.load(fh))


def _scalar_out(value, as_float: bool):
    if as_float or isinstance(value, float):
        return _fmt_float(float(value))
    return format_scalar(value)


def _print_matrix(rows) -> None:
    widths = [max(len(str(rows[i][j])) for i in range(len(rows))) for j in range(len(rows[0]))]
    for row in rows:
        print("[ " + "  ".join(str(v).rjust(w) for v, w in zip(row, widths)) + " ]")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_monomials(args) -> int:
    basis = enumerate_monomials(args.n, args.d)
    if args.json:
        _dump_json([list(a) for a in basis.order])
    else:
        from .polyring import format_monomial

        print(" ".join(format_monomial(args.n, a) for a in basis.order))
    return 0


def _cmd_moment(args) -> int:
    f = _load_poly(args.poly)
    if f.is_parametric():
        sym = symbolic_moment_matrix(f)
        if args.json:
            _dump_json(
                {
                    "denominator": str(sym.denominator),
                    "numerators": [[str(e) for e in row] for row in sym.numerators],
                }
            )
        else:
            print(f"denominator: {sym.denominator}")
            _print_matrix([[str(e) for e in row] for row in sym.numerators])
        return 0
    m = moment_matrix(f)
    rows = [[_scalar_out(v, args.float) for v in row] for row in m.entries]
    if args.json:
        _dump_json({"entries": rows, "n": m.n})
    else:
        _print_matrix(rows)
    return 0


def _cmd_sqlength(args) -> int:
    f = _load_poly(args.poly)
    if f.is_parametric():
        value = str(square_length_symbolic(f))
    else:
        value = _scalar_out(square_length(f), args.float)
    if args.json:
        _dump_json({"square_length": value})
    else:
        print(value)
    return 0


def _cmd_grad(args) -> int:
    f = _load_poly(args.poly)
    if f.is_parametric():
        numerators, denom = gradient_symbolic(f)
        if args.json:
            _dump_json(
                {"denominator": str(denom), "numerators": [str(e) for e in numerators]}
            )
        else:
            print(f"denominator: {denom}")
            for e in numerators:
                print(e)
        return 0
    grad = [_scalar_out(v, args.float) for v in gradient(f)]
    if args.json:
        _dump_json({"gradient": grad})
    else:
        print(" ".join(str(v) for v in grad))
    return 0


def _cmd_orbits(args) -> int:
    reps = orbit_classes(args.n, args.d, args.terms)
    if args.all_vars:
        reps = [r for r in reps if uses_all_variables(r.support)]
    supports = [sorted(r.support, key=lambda a: tuple(reversed(a[1:]))) for r in reps]
    if args.json:
        _dump_json([[list(a) for a in s] for s in supports])
    else:
        from .polyring import format_monomial

        for s in supports:
            print(" + ".join(format_monomial(args.n, a) for a in reversed(s)))
    return 0


def _cmd_diagonal(args) -> int:
    reps = [
        r for r in orbit_classes(args.n, args.d, args.terms) if uses_all_variables(r.support)
    ]
    payload = []
    for rep in reps:
        verdict = is_identically_diagonal(build_family(rep.support))
        payload.append(
            {
                "diagonal": verdict.is_diagonal,
                "family": str(verdict.family),
                "offending": [[i + 1, j + 1] for (i, j), _ in verdict.offending_entries],
                "support": [list(a) for a in verdict.family.display_terms()],
                "witness": None
                if verdict.witness is None
                else [str(v) for v in verdict.witness],
            }
        )
    if args.json:
        _dump_json(payload)
    else:
        for row in payload:
            tag = "diagonal" if row["diagonal"] else "not diagonal"
            extra = "" if row["witness"] is None else f"  witness b = {row['witness']}"
            print(f"{row['family']}: {tag}{extra}")
    return 0


def _value_payload(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, AlgebraicNumber):
        return {
            "approx": _fmt_float(v.approx),
            "interval": [str(v.lo), str(v.hi)],
            "minpoly": [str(c) for c in v.minimal_polynomial],
        }
    return _fmt_float(float(v))


def _cmd_critical(args) -> int:
    payload = []
    for m in args.terms:
        for family in diagonal_families(args.n, args.d, m):
            solutions = solve_real(gradient_system(family), args.tol)
            payload.append(
                {
                    "family": str(family),
                    "solutions": [
                        {
                            "canonical_form": poly_to_json(sol.canonical_form),
                            "residual": _fmt_float(sol.residual),
                            "values": {
                                f"b{i + 1}": _value_payload(v)
                                for i, v in enumerate(sol.values)
                            },
                        }
                        for sol in solutions
                    ],
                    "support": [list(a) for a in family.display_terms()],
                }
            )
    if args.json:
        _dump_json(payload)
    else:
        for row in payload:
            print(f"{row['family']}:")
            if not row["solutions"]:
                print("  no real critical points with nonzero parameters")
            for sol in row["solutions"]:
                vals = ", ".join(
                    f"{k}={v if isinstance(v, str) else v['approx'] if isinstance(v, dict) else v}"
                    for k, v in sorted(sol["values"].items())
                )
                print(f"  {vals}  residual={sol['residual']:g}")
    return 0


def _cmd_verify(args) -> int:
    f = _load_poly(args.poly)
    residual = verify_critical(f)
    if args.json:
        _dump_json({"critical": residual <= args.tol, "residual": _fmt_float(residual)})
    else:
        print(format(residual, ".12g"))
    return 0


def _cmd_reproduce(args) -> int:
    checks = run_case(args.case)
    for c in checks:
        status = "ok" if c.ok else "MISMATCH"
        detail = f"  ({c.detail})" if c.detail else ""
        print(f"{status}: {c.name}{detail}")
    return 0 if all(c.ok for c in checks) else FIXTURE_MISMATCH


def emit_points(f: SparsePoly, box: float = 2.0, samples: int = 25):
    """Approximate real points of ``{f = 0}`` inside ``[-box, box]^3``.

    Sign-change bisection along grid lines in each axis direction; the list
    may be empty (some of the published curves have no real points besides
    the origin).
    """
    if f.n != 3:
        raise ValueError("point emission supports three variables")
    pts: list[tuple[float, float, float]] = []
    grid = [(-box + 2 * box * k / (samples - 1)) for k in range(samples)]
    for axis in range(3):
        others = [i for i in range(3) if i != axis]
        for u in grid:
            for v in grid:
                base = [0.0, 0.0, 0.0]
                base[others[0]] = u
                base[others[1]] = v

                def at(t: float) -> float:
                    p = list(base)
                    p[axis] = t
                    return evaluate_poly(f, p)

                prev_t, prev_val = grid[0], at(grid[0])
                for t in grid[1:]:
                    val = at(t)
                    if prev_val == 0.0:
                        p = list(base)
                        p[axis] = prev_t
                        pts.append(tuple(p))
                    elif val != 0.0 and (prev_val < 0) != (val < 0):
                        lo, hi, flo = prev_t, t, prev_val
                        for _ in range(48):
                            mid = 0.5 * (lo + hi)
                            fmid = at(mid)
                            if fmid == 0.0:
                                lo = hi = mid
                                break
                            if (flo < 0) != (fmid < 0):
                                hi = mid
                            else:
                                lo, flo = mid, fmid
                        p = list(base)
                        p[axis] = 0.5 * (lo + hi)
                        pts.append(tuple(p))
                    prev_t, prev_val = t, val
    return pts


def _cmd_emit_points(args) -> int:
    f = _load_poly(args.poly)
    pts = emit_points(f, box=args.box, samples=args.samples)
    lines = [[_fmt_float(c) for c in p] for p in pts]
    out = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8")
    try:
        if args.json:
            out.write(json.dumps({"points": lines}, sort_keys=True) + "\n")
        else:
            for p in lines:
                out.write(" ".join(format(c, ".12g") for c in p) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="momentforge")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-stable JSON output")
        return p

    p = add("monomials", _cmd_monomials, help="ordered monomial basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    for name, func, what in (
        ("moment", _cmd_moment, "moment matrix"),
        ("sqlength", _cmd_sqlength, "square length of the moment matrix"),
        ("grad", _cmd_grad, "gradient over all coefficient directions"),
    ):
        p = add(name, func, help=what)
        p.add_argument("--poly", required=True, help="polynomial JSON file")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--exact", action="store_true", help="exact output (default)")
        mode.add_argument("--float", action="store_true", help="decimal output")

    p = add("orbits", _cmd_orbits, help="orbit representatives of monomial supports")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--all-vars", action="store_true", dest="all_vars")

    p = add("diagonal", _cmd_diagonal, help="diagonal-moment verdicts for families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)

    p = add("critical", _cmd_critical, help="critical points within diagonal families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, nargs="+", required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("verify", _cmd_verify, help="residual of the criticality gradient")
    p.add_argument("--poly", required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("reproduce-paper", _cmd_reproduce, help="diff pipelines against embedded tables")
    p.add_argument("--case", choices=("cubics", "quartics"), required=True)

    p = add("emit-points", _cmd_emit_points, help="sample the real zero locus")
    p.add_argument("--poly", required=True)
    p.add_argument("--box", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--out", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateInputError as exc:
        sys.stderr.write(f"degenerate input: {exc}\n")
        return DEGENERATE_INPUT
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
