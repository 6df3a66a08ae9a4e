"""Command line: evaluate, verify, tabulate Jacobi sums, count points.

Exit status is 0 when everything verified, 1 on a usage or configuration
error and 2 when at least one case mismatched.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterable, Sequence, TextIO

from .characters import char_from_ideal, jacobi_sum
from .curves import (
    count_C,
    count_C_by_characters,
    count_D,
    count_elliptic,
    jacobi_formula_D,
    weierstrass,
)
from .cyclotomic import lcm
from .cyclotomic import render as render_cyc
from .errors import FFHGError
from .field import admissible_orders, make_prime_context
from .hgvalue import render as render_hg
from .hypergeometric import hg2f1
from .verify import (
    LEMMAS,
    THEOREM_MODULI,
    VerificationReport,
    scan,
    square_roots,
    theorem_characters,
    theorem_hecke,
    theorem_rhs,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

CSV_COLUMNS = ("p", "object", "case", "lhs", "rhs", "match", "elapsed_us")

# character order -> (theorem, order of the ideal's root)
EVAL_SHAPES = {4: (1, 4), 8: (2, 8), 3: (3, 6), 6: (3, 6), 12: (4, 12)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _tag_list(text: str) -> list[str]:
    tags = [x.strip() for x in text.split(",") if x.strip()]
    bad = [t for t in tags if t not in LEMMAS]
    if bad:
        raise UsageError(f"unknown lemma tag(s) {', '.join(bad)}; choose from {', '.join(LEMMAS)}")
    return tags


def _jobs(flag: int | None) -> int:
    if flag is not None:
        jobs = flag
    else:
        raw = os.environ.get("FFHG_JOBS", "1")
        try:
            jobs = int(raw)
        except ValueError:
            raise UsageError(f"FFHG_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise UsageError("parallelism must be at least 1")
    return jobs


# eval ---------------------------------------------------------------------

def eval_theorem(p: int, order: int, a: int, root: int | None = None) -> dict:
    """Exact 2F1 of the theorem shape at one argument, plus the closed form for a != 0, 1."""
    if order not in EVAL_SHAPES:
        raise UsageError(f"--order must be one of {sorted(EVAL_SHAPES)}")
    tid, ideal = EVAL_SHAPES[order]
    ctx = make_prime_context(p, admissible_orders(p))
    if p % THEOREM_MODULI[tid] != 1:
        raise UsageError(f"order {order} needs p = 1 mod {THEOREM_MODULI[tid]}")
    if root is not None:
        ctx = ctx.with_root(ideal, root)
    sub = order if tid == 3 else None
    A, B, C, psi = theorem_characters(ctx, tid, sub)
    a %= p
    lhs = hg2f1(ctx, A, B, C, a)
    out = {
        "p": p,
        "order": order,
        "a": a,
        "theorem": tid,
        "root": ctx.roots[ideal],
        "lhs": render_hg(lhs),
        "rhs": None,
        "chi": None,
        "match": None,
    }
    if a not in (0, 1):
        hv = theorem_hecke(ctx, tid)
        rhs = theorem_rhs(ctx, tid, a, square_roots(p).get(a), psi, hv.to_cyc(), sub)
        M = lcm(lhs.N, rhs.N)
        out.update(
            lhs=render_hg(lhs.embed(M)),
            rhs=render_hg(rhs.embed(M)),
            chi=str(hv.value),
            match=lhs == rhs,
        )
    return out


def _emit(data: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
        return
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for row in value:
                out.write("  " + "  ".join(f"{k}={v}" for k, v in row.items()) + "\n")
        elif isinstance(value, dict):
            out.write(f"{key}: " + ",".join(f"{k}:{v}" for k, v in value.items()) + "\n")
        elif isinstance(value, list):
            out.write(f"{key}: " + ",".join(str(v) for v in value) + "\n")
        elif value is not None:
            out.write(f"{key}: {value}\n")


def cmd_eval(args, out: TextIO) -> int:
    data = eval_theorem(args.p, args.order, args.a, args.root)
    _emit(data, args.format, out)
    return EXIT_MISMATCH if data["match"] is False else EXIT_OK


# verify -------------------------------------------------------------------

def write_csv(reports: Iterable[VerificationReport], out: TextIO, timing: bool = False) -> bool:
    """Stream one row per case; returns True when nothing mismatched."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    ok = True
    for rep in reports:
        per_case = int(rep.elapsed * 1e6 / max(rep.attempted, 1)) if timing else 0
        for c in rep.cases:
            writer.writerow((rep.p, rep.object, c.case, c.lhs, c.rhs, str(c.match).lower(), per_case))
        ok &= rep.ok
    return ok


def write_json(reports: Iterable[VerificationReport], out: TextIO, timing: bool = False) -> bool:
    rows = []
    for rep in reports:
        row = rep.summary()
        if not timing:
            row.pop("elapsed_s")
        rows.append(row)
    ok = all(not r["mismatches"] for r in rows)
    total = sum(r["attempted"] for r in rows)
    verified = sum(r["verified"] for r in rows)
    json.dump({"ok": ok, "attempted": total, "verified": verified, "reports": rows}, out, indent=2)
    out.write("\n")
    return ok


def run_campaign(pmin: int, pmax: int, theorems: Sequence[int], lemmas: Sequence[str],
                 jobs: int, out: TextIO, fmt: str = "csv", timing: bool = False, seed: int = 0) -> int:
    """Run a scan and write it; returns the exit status."""
    if pmin > pmax:
        raise UsageError(f"--pmin {pmin} exceeds --pmax {pmax}")
    bad = [t for t in theorems if t not in THEOREM_MODULI]
    if bad:
        raise UsageError(f"unknown theorem id(s) {bad}; choose from 1, 2, 3, 4")
    reports = scan(pmin, pmax, theorems, lemmas, jobs=jobs, seed=seed)
    writer = write_json if fmt == "json" else write_csv
    return EXIT_OK if writer(reports, out, timing) else EXIT_MISMATCH


def cmd_verify(args, out: TextIO) -> int:
    theorems = _int_list(args.theorems) if args.theorems else []
    lemmas = _tag_list(args.lemmas) if args.lemmas else []
    if not theorems and not lemmas:
        raise UsageError("nothing to verify: give --theorems and/or --lemmas")
    jobs = _jobs(args.jobs)
    if args.pmin > args.pmax:
        raise UsageError(f"--pmin {args.pmin} exceeds --pmax {args.pmax}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            return run_campaign(args.pmin, args.pmax, theorems, lemmas, jobs, fh,
                                args.format, args.timing, args.seed)
    return run_campaign(args.pmin, args.pmax, theorems, lemmas, jobs, out,
                        args.format, args.timing, args.seed)


# jacobi -------------------------------------------------------------------

def jacobi_table(p: int, orders: Sequence[int]) -> dict:
    """``J(psi_1^i, psi_2^j)`` for the canonical characters of the two orders."""
    if len(orders) != 2:
        raise UsageError("--orders takes exactly two orders N1,N2")
    ctx = make_prime_context(p, [N for N in orders if N > 1])
    psi1, psi2 = (char_from_ideal(ctx, N) for N in orders)
    rows = []
    for i in range(orders[0]):
        for j in range(orders[1]):
            J = jacobi_sum(psi1**i, psi2**j)
            rows.append({"i": i, "j": j, "J": render_cyc(J), "norm": J.abs_square()})
    return {"p": p, "orders": list(orders), "roots": {str(N): r for N, r in ctx.roots.items()}, "table": rows}


def cmd_jacobi(args, out: TextIO) -> int:
    _emit(jacobi_table(args.p, _int_list(args.orders)), args.format, out)
    return EXIT_OK


# count --------------------------------------------------------------------

_PARAM_KEYS = {"E": ("alpha", "beta", "gamma", "c"), "C": ("N", "a", "c"), "D": ("N", "c", "d")}


def _params(family: str, items: Sequence[str]) -> dict[str, int]:
    allowed = _PARAM_KEYS[family]
    out: dict[str, int] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in allowed:
            raise UsageError(f"family {family} takes parameters {', '.join(k + '=' for k in allowed)}; got {item!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} needs an integer, got {value!r}") from None
    return out


def count_points(p: int, family: str, params: dict[str, int]) -> dict:
    ctx = make_prime_context(p, admissible_orders(p))
    if family == "E":
        spec = weierstrass(params.get("alpha", 0), params.get("beta", 0), params.get("gamma", 0), params.get("c", 1))
        rec = count_elliptic(ctx, spec)
        return {"p": p, "curve": spec.label(), "count": rec.count, "trace": rec.trace}
    if family == "D":
        N, c, d = params.get("N", 4), params.get("c", 1), params.get("d", 1)
        rec = count_D(ctx, N, c, d)
        formula = jacobi_formula_D(ctx, N, c, d)
        return {"p": p, "curve": rec.curve.label(), "count": rec.count, "trace": rec.trace,
                "jacobi_formula": formula, "match": formula == rec.count}
    N, a, c = params.get("N", 4), params.get("a", 2), params.get("c", 1)
    count = count_C(ctx, N, a, c)
    by_chars = count_C_by_characters(ctx, N, a, c)
    return {"p": p, "curve": f"C[N={N},a={a % p},c={c % p}]", "count": count,
            "character_sum": render_cyc(by_chars), "match": by_chars == count}


def cmd_count(args, out: TextIO) -> int:
    data = count_points(args.p, args.family, _params(args.family, args.params))
    _emit(data, args.format, out)
    return EXIT_MISMATCH if data.get("match") is False else EXIT_OK


# entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ffhg", description="Exact finite-field 2F1 evaluations and their verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="exact 2F1 of a theorem shape at one argument")
    ev.add_argument("--p", type=int, required=True)
    ev.add_argument("--order", type=int, required=True, help="3, 4, 6, 8 or 12")
    ev.add_argument("--a", type=int, required=True)
    ev.add_argument("--root", type=int, help="override the root defining the prime ideal")
    ev.add_argument("--format", choices=("text", "json"), default="text")
    ev.set_defaults(func=cmd_eval)

    ve = sub.add_parser("verify", help="verify theorems and lemmas over a prime range")
    ve.add_argument("--theorems", default="", help="comma list from 1,2,3,4")
    ve.add_argument("--lemmas", default="", help=f"comma list from {','.join(LEMMAS)}")
    ve.add_argument("--pmin", type=int, required=True)
    ve.add_argument("--pmax", type=int, required=True)
    ve.add_argument("--jobs", type=int, help="worker processes (default: FFHG_JOBS or 1)")
    ve.add_argument("--out", help="write the report here instead of stdout")
    ve.add_argument("--format", choices=("csv", "json"), default="csv")
    ve.add_argument("--timing", action="store_true", help="fill elapsed_us (output is then not reproducible)")
    ve.add_argument("--seed", type=int, default=0, help="seed for the randomized lemma samples")
    ve.set_defaults(func=cmd_verify)

    ja = sub.add_parser("jacobi", help="table of Jacobi sums for two character orders")
    ja.add_argument("--p", type=int, required=True)
    ja.add_argument("--orders", required=True, help="N1,N2")
    ja.add_argument("--format", choices=("text", "json"), default="text")
    ja.set_defaults(func=cmd_jacobi)

    co = sub.add_parser("count", help="point count and trace for a curve")
    co.add_argument("--p", type=int, required=True)
    co.add_argument("--family", choices=("C", "D", "E"), required=True)
    co.add_argument("--params", nargs="*", default=[], help="key=value, e.g. N=6 a=4 c=1")
    co.add_argument("--format", choices=("text", "json"), default="text")
    co.set_defaults(func=cmd_count)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, FFHGError, ValueError) as exc:
        print(f"ffhg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head)
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK
    except OSError as exc:
        print(f"ffhg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
