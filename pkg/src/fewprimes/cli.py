"""``fewprimes`` command line.

Exit status: 0 when every assertion-grade check holds, 1 when one fails (a JSON
diagnostic goes to stderr), 2 when a budget would be exceeded, 3 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .config import DEFAULT_BUDGETS, Budgets
from .covering import cover_pipeline
from .errors import BudgetExceeded, ExhaustedSampler, HypothesisViolated, UnfactoredResidue
from .factored import element_from_json, element_to_json, factor
from .families import KINDS, FamilySpec
from .reports import CheckReport, reports_to_csv
from .setops import FiniteSet
from .sunit import EquationInstance, GroupSpec, stabilization_scan
from .suites import SUITES, run_suite
from .verify import check_balog_wooley, report_exponents

EXIT_OK, EXIT_CHECK, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


# -- set files ----------------------------------------------------------------


def read_set_file(path) -> tuple[FiniteSet, dict]:
    """Load a set file: either a bare list of elements or ``{"elements": [...], ...}``."""
    data = json.loads(Path(path).read_text())
    meta: dict = {}
    if isinstance(data, dict):
        meta = {k: v for k, v in data.items() if k != "elements"}
        data = data.get("elements")
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a list of elements")
    values = []
    for obj in data:
        if isinstance(obj, dict) and str(obj.get("int", obj.get("rat", ""))) == "0":
            values.append(Fraction(0))
        else:
            values.append(element_from_json(obj))
    return FiniteSet(values), meta


def set_payload(A: FiniteSet, meta: dict) -> dict:
    elements = [{"int": "0"} if x == 0 else element_to_json(A.factorization(x)) for x in A.elements]
    return {**meta, "size": len(A), "elements": elements}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _fail_if_any(reports: list[CheckReport], context: dict) -> int:
    failed = [r for r in reports if r.assertion and not r.holds]
    if failed:
        sys.stderr.write(_dump({"status": "check-failed", **context, "failed": [r.to_dict() for r in failed]}))
        return EXIT_CHECK
    return EXIT_OK


def _budgets(args) -> Budgets:
    b = DEFAULT_BUDGETS
    changes = {
        "python_pairs": args.max_pairs,
        "brute_force": args.max_brute,
        "matrix_dim": args.max_matrix,
        "counter_support": args.max_counter,
    }
    changes = {k: v for k, v in changes.items() if v is not None}
    if any(v <= 0 for v in changes.values()):
        raise InputError("budgets must be positive")
    return b.with_(**changes)


# -- subcommands --------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = FamilySpec.from_json(args.spec) if args.spec else FamilySpec.from_args(args.kind, args.params)
    if spec.kind == "random_few_prime" and "seed" not in spec.params:
        spec = FamilySpec(spec.kind, {**spec.params, "seed": args.seed})
    A = spec.build()
    _emit(_dump(set_payload(A, {"family": spec.to_dict(), "seed": spec.seed})), args.output)
    return EXIT_OK


def _csv_text(rows: list[dict]) -> str:
    buf = io.StringIO()
    keys = list(rows[0]) if rows else []
    for r in rows[1:]:
        keys += [k for k in r if k not in keys]
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n", restval="")
    w.writeheader()
    for r in rows:
        w.writerow({k: "" if v is None else v for k, v in r.items()})
    return buf.getvalue()


def cmd_stats(args) -> int:
    budgets = _budgets(args)
    rows = []
    for path in args.sets:
        A, meta = read_set_file(path)
        rows.append({"source": str(path), "seed": meta.get("seed", ""), **report_exponents(A, args.m, budgets)})
    if args.format == "json":
        _emit("".join(json.dumps(r, separators=(",", ":")) + "\n" for r in rows), args.output)
    else:
        _emit(_csv_text(rows), args.output)
    return EXIT_OK


def cmd_cover(args) -> int:
    budgets = _budgets(args)
    A, meta = read_set_file(args.A)
    B = read_set_file(args.B)[0] if args.B else A
    cert = cover_pipeline(A, B, args.k, args.l, args.variant, budgets)
    payload = {"seed": meta.get("seed"), "inputs": [args.A, args.B or args.A], **cert.to_dict()}
    _emit(_dump(payload), args.output)
    return _fail_if_any(cert.checks, {"command": "cover"})


def _parse_fractions(text: str) -> list[Fraction]:
    return [Fraction(t.strip()) for t in text.split(",") if t.strip()]


def cmd_sunit(args) -> int:
    budgets = _budgets(args)
    eq = EquationInstance(Fraction(args.a0), tuple(_parse_fractions(args.coeffs)))
    gens = tuple(factor(g) for g in _parse_fractions(args.generators)) if args.generators else ()
    spec = GroupSpec(gens, include_torsion=not args.no_torsion)
    scan = stabilization_scan(eq, spec, args.H, args.method, budgets)
    _emit(scan.to_csv(), args.output)
    sys.stderr.write(
        f"plateau_H={scan.plateau_H} stable={str(scan.stable).lower()} monotone={str(scan.monotone).lower()}\n"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    budgets = _budgets(args)
    if args.suite == "balog-wooley":
        reports = []
        for cell in args.grid:
            M, N = (int(t) for t in cell.lower().split("x"))
            reports += check_balog_wooley(M, N, budgets=budgets)
    else:
        reports = run_suite(args.suite, args.seed, args.trials, args.max_size, budgets)
    if args.format == "csv":
        _emit(reports_to_csv(reports), args.output)
    else:
        lines = []
        for r in reports:
            d = r.to_dict()
            d["seed"] = args.seed
            lines.append(json.dumps(d, separators=(",", ":")) + "\n")
        _emit("".join(lines), args.output)
    return _fail_if_any(reports, {"command": "verify", "suite": args.suite, "seed": args.seed})


def _sweep_cell(job: tuple[dict, tuple[int, ...], int, Budgets]) -> dict:
    spec_dict, m_list, seed, budgets = job
    spec = FamilySpec.from_dict(spec_dict)
    A = spec.build()
    params = json.dumps(spec.to_dict()["params"], separators=(",", ":"), sort_keys=True)
    return {"family": spec.kind, "params": params, "seed": seed, **report_exponents(A, m_list, budgets)}


def sweep_jobs(families: list[str], sizes: list[int], seed: int, bw: list[str]) -> list[dict]:
    jobs = []
    for fam in families:
        for n in sizes:
            if fam == "geometric":
                jobs.append(FamilySpec("geometric", {"q": 2, "n": n}).to_dict())
            elif fam == "random_few_prime":
                params = {"pool": 16, "k": 2, "e_max": 3, "size": n, "seed": seed, "mode": "integer"}
                jobs.append(FamilySpec("random_few_prime", params).to_dict())
            else:
                raise InputError(f"sweep family must be geometric or random_few_prime, got {fam!r}")
    for cell in bw:
        M, N = (int(t) for t in cell.lower().split("x"))
        jobs.append(FamilySpec("balog_wooley", {"M": M, "N": N}).to_dict())
    return jobs


def run_sweep(jobs: list[dict], m_list, workers: int, budgets: Budgets, seed: int = 0) -> str:
    work = [(j, tuple(m_list), seed, budgets) for j in jobs]
    if workers <= 1:
        rows = [_sweep_cell(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_cell, work))
    return _csv_text(rows)


def cmd_sweep(args) -> int:
    budgets = _budgets(args)
    jobs = sweep_jobs(args.families, args.sizes, args.seed, args.bw)
    _emit(run_sweep(jobs, args.m, args.workers, budgets, args.seed), args.output)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _csv_list(cast):
    return lambda text: [cast(t) for t in text.split(",") if t]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--max-pairs", type=int, help="cap on pure-Python pairwise operations")
    common.add_argument("--max-brute", type=int, help="cap on brute-force enumeration")
    common.add_argument("--max-matrix", type=int, help="cap on biadjacency matrix side")
    common.add_argument("--max-counter", type=int, help="cap on distinct counter keys")

    p = argparse.ArgumentParser(prog="fewprimes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a set file")
    g.add_argument("kind", nargs="?", choices=KINDS, default="geometric")
    g.add_argument("params", nargs="*", help="key=value pairs, e.g. q=2 n=10")
    g.add_argument("--spec", help="family spec as JSON text or a path")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("stats", parents=[common], help="exponent row for each set file")
    s.add_argument("sets", nargs="+")
    s.add_argument("--m", type=_csv_list(int), default=[3])
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_stats)

    c = sub.add_parser("cover", parents=[common], help="covering certificate")
    c.add_argument("A")
    c.add_argument("B", nargs="?")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--l", type=int, required=True)
    c.add_argument("--variant", type=int, choices=(1, 2), default=1)
    c.set_defaults(func=cmd_cover)

    u = sub.add_parser("sunit", parents=[common], help="solution counts over growing boxes")
    u.add_argument("--a0", default="1")
    u.add_argument("--coeffs", required=True, help="comma separated, e.g. 1,-1")
    u.add_argument("--generators", default="", help="comma separated, e.g. 2,3")
    u.add_argument("--no-torsion", action="store_true")
    u.add_argument("--H", type=_csv_list(int), default=[1, 2, 3, 4])
    u.add_argument("--method", choices=("mitm", "naive"), default="mitm")
    u.set_defaults(func=cmd_sunit)

    v = sub.add_parser("verify", parents=[common], help="run an inequality suite")
    v.add_argument("suite", choices=("all", *SUITES, "balog-wooley"))
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--max-size", type=int, default=12)
    v.add_argument("--grid", type=_csv_list(str), default=["8x4", "16x8", "32x8"])
    v.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("sweep", parents=[common], help="exponent rows over family grids")
    w.add_argument("--families", type=_csv_list(str), default=["geometric", "random_few_prime"])
    w.add_argument("--sizes", type=_csv_list(int), default=[50, 100, 200, 500])
    w.add_argument("--bw", type=_csv_list(str), default=[], help="Balog-Wooley cells MxN")
    w.add_argument("--m", type=_csv_list(int), default=[3])
    w.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(_dump({"status": "budget-exceeded", "what": exc.what, "needed": exc.needed, "cap": exc.cap}))
        return EXIT_BUDGET
    except (InputError, HypothesisViolated, UnfactoredResidue, ExhaustedSampler, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(_dump({"status": "input-error", "error": type(exc).__name__, "message": str(exc)}))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
