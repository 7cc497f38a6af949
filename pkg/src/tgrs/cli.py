"""Command-line front end.

Verbs:
  construct  build a code from a family + parameters; writes the code spec
             JSON and prints/writes a report
  classify   full report (classification, self-duality, distances) for a
             code spec file
  verify     re-derive and check every structural invariant of a spec file
  matrices   dump G, H, the case tag, and the products G H^T and G G^T
  example    rebuild a bundled reference code and compare against its
             recorded verdicts
  sweep      run a family over parameter ranges; table + CSV + figure

Exit codes: 0 success, 1 validation/hypothesis failure, 2 internal
invariant violation (should never happen).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional

from .field import FieldError, field_spec, format_element, is_prime, prime_factors
from .poly import DEFAULT_SEED
from .code import CodeSpecError, TgrsCode, code_from_spec
from .analysis import (BudgetExceeded, DEFAULT_ORACLE_BUDGET, build_report,
                       classify, recover_lambda, self_dual_matrix,
                       self_dual_structural, subset_sum_witness)
from .constructions import ConstructionError, FAMILIES, build
from .examples import EXAMPLE_IDS, UnknownExampleError, run_example

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INTERNAL = 2


def _default_budget() -> int:
    raw = os.environ.get("TGRS_ORACLE_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_ORACLE_BUDGET


def _load_spec(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CodeSpecError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise CodeSpecError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}")


def _write_json(doc: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _emit_report(report, args) -> None:
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    if getattr(args, "out", None):
        _write_json(report.to_dict(), args.out)


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _family_params(args) -> dict:
    fam = args.family
    need = lambda name: getattr(args, name, None)
    if fam == "T31":
        if need("p") is None or need("l") is None:
            raise ValueError("T31 requires --p and --l")
        return {"p": args.p, "t": args.t or 1, "l": args.l,
                "b": args.b or "1", "c": args.c or "1", "seed": args.seed}
    if fam == "T33":
        if need("p") is None:
            raise ValueError("T33 requires --p")
        params = {"p": args.p, "seed": args.seed}
        if args.s is not None:
            params["s"] = args.s
        return params
    if fam == "T35":
        if need("q_prime") is None or need("b") is None or need("n") is None:
            raise ValueError("T35 requires --q-prime, --b and --n")
        return {"q_prime": args.q_prime, "b": args.b, "n": args.n,
                "seed": args.seed}
    if fam == "T36":
        if need("q") is None or need("n") is None:
            raise ValueError("T36 requires --q and --n")
        return {"q": args.q, "beta": args.beta or "1", "n": args.n,
                "j": args.j or 0}
    raise ValueError(f"unknown family {fam!r}")


def cmd_construct(args) -> int:
    result = build(args.family, **_family_params(args))
    report = build_report(result.code, budget=args.budget,
                          with_distances=not args.no_distances)
    if args.out:
        doc = result.code.to_spec()
        doc["provenance"] = result.provenance()
        _write_json(doc, args.out)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
        conds = ", ".join(result.conditions)
        print(f"provenance: family={result.family} "
              f"base_field={field_spec(result.base_field)}")
        print(f"conditions: {conds}")
        print(f"lambda_predicted: {format_element(result.predicted_lambda)}")
    if args.report:
        _write_json(report.to_dict(), args.report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# classify / matrices / verify
# ---------------------------------------------------------------------------

def cmd_classify(args) -> int:
    code = code_from_spec(_load_spec(args.spec))
    report = build_report(code, budget=args.budget)
    _emit_report(report, args)
    return EXIT_OK


def cmd_matrices(args) -> int:
    code = code_from_spec(_load_spec(args.spec))
    g = code.generator_matrix()
    h = code.check_matrix()
    ght = g * h.transpose()
    ggt = g * g.transpose()
    if args.format == "json":
        doc = {
            "schema": 1,
            "field": field_spec(code.ctx),
            "case_tag": code.case_tag.value,
            "G": g.to_strings(),
            "H": h.to_strings(),
            "G_Ht": ght.to_strings(),
            "G_Gt": ggt.to_strings(),
        }
        text = json.dumps(doc, indent=2)
    else:
        def grid(name, mat):
            rows = mat.to_strings()
            width = max((len(e) for r in rows for e in r), default=1)
            lines = [f"{name} ({mat.nrows}x{mat.ncols}):"]
            for r in rows:
                lines.append("  " + " ".join(e.rjust(width) for e in r))
            return "\n".join(lines)
        text = "\n".join([
            f"field: {field_spec(code.ctx)}",
            f"case_tag: {code.case_tag.value}",
            grid("G", g),
            grid("H", h),
            grid("G*H^T", ght),
            grid("G*G^T", ggt),
        ])
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    code = code_from_spec(_load_spec(args.spec))
    g = code.generator_matrix()
    h = code.check_matrix()
    checks: list[tuple[str, bool]] = []

    checks.append(("G*H^T = 0", (g * h.transpose()).is_zero()))
    checks.append((f"rank(G) = k = {code.k}", g.rank() == code.k))
    checks.append((f"rank(H) = n-k = {code.n - code.k}",
                   h.rank() == code.n - code.k))

    kernel = g.right_kernel()
    from .matrix import Matrix
    stacked = Matrix(code.ctx, list(h.rows) + kernel)
    checks.append(("rowspace(H) = nullspace(G)",
                   len(kernel) == code.n - code.k
                   and stacked.rank() == code.n - code.k))

    moments_ok = True
    power = [code.ctx.one()] * code.n
    for m in range(code.n):
        total = code.ctx.zero()
        for ui, pw in zip(code.u, power):
            total = total + ui * pw
        want = code.ctx.one() if m == code.n - 1 else code.ctx.zero()
        moments_ok = moments_ok and total == want
        power = [pw * ai for pw, ai in zip(power, code.alpha)]
    total = code.ctx.zero()
    for ui, pw in zip(code.u, power):
        total = total + ui * pw
    moments_ok = moments_ok and total == code.a
    checks.append(("moment identities of the weights", moments_ok))

    words_ok = True
    for i in range(code.k):
        msg = [code.ctx.zero()] * code.k
        msg[i] = code.ctx.one()
        word = code.twisted_eval(msg)
        words_ok = words_ok and all(s.is_zero() for s in code.syndrome(word))
    checks.append(("syndromes of basis codewords vanish", words_ok))

    if code.n == 2 * code.k:
        structural = self_dual_structural(code)
        checks.append(("structural and matrix self-duality agree",
                       structural.self_dual == self_dual_matrix(code)))

    cls = classify(code)
    if cls.verdict == "NMDS":
        total = code.ctx.zero()
        for pos in cls.witness:
            total = total + code.alpha[pos - 1]
        sound = total == -code.eta.inverse()
        cols = [g.column(pos - 1) for pos in cls.witness]
        sub = Matrix(code.ctx, list(zip(*cols)))
        sound = sound and sub.rank() == code.k - 1
        checks.append(("NMDS witness is sound", sound))

    ok = all(flag for _, flag in checks)
    for name, flag in checks:
        print(f"{'ok  ' if flag else 'FAIL'} {name}")
    print(f"verify: {'PASS' if ok else 'FAIL'} ({len(checks)} checks)")
    return EXIT_OK if ok else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# example
# ---------------------------------------------------------------------------

def cmd_example(args) -> int:
    run = run_example(args.id, budget=args.budget)
    if args.format == "json":
        doc = {
            "schema": 1,
            "example": run.example_id,
            "passed": run.passed,
            "checks": [{"label": c.label, "expected": c.expected,
                        "got": c.got, "ok": c.ok} for c in run.checks],
            "report": run.report.to_dict(),
        }
        print(json.dumps(doc, indent=2))
    else:
        width = max(len(c.label) for c in run.checks)
        ewidth = max(len(c.expected) for c in run.checks)
        print(f"example {run.example_id}")
        for c in run.checks:
            mark = "ok  " if c.ok else "FAIL"
            print(f"  {mark} {c.label.ljust(width)}  expected {c.expected.ljust(ewidth)}"
                  f"  got {c.got}")
        print(f"example {run.example_id}: {'PASS' if run.passed else 'FAIL'}")
    return EXIT_OK if run.passed else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _parse_int_axis(raw: str, prime_powers_only: bool = False) -> list[int]:
    """Comma list of ints; `lo:hi` tokens expand inclusively (odd prime
    powers only when prime_powers_only is set)."""
    out: list[int] = []
    for token in raw.split(","):
        token = token.strip()
        if ":" in token:
            lo, hi = token.split(":", 1)
            for q in range(int(lo), int(hi) + 1):
                if prime_powers_only:
                    if q % 2 and len(prime_factors(q)) == 1:
                        out.append(q)
                else:
                    out.append(q)
        elif token:
            out.append(int(token))
    return out


def _parse_str_axis(raw: str) -> list[str]:
    return [tok.strip() for tok in raw.split(",") if tok.strip()]


def _t36_valid_lengths(q: int) -> list[int]:
    return [m - 1 for m in range(3, q, 2) if (q - 1) % m == 0 and (m - 1) % 2 == 0]


def _sweep_points(args) -> list[dict]:
    fam = args.family
    points = []
    if fam == "T31":
        ps = _parse_int_axis(args.p or "3,5")
        ts = _parse_int_axis(args.t_axis or "1")
        ls = _parse_int_axis(args.l or "1,2")
        bs = _parse_str_axis(args.b or "1")
        cs = _parse_str_axis(args.c or "1")
        for p in ps:
            for t in ts:
                for l in ls:
                    for b in bs:
                        for c in cs:
                            points.append({"p": p, "t": t, "l": l,
                                           "b": b, "c": c, "seed": args.seed})
    elif fam == "T33":
        for p in _parse_int_axis(args.p or "5,7,11"):
            points.append({"p": p, "seed": args.seed})
    elif fam == "T35":
        qs = _parse_int_axis(args.q_prime or "3:49", prime_powers_only=True)
        bs = _parse_str_axis(args.b or "1,2")
        ns = _parse_int_axis(args.n_axis or "4,6,8")
        for q in qs:
            for b in bs:
                for n in ns:
                    points.append({"q_prime": q, "b": b, "n": n,
                                   "seed": args.seed})
    elif fam == "T36":
        qs = _parse_int_axis(args.q or "3:89", prime_powers_only=True)
        betas = _parse_str_axis(args.beta or "1")
        js = _parse_int_axis(args.j_axis or "0")
        for q in qs:
            if args.n_axis and args.n_axis != "auto":
                ns = _parse_int_axis(args.n_axis)
            else:
                ns = _t36_valid_lengths(q)
            for beta in betas:
                for n in ns:
                    for j in js:
                        points.append({"q": q, "beta": beta, "n": n, "j": j})
    else:
        raise ValueError(f"unknown family {fam!r}")
    return points


_SWEEP_COLUMNS = ["family", "p", "t", "l", "b", "c", "q", "q_prime", "beta",
                  "n", "j", "s", "built", "error_hypothesis", "error_detail",
                  "field", "k", "case_tag", "classification",
                  "self_dual_matrix", "self_dual_structural",
                  "lambda_predicted", "lambda_recovered", "lambda_match"]


def _sweep_row(family: str, point: dict, do_classify: bool) -> dict:
    row = {col: "" for col in _SWEEP_COLUMNS}
    row["family"] = family
    for key, value in point.items():
        if key != "seed" and key in row:
            row[key] = value
    try:
        result = build(family, **point)
    except ConstructionError as exc:
        row["built"] = False
        row["error_hypothesis"] = exc.hypothesis
        row["error_detail"] = exc.detail
        return row
    code = result.code
    row["built"] = True
    for key, value in result.params.items():
        if key in row:
            row[key] = value
    row["field"] = field_spec(code.ctx)
    row["n"] = code.n
    row["k"] = code.k
    row["case_tag"] = code.case_tag.value
    sd_matrix = self_dual_matrix(code)
    structural = self_dual_structural(code)
    row["self_dual_matrix"] = sd_matrix
    row["self_dual_structural"] = structural.self_dual
    recovered = recover_lambda(code)
    row["lambda_predicted"] = format_element(result.predicted_lambda)
    row["lambda_recovered"] = (format_element(recovered)
                               if recovered is not None else "")
    row["lambda_match"] = recovered == result.predicted_lambda
    if do_classify:
        row["classification"] = classify(code).verdict
    return row


def cmd_sweep(args) -> int:
    points = _sweep_points(args)
    rows = [_sweep_row(args.family, pt, not args.no_classify) for pt in points]

    built = [r for r in rows if r["built"]]
    refused = [r for r in rows if not r["built"]]
    mds = sum(1 for r in built if r["classification"] == "MDS")
    nmds = sum(1 for r in built if r["classification"] == "NMDS")

    if args.format == "json":
        print(json.dumps({"schema": 1, "family": args.family,
                          "rows": rows}, indent=2, default=str))
    else:
        for r in rows:
            params = " ".join(f"{k}={r[k]}" for k in
                              ("p", "t", "l", "b", "c", "q", "q_prime",
                               "beta", "n", "j") if r[k] != "")
            if r["built"]:
                extra = f" {r['classification']}" if r["classification"] else ""
                print(f"{r['family']} {params} -> built "
                      f"self_dual={str(r['self_dual_matrix']).lower()} "
                      f"lambda_match={str(r['lambda_match']).lower()}{extra}")
            else:
                print(f"{r['family']} {params} -> refused "
                      f"({r['error_hypothesis']}: {r['error_detail']})")
        print(f"sweep: {len(rows)} points, {len(built)} built "
              f"(MDS: {mds}, NMDS: {nmds}), {len(refused)} refused")

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=_SWEEP_COLUMNS)
            writer.writeheader()
            for r in rows:
                writer.writerow(r)
        if not args.no_figure:
            from .plotting import render_sweep_figure
            figure_path = args.figure or os.path.splitext(args.out)[0] + ".png"
            render_sweep_figure(rows, figure_path,
                                title=f"{args.family} sweep")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgrs",
        description="Construct, classify, and verify twisted generalized "
                    "Reed-Solomon codes over odd-characteristic finite fields.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, budget=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if budget:
            p.add_argument("--budget", type=int, default=_default_budget(),
                           help="max column subsets for the distance oracles "
                                "(env TGRS_ORACLE_BUDGET)")

    p = sub.add_parser("construct", help="build a code from a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--q")
    p.add_argument("--q-prime", dest="q_prime")
    p.add_argument("--beta")
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="write the code spec JSON here")
    p.add_argument("--report", help="write the report JSON here")
    p.add_argument("--no-distances", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", help="report on a code spec file")
    p.add_argument("spec")
    p.add_argument("--out", help="write the report JSON here")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check structural invariants of a spec")
    p.add_argument("spec")
    add_common(p, budget=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matrices", help="dump G, H, and their products")
    p.add_argument("spec")
    p.add_argument("--out")
    add_common(p, budget=False)
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("example", help="rebuild a bundled reference code")
    p.add_argument("id", help=f"one of: {', '.join(EXAMPLE_IDS)}")
    add_common(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("sweep", help="run a family over parameter ranges")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--p", help="comma list / lo:hi range")
    p.add_argument("--t", dest="t_axis")
    p.add_argument("--l")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--q", help="odd prime powers from a comma list / lo:hi range")
    p.add_argument("--q-prime", dest="q_prime")
    p.add_argument("--beta")
    p.add_argument("--n", dest="n_axis", help="comma list, or `auto` for T36")
    p.add_argument("--j", dest="j_axis")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="write the row table as CSV here")
    p.add_argument("--figure", help="figure path (default: CSV path with .png)")
    p.add_argument("--no-figure", action="store_true")
    p.add_argument("--no-classify", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (CodeSpecError, UnknownExampleError, BudgetExceeded,
            FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
