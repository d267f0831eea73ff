"""Command-line interface: ``hhbv verify | delta-table | fixtures | eval``.

Exit codes: 0 when everything checked passes, 1 when violations or table
mismatches are found, 2 for usage and configuration errors.  Output is
deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from .algebra import indicator_dual
from .bv import NotACocycle, cup, delta, gerstenhaber_bracket
from .catalog import (
    delta_table,
    evaluate,
    parse_expr,
    reduce_class,
    same_class,
    table_inputs,
    monomial_cochain,
)
from .coeff import parse_poly, poly_str
from .fixtures import run_fixtures
from .verify import COHOMOLOGY_SUITES, ENGINE_SUITES, run_all

MIN_DEGREE_FOR_BRACKETS = 5

# suites that certify the engine itself; the ideal relations are claims
# about the cohomology ring and do not gate the Delta table
PRECONDITION_SUITES = ENGINE_SUITES + tuple(s for s in COHOMOLOGY_SUITES if s != "ideal_relations")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    max_degree: int = 6
    d: list = field(default_factory=lambda: ["symbolic"])
    out: str | None = None
    format: str = "json"
    samples: int = 64
    seed: int = 0
    force: bool = False
    dual: str = "form"

    def substitutions(self) -> list[tuple[str, int | None]]:
        """``(label, polynomial or None)`` for each requested value of d."""
        out = []
        for s in self.d:
            if s == "symbolic":
                out.append(("symbolic", None))
                continue
            try:
                q = parse_poly(s)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
            out.append((poly_str(q), q))
        return out

    def dual_of(self):
        return indicator_dual if self.dual == "indicator" else None


# -- output ------------------------------------------------------------------------------

def _config_json(cfg: RunConfig) -> dict:
    """The configuration as recorded in reports (the output path is not part
    of the report, so reports written to different files stay identical)."""
    data = asdict(cfg)
    del data["out"]
    return data


def _emit(cfg: RunConfig, payload, markdown: str) -> None:
    text = markdown if cfg.format == "markdown" else json.dumps(payload, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _md_table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        lines.append("| " + " | ".join(str(c).replace("|", "\\|") for c in r) + " |")
    return "\n".join(lines) + "\n"


# -- verify --------------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> int:
    reports = run_all(cfg.max_degree, cfg.samples, cfg.seed)
    ok = all(r["passed"] for r in reports)
    payload = {"config": _config_json(cfg), "passed": ok, "suites": reports}
    md = "# verify\n\n" + _md_table(
        ["suite", "passed", "checked", "violations"],
        [[r["suite"], r["passed"], r["checked"], len(r["violations"])] for r in reports])
    for r in reports:
        if r["violations"]:
            md += f"\n## {r['suite']}\n\n" + "".join(f"- `{json.dumps(v)}`\n" for v in r["violations"])
    _emit(cfg, payload, md)
    return 0 if ok else 1


# -- delta-table -----------------------------------------------------------------------------

def _table_degree() -> int:
    return max(monomial_cochain(m).degree for m in table_inputs())


def _same_class_at(sym: str, got: str, degree: int, q) -> bool:
    """Whether the symbolic normal form ``sym`` specialized at ``d = q``
    names the same class as ``got``."""
    a = evaluate(parse_expr(sym).substitute(q), degree, subst=q)
    b = evaluate(got, degree, subst=q)
    return same_class(a, b, q)


def cmd_delta_table(cfg: RunConfig) -> int:
    if cfg.max_degree < MIN_DEGREE_FOR_BRACKETS:
        raise ConfigError(f"delta-table needs --max-degree >= {MIN_DEGREE_FOR_BRACKETS}")
    pre = None
    if not cfg.force:
        pre = run_all(cfg.max_degree, cfg.samples, cfg.seed, suites=PRECONDITION_SUITES)
        failed = [r["suite"] for r in pre if not r["passed"]]
        if failed:
            _emit(cfg, {"config": _config_json(cfg), "precondition_failed": failed},
                  "# delta-table\n\nprecondition failed: " + ", ".join(failed) + "\n")
            return 1
    subs = cfg.substitutions()
    dual_of = cfg.dual_of()
    symbolic = delta_table(None, dual_of)
    tables = {}
    for label, q in subs:
        tables[label] = symbolic if q is None else delta_table(q, dual_of)
    # three-way comparison: reference, symbolic engine, specialization
    diff = []
    for label, q in subs:
        for i, row in enumerate(tables[label]):
            sym = symbolic[i]
            consistent = True
            if q is not None and row["degree"] > 0 and None not in (sym["delta"], row["delta"]):
                consistent = _same_class_at(sym["delta"], row["delta"], row["degree"] - 1, q)
            if not row["match"] or not consistent:
                diff.append({"d": label, "input": row["input"], "reference": row["reference"],
                             "symbolic": sym["delta"], "computed": row["delta"],
                             "matches_reference": row["match"],
                             "consistent_with_symbolic": consistent})
    payload = {
        "config": {**_config_json(cfg), "effective_max_degree": max(cfg.max_degree, _table_degree())},
        "tables": tables,
        "diff": diff,
    }
    md = "# Delta table\n"
    for label in tables:
        md += f"\n## d = {label}\n\n" + _md_table(
            ["input", "degree", "Delta", "reference", "match"],
            [[r["input"], r["degree"], r["delta"], r["reference"], r["match"]] for r in tables[label]])
    md += "\n## diff\n\n" + (_md_table(
        ["d", "input", "reference", "symbolic", "computed"],
        [[x["d"], x["input"], x["reference"], x["symbolic"], x["computed"]] for x in diff]) if diff else "none\n")
    _emit(cfg, payload, md)
    return 1 if diff else 0


# -- fixtures ----------------------------------------------------------------------------------

def cmd_fixtures(cfg: RunConfig, select=None) -> int:
    rows = run_fixtures(select)
    payload = {"fixtures": rows, "matched": sum(r["match"] for r in rows),
               "mismatched": sum(not r["match"] for r in rows)}
    md = "# fixtures\n\n" + _md_table(
        ["fixture-id", "paper-value", "computed-value", "match"],
        [[r["fixture-id"], r["paper-value"], r["computed-value"], r["match"]] for r in rows])
    _emit(cfg, payload, md)
    return 0  # mismatches are errata data, never failures


# -- eval ----------------------------------------------------------------------------------------

def _result_degree(op: str, degs: list[int]) -> int:
    return {"cup": sum(degs), "bracket": sum(degs) - 1, "delta": degs[0] - 1}[op]


def eval_expr(op: str, exprs: list[str], cfg: RunConfig) -> list[dict]:
    arity = {"cup": 2, "bracket": 2, "delta": 1}[op]
    if len(exprs) != arity:
        raise ConfigError(f"{op} takes {arity} expression(s), got {len(exprs)}")
    try:
        polys = [parse_expr(e) for e in exprs]
        degs = [p.degree() for p in polys]
    except ValueError as exc:
        raise ConfigError(f"parse error: {exc}") from None
    if any(dg is None for dg in degs):
        raise ConfigError("zero expressions have no degree; give a nonzero expression")
    out_deg = _result_degree(op, degs)
    needed = max(degs + [out_deg])
    if needed > cfg.max_degree:
        raise ConfigError(f"{op} of degree-{degs} inputs needs bar degree {needed} > --max-degree {cfg.max_degree}")
    if op == "bracket" and cfg.max_degree < MIN_DEGREE_FOR_BRACKETS:
        raise ConfigError(f"bracket needs --max-degree >= {MIN_DEGREE_FOR_BRACKETS}")
    if out_deg < 0:
        raise ConfigError(f"{op} of degree-{degs} inputs has negative degree")
    fs = [evaluate(p) for p in polys]
    try:
        if op == "cup":
            raw = cup(*fs)
        elif op == "bracket":
            raw = gerstenhaber_bracket(*fs)
        else:
            raw = delta(fs[0], dual_of=cfg.dual_of())
    except NotACocycle as exc:
        raise ConfigError(str(exc)) from None
    results = []
    for label, q in cfg.substitutions():
        r = raw if q is None else raw.substitute(q)
        nf, reduced = reduce_class(r, (), q)
        results.append({"op": op, "args": [str(p) for p in polys], "d": label, "degree": r.degree,
                        "value": str(nf) if nf is not None else None,
                        "raw": r.to_json(), "raw_value": str(r),
                        "reduced_by_coboundary": reduced})
    return results


def cmd_eval(cfg: RunConfig, op: str, exprs: list[str]) -> int:
    results = eval_expr(op, exprs, cfg)
    payload = results[0] if len(results) == 1 else results
    md = "".join(f"{r['op']}({', '.join(r['args'])}) at d = {r['d']}: {r['value']}"
                 f"  [raw {r['raw_value']}{', reduced by a coboundary' if r['reduced_by_coboundary'] else ''}]\n"
                 for r in results)
    _emit(cfg, payload, md)
    return 0


# -- argument parsing --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=6, help="bar resolution truncation (default 6)")
    common.add_argument("--d", action="append", metavar="POLY|symbolic",
                        help="value of d: a polynomial such as 0, 1, d+1, or 'symbolic' (repeatable)")
    common.add_argument("--format", choices=("json", "markdown"), default="json")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--samples", type=int, default=64, help="sampled triples for the Poisson suite")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--force", action="store_true", help="skip the verification precondition")
    common.add_argument("--dual", choices=("form", "indicator"), default="form",
                        help="dual basis used by Delta: of the socle form (default) or of the 0/1 indicator pairing")

    p = argparse.ArgumentParser(prog="hhbv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run every verification suite")
    sub.add_parser("delta-table", parents=[common], help="Delta on generators and pairwise products, diffed")
    fx = sub.add_parser("fixtures", parents=[common], help="recompute transcribed values and diff them")
    fx.add_argument("--select", metavar="IDS",
                    help="comma-separated fixture id prefixes (an empty string selects nothing)")
    ev = sub.add_parser("eval", parents=[common], help="evaluate cup, bracket or delta")
    ev.add_argument("op", choices=("cup", "bracket", "delta"))
    ev.add_argument("exprs", nargs="+", metavar="EXPR")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    cfg = RunConfig(max_degree=args.max_degree, d=args.d or ["symbolic"], out=args.out, format=args.format,
                    samples=args.samples, seed=args.seed, force=args.force, dual=args.dual)
    try:
        if cfg.max_degree < 1:
            raise ConfigError("--max-degree must be positive")
        cfg.substitutions()  # validate --d early
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "delta-table":
            return cmd_delta_table(cfg)
        if args.command == "fixtures":
            select = None if args.select is None else [s for s in args.select.split(",") if s]
            return cmd_fixtures(cfg, select)
        return cmd_eval(cfg, args.op, args.exprs)
    except ConfigError as exc:
        print(f"hhbv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
