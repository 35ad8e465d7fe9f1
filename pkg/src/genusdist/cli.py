"""Command-line surface: compute, verify, analyze, export.

Exit status: 0 on success, 1 on computation errors (budget exceeded, bad
input values), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .graphcore import BudgetExceeded, DEFAULT_BUDGET, crosscap_distribution
from .polyalg import LaurentPoly
from .serialize import (
    FormatError,
    bivar_to_json_dict,
    gf_to_json_dict,
    load_graph,
    poly_to_json_dict,
)

ENV_PREFIX = "GENUSDIST_"


def _env_default(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return fallback
    kind = type(fallback) if fallback is not None else str
    return kind(raw) if kind is not str else raw


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusdist",
        description="Exact genus and Euler-genus distributions of multigraphs and graph families.",
    )
    parser.add_argument("--budget", type=int, default=_env_default("budget", DEFAULT_BUDGET),
                        help="maximum number of embeddings an enumeration may visit")
    parser.add_argument("--workers", type=int, default=_env_default("workers", 0),
                        help="worker hint; execution is deterministic regardless")
    parser.add_argument("--format", choices=("text", "json", "tsv"),
                        default=_env_default("format", "text"))
    parser.add_argument("--seed", type=int, default=_env_default("seed", 0),
                        help="seed for any randomized checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus", help="genus distribution of a graph (exact enumeration)")
    p.add_argument("graph", help="graph file (text or JSON format)")

    p = sub.add_parser("euler", help="Euler-genus distribution of a graph")
    p.add_argument("graph")
    p.add_argument("--crosscap", action="store_true", help="also print the crosscap distribution")

    p = sub.add_parser("family", help="series or generating function of a graph family")
    p.add_argument("spec", help="family spec JSON, or one of: cn2, cn3, grid3")
    p.add_argument("--mode", choices=("genus", "euler"), default=_env_default("mode", None))
    p.add_argument("--series", type=int, metavar="N", help="emit the first N polynomials")
    p.add_argument("--gf", action="store_true", help="reconstruct the rational generating function")
    p.add_argument("--pmax", type=int, default=_env_default("pmax", None))
    p.add_argument("--qmax", type=int, default=_env_default("qmax", None))
    p.add_argument("--guard", type=int, default=_env_default("guard", 3))

    p = sub.add_parser("partials", help="D/S partial distributions at two pendant marks")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--mode", choices=("genus", "euler"), default=_env_default("mode", "genus"))

    p = sub.add_parser("ped", help="ten-type partial Euler-genus vector at two degree-2 marks")
    p.add_argument("graph")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)

    p = sub.add_parser("tables", help="regenerate the ten-type transition tables")
    p.add_argument("--derive", action="store_true", help="emit the regenerated tables")
    p.add_argument("--diff", action="store_true", help="emit the printed-vs-regenerated diff report")

    p = sub.add_parser("asympt", help="dominant singularity and moments of a GF denominator")
    p.add_argument("gf", help="generating function JSON file ({num, den})")
    p.add_argument("--at", default="1", help="evaluation point x0 (rational, default 1)")

    p = sub.add_parser("normality", help="KS distances of a coefficient sequence to a normal law")
    p.add_argument("source", help="cn2-genus, cn2-euler, or a family spec JSON file")
    p.add_argument("--ns", type=int, nargs="+", required=True)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--sigma2", type=float, default=None)

    p = sub.add_parser("verify", help="run the self-contained fixture battery")
    p.add_argument("--full", action="store_true", help="include the slower reconstruction checks")

    return parser


def emit(result, fmt: str) -> str:
    """Serialize a result value for the chosen output format."""
    if isinstance(result, LaurentPoly):
        if result.is_zero():
            raise ValueError("zero polynomial is not a valid distribution output")
        if fmt == "json":
            return json.dumps(poly_to_json_dict(result))
        if fmt == "tsv":
            return "\n".join(f"{e}\t{result.terms[e]}" for e in sorted(result.terms))
        return result.pretty()
    if isinstance(result, dict):
        if fmt == "json":
            return json.dumps(result, indent=2, default=str)
        if fmt == "tsv":
            return "\n".join(f"{k}\t{v}" for k, v in result.items())
        return "\n".join(f"{k}: {v}" for k, v in result.items())
    if isinstance(result, list):
        if fmt == "json":
            return json.dumps(result, indent=2, default=str)
        return "\n".join(str(r) for r in result)
    return str(result)


def _stock_family(name: str, mode: str | None, budget: int):
    from . import transfer

    mode = mode or "genus"
    if name == "cn2":
        return transfer.cn2_family("circular", mode, budget)
    if name == "cn3":
        return transfer.cn3_family("circular", mode, budget)
    if name == "grid3":
        return transfer.grid3_family(mode, budget)
    return None


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        if args.command == "genus":
            from .graphcore import genus_distribution_oracle

            graph = load_graph(_read(args.graph))
            print(emit(genus_distribution_oracle(graph, args.budget).poly(), fmt))
        elif args.command == "euler":
            from .graphcore import euler_distribution_oracle

            graph = load_graph(_read(args.graph))
            dist = euler_distribution_oracle(graph, args.budget)
            print(emit(dist.poly(), fmt))
            if args.crosscap:
                print(emit(crosscap_distribution(dist).poly(), fmt))
        elif args.command == "family":
            from .serialize import family_from_json_dict
            from .transfer import family_rational_gf, family_series

            fam = _stock_family(args.spec, args.mode, args.budget)
            if fam is None:
                fam = family_from_json_dict(json.loads(_read(args.spec)), args.mode)
            if not args.series and not args.gf:
                parser.error("family needs --series N and/or --gf")
            if args.series:
                series = family_series(fam, args.series)
                for n, poly in enumerate(series, start=1):
                    print(f"{fam.index_description(n)}: {emit(poly, 'text')}"
                          if fmt == "text" else emit(poly, fmt))
            if args.gf:
                gf = family_rational_gf(fam, p_max=args.pmax, q_max=args.qmax, guard=args.guard)
                if fmt == "json":
                    print(json.dumps(gf_to_json_dict(gf), indent=2))
                else:
                    print("numerator:  ", gf.num.pretty())
                    print("denominator:", gf.den.pretty())
                    print(fam.index_description(1))
        elif args.command == "partials":
            from .distributions import partial_pair_oracle

            graph = load_graph(_read(args.graph))
            pair = partial_pair_oracle(graph, args.u, args.v, args.mode, args.budget)
            print(emit({"D": pair.d_poly.pretty(), "S": pair.s_poly.pretty()}, fmt))
        elif args.command == "ped":
            from .distributions import ped_vector_oracle

            graph = load_graph(_read(args.graph))
            vec = ped_vector_oracle(graph, args.s, args.t, args.budget)
            print(emit({k: v.pretty() for k, v in vec.components.items()}, fmt))
        elif args.command == "tables":
            from .distributions import diff_tables_report, transition_tables

            if not args.derive and not args.diff:
                parser.error("tables needs --derive and/or --diff")
            tables = transition_tables()
            if args.derive:
                print(json.dumps(tables.to_json_dict(), indent=2) if fmt == "json"
                      else emit(tables.to_json_dict(), "text"))
            if args.diff:
                print(diff_tables_report(tables))
        elif args.command == "asympt":
            from .asympt import mean_variance_at
            from .serialize import gf_from_json_dict

            gf = gf_from_json_dict(json.loads(_read(args.gf)))
            report = mean_variance_at(gf.den, Fraction(args.at))
            print(emit({
                "x0": str(report.x0),
                "dominant_root": str(report.root),
                "exact": report.exact,
                "simple": report.simple,
                "unique_minimum": report.unique_minimum,
                "mean": str(report.mean),
                "variance": str(report.variance),
            }, fmt))
        elif args.command == "normality":
            from .asympt import normality_report
            from .distributions import cn2_recurrences

            if args.source == "cn2-genus":
                series = cn2_recurrences("genus", max(args.ns))
                mu, s2 = 0.25, 3 / 32
            elif args.source == "cn2-euler":
                series = cn2_recurrences("euler", max(args.ns))
                mu, s2 = 5 / 7, 78 / 343
            else:
                from .serialize import family_from_json_dict
                from .transfer import family_series

                fam = family_from_json_dict(json.loads(_read(args.source)))
                series = family_series(fam, max(args.ns))
                mu, s2 = args.mu, args.sigma2
                if mu is None or s2 is None:
                    parser.error("custom sources need --mu and --sigma2")
            mu = args.mu if args.mu is not None else mu
            s2 = args.sigma2 if args.sigma2 is not None else s2
            rows = normality_report(series, args.ns, mu, s2)
            if fmt == "tsv":
                print("n\tmean\tvariance\tks")
                for r in rows:
                    print(f"{r['n']}\t{r['mean']:.6f}\t{r['variance']:.6f}\t{r['ks']:.6f}")
            else:
                print(emit(rows, fmt))
        elif args.command == "verify":
            from .verify import format_report, run_verify

            results = run_verify(full=args.full, budget=args.budget)
            print(format_report(results))
            if any(not r.ok and not r.informational for r in results):
                return 1
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc} (raise --budget to proceed)", file=sys.stderr)
        return 1
    except (FormatError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
