"""Command-line driver: `severi analyze ...` and `severi verify-paper LABEL`.

Exit codes: 0 = everything requested completed, 2 = some analysis ran out
of budget (partial results are still emitted), 1 = error.
"""

from __future__ import annotations

import argparse
import sys

from .reports import RunConfig, run, scorecard_text, serialize, verify_paper
from .ring import PolyError
from .singularities import CATALOG


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="severi",
                                  description="Severi strata of quasihomogeneous "
                                              "plane-curve singularities")
    sub = top.add_subparsers(dest="command", required=True)

    az = sub.add_parser("analyze", help="compute matrices, strata and checks")
    az.add_argument("label", nargs="?", default=None,
                    help=f"catalog label ({', '.join(sorted(CATALOG))})")
    az.add_argument("--f", dest="f_expr", help="custom equation, e.g. 'x^3+y^4'")
    az.add_argument("--weights", help="weights WX,WY for the custom equation")
    az.add_argument("--strata", help="comma-separated stratum indices k")
    az.add_argument("--betti", action="store_true",
                    help="minimal free resolutions / Cohen-Macaulay checks")
    az.add_argument("--poisson", action="store_true", help="Poisson-closure checks")
    az.add_argument("--rank-tests", action="store_true",
                    help="rank of the skew Gram matrix at nodal sample points")
    az.add_argument("--presentations", action="store_true",
                    help="emit the module presentation matrices")
    az.add_argument("--lie-check", action="store_true",
                    help="Lie-bracket closure of the Gram-matrix columns")
    az.add_argument("--trunc", type=int, help="series precision override")
    az.add_argument("--budget", type=float, help="seconds per heavy computation")
    az.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    az.add_argument("--cache", dest="cache_dir", help="report cache directory")
    az.add_argument("--no-cache", action="store_true", help="bypass the cache")

    vp = sub.add_parser("verify-paper", help="run every published comparison")
    vp.add_argument("label", help=f"catalog label ({', '.join(sorted(CATALOG))})")
    vp.add_argument("--budget", type=float, help="seconds per heavy computation")
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify-paper":
            rows = verify_paper(args.label, args.budget)
            sys.stdout.write(scorecard_text(rows))
            if any(r["status"] == "fail" for r in rows):
                return 1
            if any(r["status"] == "budget" for r in rows):
                return 2
            return 0
        strata = None
        if args.strata:
            strata = [int(k) for k in args.strata.split(",") if k.strip()]
        weights = None
        if args.weights:
            weights = tuple(int(w) for w in args.weights.split(","))
            if len(weights) != 2:
                raise PolyError("--weights takes exactly two integers WX,WY")
        config = RunConfig(label=args.label, f_expr=args.f_expr, weights=weights,
                           strata=strata, betti=args.betti, poisson=args.poisson,
                           rank_tests=args.rank_tests,
                           presentations=args.presentations,
                           lie_check=args.lie_check, trunc=args.trunc,
                           budget=args.budget, fmt=args.fmt,
                           cache_dir=args.cache_dir, no_cache=args.no_cache)
        report = run(config)
        sys.stdout.write(serialize(report, config.fmt))
        return 2 if report.get("budget_exceeded") else 0
    except (PolyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
