# run_suites.py
import argparse
import logging
import sys
from pathlib import Path

from core.config import DEFAULT_BUDGET_MS, DEFAULT_SEED, LOG_FORMAT, LOG_LEVEL
from core.suites import SUITE_NAMES, SuiteOptions, run


def parse_args(argv=None):
    p = argparse.ArgumentParser(
        description="Exact verification suites for Kummer-type K3 surfaces in characteristic 2"
    )
    p.add_argument("--suite", choices=list(SUITE_NAMES) + ["all"], default="all")

    # Field & parameters
    p.add_argument("--field", default=None, help='"2^k" or "2^k/0xMOD"; replaces both default fields')
    p.add_argument("--params", default=None, help="4 hex values (Weddle p6) or 12 (congruence)")

    # Sampling
    p.add_argument("--samples", type=int, default=None, help="Override every sampled count")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget-ms", type=int, default=DEFAULT_BUDGET_MS, help="Wall-clock budget per suite")

    # Output
    p.add_argument("--json", default=None, help="Write the JSON report to this path")
    p.add_argument("--quiet", action="store_true", help="Only warnings on the console")
    return p, p.parse_args(argv)


def main(argv=None) -> int:
    parser, args = parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else LOG_LEVEL, format=LOG_FORMAT)

    try:
        options = SuiteOptions.build(
            field=args.field,
            seed=args.seed,
            samples=args.samples,
            params=args.params,
            budget_ms=args.budget_ms,
        )
    except ValueError as e:
        parser.error(str(e))

    print("=" * 60)
    print(f"Suite: {args.suite}  |  fields {options.describe()}  |  seed {options.seed}")
    print("=" * 60)

    report = run(args.suite, options)

    print(report.to_table())
    print(f"\nResult: {report.status}  {report.counts()}")

    if args.json:
        Path(args.json).write_text(report.to_json())
        print(f"JSON report written to {args.json}")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
