"""Run the full undeterminedness analysis over every built-in code."""

from __future__ import annotations

import argparse
import sys

from qundet.cli import run
from qundet.dense import ORACLE_MAX_N


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ghz-max", type=int, default=8,
                        help="largest GHZ size to include")
    parser.add_argument("--oracle", action="store_true",
                        help="dense cross-check where the size cap allows")
    parser.add_argument("--json-dir", default=None,
                        help="also write one report JSON per code here")
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    targets: list[tuple[str, int, list[str]]] = []
    for n in range(3, args.ghz_max + 1):
        targets.append((f"ghz_{n}", n, ["--catalog", "ghz", "--n", str(n)]))
    for name, n in (("code_412", 4), ("code_513", 5),
                    ("steane_713", 7), ("code_422", 4)):
        targets.append((name, n, ["--catalog", name]))

    worst = 0
    for tag, n, target in targets:
        argv = ["analyze", *target]
        if args.oracle and n <= ORACLE_MAX_N:
            argv.append("--oracle")
        if args.json_dir:
            argv += ["--json", f"{args.json_dir}/{tag}.json"]
        rc = run(argv)
        worst = max(worst, rc)
        print()
    return worst


if __name__ == "__main__":
    sys.exit(main())
