"""Compare secret-sharing variants against the delaying receiver.

Runs the four variant/strategy combinations at a common seed and
prints the quantities that separate them: what the attacker learns on
his own and how often forged rounds trip the check.
"""

from __future__ import annotations

import argparse
import sys

from qundet.protocols import QssConfig, qss_run


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rounds", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--check-fraction", type=float, default=0.2)
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    print(f"{args.rounds} rounds, seed {args.seed}")
    print(f"{'variant':<10} {'strategy':<18} {'keep':>6} {'agree':>6} "
          f"{'chkerr':>6} {'solo':>6} {'detect':>6} {'abort':>6}")
    for variant in ("original", "modified"):
        for strategy in ("honest", "delay_discriminate"):
            stats = qss_run(QssConfig(
                variant=variant,
                strategy=strategy,
                rounds=args.rounds,
                seed=args.seed,
                check_fraction=args.check_fraction,
            ))
            solo = ("-" if stats.attacker_solo_accuracy is None
                    else f"{stats.attacker_solo_accuracy:.3f}")
            detect = ("-" if stats.per_forged_round_detection is None
                      else f"{stats.per_forged_round_detection:.3f}")
            print(f"{variant:<10} {strategy:<18} {stats.keep_rate:6.3f} "
                  f"{stats.honest_key_agreement:6.3f} "
                  f"{stats.check_error_rate:6.3f} {solo:>6} {detect:>6} "
                  f"{str(stats.aborted):>6}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
