"""Walk the (p, q, alpha, beta) parameter space and print verdicts.

Usage:
    python3 regime_map.py [--N 3]

First replays the full built-in verdict table for dimension N and reports
whether every row matches its expected verdict and clause.  Then classifies
a handful of individual tuples to show the three possible outcomes.
"""

import argparse

from logriesz import ProblemParams, Side, UClass, classify, emit_regime_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, default=3)
    args = ap.parse_args()

    records = emit_regime_table(args.N)
    bad = [rec for rec in records if not rec.match]
    print(f"built-in table, N={args.N}: {len(records)} instantiations, "
          f"{len(bad)} mismatches")
    for rec in bad:
        print(f"  row {rec.row_id}: expected {rec.expected_verdict}/"
              f"{rec.expected_clause}, got {rec.verdict}/{rec.clause}")

    samples = [
        # (side, p, q, alpha, beta, u_class)
        (Side.PPLUS, 2.0, 4.0, 1.0, -1.5, UClass.GENERAL),
        (Side.PPLUS, 1.0, 1.0, 1.0, 0.0, UClass.GENERAL),
        (Side.PPLUS, 4.0, 1.0, 1.0, -1.5, UClass.GENERAL),
        (Side.PPLUS, 2.0, 1.5, 3.0, 1.0, UClass.GENERAL),
        (Side.PMINUS, 0.5, 1.0, 1.0, 0.0, UClass.BOUNDED),
        (Side.PMINUS, 0.5, 1.0, 1.0, 0.0, UClass.GENERAL),
    ]
    print()
    print(f"{'side':>5} {'p':>4} {'q':>4} {'alpha':>6} {'beta':>6} {'class':>8}"
          f"  verdict      clause")
    for side, p, q, alpha, beta, ucls in samples:
        decision = classify(ProblemParams(side, args.N, p, q, alpha, beta,
                                          u_class=ucls))
        print(f"{side.value:>5} {p:>4g} {q:>4g} {alpha:>6g} {beta:>6g} "
              f"{ucls.value:>8}  {decision.verdict.value:<12} {decision.clause}")


if __name__ == "__main__":
    main()
