#!/usr/bin/env python3
"""Sweep the hyperbolic-to-boundary gap over a t-ladder.

For a handful of positive-cone series over Q, evaluate the hyperbolic
series at tau = x + it for t = 1, 1/2, ..., 2^-K and record the gap to
the boundary character sum.  Writes one CSV per series plus a summary
to stdout.  The gap shrinks like 2 pi t sum |a_q| q, which makes the
first-order constant visible in the last column.
"""

import argparse
import csv
import random
from fractions import Fraction
from pathlib import Path

from nlfield.algebra import AlgebraElement
from nlfield.coeffs import EXACT, GaussRat
from nlfield.hardy import HyperPoint, series_eval_boundary, series_eval_hyper
from nlfield.numberfield import rationals


def random_cone_series(rng, max_terms=5, max_index=9):
    Q = rationals()
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        idx = Q.from_rational(rng.randint(1, max_index))
        terms[idx] = GaussRat(
            Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        )
    return AlgebraElement(Q, EXACT, terms)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--series", type=int, default=5)
    ap.add_argument("--kmax", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="ladder_out")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    outdir = Path(args.outdir)
    outdir.mkdir(exist_ok=True)
    print(f"{'series':>7} {'x':>7} {'gap@t=1':>12} {'gap@2^-K':>12} {'ratio':>8}")
    for i in range(args.series):
        f = random_cone_series(rng)
        x = rng.uniform(0, 1)
        boundary = series_eval_boundary(f, [x]).value
        rows = []
        for k in range(args.kmax + 1):
            t = 2.0 ** -k
            hyper = series_eval_hyper(f, HyperPoint((complex(x, t),), ()))
            gap = abs(hyper.value - boundary)
            rows.append((t, abs(hyper.value), hyper.bound, gap))
        path = outdir / f"ladder_{i:02d}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "abs_value", "bound", "boundary_gap"])
            w.writerows(rows)
        scale = sum(
            abs(complex(c.re) + 1j * complex(c.im)) * float(q.as_rational())
            for q, c in f.terms.items()
        )
        print(f"{i:>7} {x:>7.3f} {rows[0][3]:>12.3e} {rows[-1][3]:>12.3e} "
              f"{rows[-1][3] / (2 ** -args.kmax * scale):>8.3f}")


if __name__ == "__main__":
    main()
