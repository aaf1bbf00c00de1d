#!/usr/bin/env python3
"""Run every verification suite and dump the JSON reports.

A thicker version of `nlfield verify all`: larger sample counts, wall
times per suite, and one report file per suite for later diffing.
"""

import argparse
import json
import time
from pathlib import Path

from nlfield.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--outdir", default="suite_reports")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(exist_ok=True)
    failures = 0
    for name in SUITES:
        t0 = time.perf_counter()
        rep = run_suite(name, seed=args.seed, samples=args.samples)
        dt = time.perf_counter() - t0
        (outdir / f"{name}.json").write_text(json.dumps(rep, indent=2) + "\n")
        bad = [c for c in rep["checks"] if not c["passed"]]
        failures += len(bad)
        print(f"{name:>10}: {len(rep['checks']) - len(bad)}/{len(rep['checks'])} "
              f"checks in {dt:.1f}s")
        for c in bad:
            print(f"           FAIL {c['name']}  {c['detail']}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
