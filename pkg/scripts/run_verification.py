"""Run the acceptance battery and write a JSON report (default results/verify.json)."""

import argparse
import sys
import time
from pathlib import Path

from taux import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results/verify.json")
    ap.add_argument("--only", type=int, nargs="*")
    ns = ap.parse_args()
    t0 = time.perf_counter()
    results = verify.run_all(ns.only)
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:>2} {r.name}: {r.detail}")
    out = Path(ns.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(verify.report_json(results) + "\n")
    print(f"{sum(r.passed for r in results)}/{len(results)} passed in {time.perf_counter() - t0:.1f}s -> {out}")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
