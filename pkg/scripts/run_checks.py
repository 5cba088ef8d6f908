#!/usr/bin/env python3
"""Run the full identity registry at chosen ranges and print a timed summary.

Usage:
    python scripts/run_checks.py [n_max] [q_order]

Defaults reproduce the desk-scale manifest (n_max=40, q_order=25).
"""

import sys
import time

from pie.identities import CheckConfig, run_all


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    q_order = int(sys.argv[2]) if len(sys.argv) > 2 else 25
    cfg = CheckConfig(n_max=n_max, q_order=q_order, m_max=4)
    t0 = time.perf_counter()
    reports = run_all(cfg)
    failures = 0
    for rep in reports:
        mark = "ok  " if rep.passed else "FAIL"
        cond = f" cond={rep.condition:.3g}" if rep.condition is not None else ""
        print(f"{mark} {rep.id.value:16s} [{rep.mode}] {rep.elapsed_ms:8.1f} ms{cond}")
        if not rep.passed:
            failures += 1
            print(f"     first failure: {rep.first_failure}")
    total = time.perf_counter() - t0
    print(f"\n{len(reports)} checks, {failures} failures, {total:.2f}s total")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
