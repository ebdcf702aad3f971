#!/usr/bin/env python3
"""Run the full quantitative reproduction table and print one line per row.

Equivalent to `defocone report paper`; exits nonzero if any row fails.
"""

import sys

from defocone.report import run_all


def main() -> int:
    results = run_all(progress=print)
    passed = sum(1 for r in results if r.passed)
    total = sum(r.seconds for r in results)
    print(f"\n{passed}/{len(results)} rows pass in {total:.1f}s")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
