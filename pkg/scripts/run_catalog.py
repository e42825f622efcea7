"""Verify every catalog entry and print one line per entry.

    python3 scripts/run_catalog.py [--out DIR] [--only NAME ...]
"""

import argparse
import json
import time
from pathlib import Path

from innergalois import catalog


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, help="write one JSON report per entry here")
    ap.add_argument("--only", nargs="*", help="entry names (default: all)")
    args = ap.parse_args()
    names = args.only or catalog.names()
    failed = 0
    for name in names:
        t0 = time.perf_counter()
        rep = catalog.verify(catalog.entry(name))
        dt = time.perf_counter() - t0
        n_ok = sum(c["pass"] for c in rep["checks"])
        print(f"{name:16s} {'PASS' if rep['passed'] else 'FAIL'}  {n_ok}/{len(rep['checks'])} checks  {dt:6.2f}s")
        for c in rep["checks"]:
            if not c["pass"]:
                print(f"    {c['field']}: expected {c['expected']!r}, measured {c['measured']!r}")
        failed += not rep["passed"]
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"{name}.json").write_text(json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
