#!/usr/bin/env python3
"""Run the desk-scale pattern scans and archive the records as JSONL.

One file per target lands in the output directory; a summary line per
target goes to stdout.  Findings (patterns contradicting one of the open
conjectures) would be counted here and flagged loudly; at the default
lengths every target is expected to finish with zero.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from unambig.explorer import conjecture_scan
from unambig.solver import DEFAULT_BUDGET

DEFAULT_LENGTHS = {
    "conjecture1": 10,
    "conjecture2": 10,
    "conjecture3": 10,
    "theorem7": 12,
}


def run_target(target: str, max_len: int, out_dir: Path, budget: int, workers: int) -> int:
    out_path = out_dir / f"{target}_len{max_len}.jsonl"
    records = findings = budget_hits = 0
    start = time.perf_counter()
    with out_path.open("w", encoding="ascii") as sink:
        for record in conjecture_scan(max_len, target, budget=budget, workers=workers):
            sink.write(record.to_json() + "\n")
            records += 1
            findings += record.finding
            budget_hits += record.budget_hit
    elapsed = time.perf_counter() - start
    print(
        f"{target:<12} max_len={max_len:<3} records={records:<7} "
        f"findings={findings} budget_hits={budget_hits} "
        f"elapsed={elapsed:.1f}s -> {out_path}"
    )
    if findings:
        print(f"ATTENTION: {target} produced {findings} finding(s); inspect {out_path}")
    return findings


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--targets",
        nargs="+",
        choices=sorted(DEFAULT_LENGTHS),
        default=sorted(DEFAULT_LENGTHS),
    )
    parser.add_argument(
        "--max-len",
        type=int,
        default=None,
        help="override the per-target default maximum pattern length",
    )
    parser.add_argument("--out-dir", type=Path, default=Path("scans"))
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args(argv)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    total_findings = 0
    for target in args.targets:
        max_len = args.max_len if args.max_len is not None else DEFAULT_LENGTHS[target]
        total_findings += run_target(target, max_len, args.out_dir, args.budget, args.workers)
    return 1 if total_findings else 0


if __name__ == "__main__":
    sys.exit(main())
