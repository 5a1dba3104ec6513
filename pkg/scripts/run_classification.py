"""Classify every extremity up to a rank bound and write JSON plus a text summary."""
from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from sandwich.classify import classify_all
from sandwich.cli import render_summary_line, report_to_dict


@dataclass
class RunConfig:
    max_rank: int = 8
    out_dir: Path = Path("results")


def run(cfg: RunConfig) -> None:
    t0 = time.perf_counter()
    cases = [report_to_dict(r) for r in classify_all(cfg.max_rank)]
    elapsed = time.perf_counter() - t0
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    (cfg.out_dir / "classification.json").write_text(
        json.dumps({"cases": cases}, indent=2, sort_keys=True) + "\n")
    lines = [render_summary_line(d) for d in cases]
    (cfg.out_dir / "classification.txt").write_text("\n".join(lines) + "\n")
    tally = Counter((d["sandwich"], d["verdict"]) for d in cases)
    print(f"{len(cases)} cases in {elapsed:.2f}s")
    for (sw, verdict), k in sorted(tally.items(), key=str):
        print(f"  sandwich={sw!s:5} verdict={verdict:12} {k}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--out-dir", type=Path, default=Path("results"))
    a = p.parse_args()
    run(RunConfig(a.max_rank, a.out_dir))


if __name__ == "__main__":
    main()
