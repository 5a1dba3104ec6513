"""Audit each published table entry: printed values beside computed ones."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from sandwich.classify import render_structure, verify_paper


@dataclass
class AuditConfig:
    max_rank: int = 8
    show_matches: bool = False


def run(cfg: AuditConfig) -> int:
    results = verify_paper(cfg.max_rank)
    bad = 0
    for res in results:
        e = res.entry
        print(f"[{e.label}] {res.verdict}")
        print(f"    printed h*        : {e.printed_hstar}")
        print(f"    printed structure : {e.printed_structure}")
        for rep in res.reports:
            if rep.verdict == "match" and not cfg.show_matches:
                continue
            print(f"    {rep.case_id}: h* = {rep.carving.h_star}, |R-| = {len(rep.carving.Rminus)}, "
                  f"sandwich = {rep.analysis.sandwich}, structure = "
                  f"{render_structure(rep.computed_structure())}")
            for d in rep.discrepancies:
                print(f"        {d.field}: computed {d.computed}, claimed {d.claimed}")
            for n in rep.notes:
                print(f"        note: {n}")
        bad += res.verdict != "match"
    print(f"{len(results) - bad}/{len(results)} entries match")
    return bad


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--show-matches", action="store_true")
    a = p.parse_args()
    run(AuditConfig(a.max_rank, a.show_matches))


if __name__ == "__main__":
    main()
