from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from sandwich.carving import carve
from sandwich.nilrad import analyse
from sandwich.rootsys import SimpleType, build, extremities
from sandwich.classify import all_types

MAX_RANK = 8


@lru_cache(maxsize=None)
def rs_of(family: str, rank: int):
    return build(SimpleType(family, rank))


@lru_cache(maxsize=None)
def carving_of(family: str, rank: int, L: int):
    return carve(rs_of(family, rank), L)


@lru_cache(maxsize=None)
def analysis_of(family: str, rank: int, L: int):
    return analyse(carving_of(family, rank, L))


def all_extremity_cases(max_rank: int = MAX_RANK):
    return [(t.family, t.rank, L) for t in all_types(max_rank) for L in extremities(t)]


ACCEPTANCE: dict = {}


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}"
                                    + (f"  ({detail})" if detail else ""))
