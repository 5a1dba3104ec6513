"""Run every extremity deletion and compare it with the published table."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .carving import Carving, HatClass, carve, check_fact_4_2, restrict
from .exactvec import HalfVec
from .nilrad import NilradicalAnalysis, analyse, grading_cross_check
from .rootsys import (SimpleType, build, extremities, highest_root, node_orbits,
                      normalized_type)

Structure = Tuple[int, Tuple[int, ...]]  # (abelian_dim, multiplicities, largest first)

CLASSICAL_MIN_RANK = {"A": 2, "B": 2, "C": 3, "D": 4}
EXCEPTIONAL = (SimpleType("E", 6), SimpleType("E", 7), SimpleType("E", 8),
               SimpleType("F", 4), SimpleType("G", 2))


@dataclass(frozen=True)
class PaperEntry:
    label: str
    family: str
    ranks: Tuple[int, Optional[int]]  # (min, max); max None means unbounded
    node: Callable[[int], int] = field(repr=False)
    claimed_g: Callable[[int], SimpleType] = field(repr=False)
    claimed_hstar_coeffs: Callable[[int], Tuple[int, ...]] = field(repr=False)
    claimed_hstar_x2: Callable[[int], Tuple[int, ...]] = field(repr=False)
    claimed_r_minus: Callable[[int], int] = field(repr=False)
    claimed_structure: Callable[[int], Structure] = field(repr=False)
    printed_hstar: str = ""
    printed_structure: str = ""
    claimed_relations: str = "none"

    def covers(self, rank: int) -> bool:
        lo, hi = self.ranks
        return rank >= lo and (hi is None or rank <= hi)


def _abelian(n: int) -> Structure:
    return (n, ())


def _heis(*ms: int) -> Structure:
    return (0, tuple(sorted(ms, reverse=True)))


def _x2(*xs) -> Tuple[int, ...]:
    return tuple(int(2 * x) for x in xs)


def _const(v):
    return lambda r: v


# Each lambda receives the parent rank n = l + 1.
PAPER_TABLE: Tuple[PaperEntry, ...] = (
    PaperEntry("1.1", "A", (2, None), lambda n: 1,
               lambda n: SimpleType("A", n - 1),
               lambda n: tuple(n + 1 - j for j in range(1, n + 1)),
               lambda n: _x2(n, *([-1] * n)),
               lambda n: n, lambda n: _abelian(n),
               r"h^{\ast} = \sum^{\ell +1}_{j=1} (\ell +2 -j) h_j = (\ell +1)e_1 - \sum^{\ell +2}_{i=2}e_i",
               r"Z_{\ell +1}"),
    PaperEntry("1.2", "A", (2, None), lambda n: n,
               lambda n: SimpleType("A", n - 1),
               lambda n: tuple(range(1, n + 1)),
               lambda n: _x2(*([1] * n), -n),
               lambda n: n, lambda n: _abelian(n),
               r"h^{\ast} = \sum^{\ell +1}_{j=1} j h_j = \sum^{\ell +1}_{i=1}e_i - (\ell +1)e_{\ell +2}",
               r"Z_{\ell +1}"),
    PaperEntry("2.1", "B", (2, None), lambda n: 1,
               lambda n: normalized_type("B", n - 1),
               lambda n: (2,) * (n - 1) + (1,),
               lambda n: _x2(2, *([0] * (n - 1))),
               lambda n: 2 * n - 1, lambda n: _abelian(2 * n - 1),
               r"h^{\ast } = 2\sum^{\ell }_{i=1}h_i + h_{\ell +1} = 2e_1",
               r"Z_{2\ell +1}"),
    PaperEntry("2.2", "B", (2, None), lambda n: n,
               lambda n: SimpleType("A", n - 1),
               lambda n: tuple(2 * i for i in range(1, n)) + (n,),
               lambda n: _x2(*([2] * n)),
               lambda n: n * (n + 1) // 2, lambda n: _heis(*([1] * (n * (n - 1) // 2))),
               r"h^{\ast } = 2\sum^{\ell }_{i=1}ih_i + (\ell +1)h_{\ell +1} = 2\sum^{\ell +1}_{i=1} e_i",
               r"\sum_{1 \le i < j \le \ell +1} + {\mathrm{h}}^{{\widehat{\zeta }}_{i<j}}_3",
               "one pair for each target zeta_{i<j}"),
    PaperEntry("3.1", "C", (3, None), lambda n: 1,
               lambda n: normalized_type("C", n - 1),
               lambda n: (1,) * n,
               lambda n: _x2(1, *([0] * (n - 1))),
               lambda n: 2 * n - 1, lambda n: _heis(n - 1),
               r"h^{\ast } = \sum^{\ell +1}_{i=1}h_i  = e_1",
               r"{\mathrm{h}}^{\widehat{\zeta }}_{2\ell +1}",
               "l pairs summing to a single zeta"),
    PaperEntry("3.2", "C", (3, None), lambda n: n,
               lambda n: SimpleType("A", n - 1),
               lambda n: tuple(range(1, n + 1)),
               lambda n: _x2(*([1] * n)),
               lambda n: n * (n + 1) // 2, lambda n: _abelian(n * (n + 1) // 2),
               r"h^{\ast } = \sum^{\ell +1}_{i=1}ih_i  = \sum^{\ell +1}_{i=1}e_i",
               r"Z_{\mbox{$\scriptscriptstyle \frac{1}{2}$}(\ell +2)(\ell +1)}"),
    PaperEntry("4.1", "D", (4, None), lambda n: 1,
               lambda n: normalized_type("D", n - 1),
               lambda n: (2,) * (n - 2) + (1, 1),
               lambda n: _x2(2, *([0] * (n - 1))),
               lambda n: 2 * (n - 1), lambda n: _abelian(2 * (n - 1)),
               r"h^{\ast } = 2\sum^{\ell -1}_{i=1}h_i +h_{\ell } +h_{\ell +1} = 2e_1",
               r"Z_{2\ell }"),
    PaperEntry("4.2", "D", (4, None), lambda n: n - 1,
               lambda n: SimpleType("A", n - 1),
               lambda n: tuple(2 * i for i in range(1, n - 1)) + (n, n - 2),
               lambda n: _x2(*([2] * (n - 1)), -2),
               lambda n: n * (n - 1) // 2, lambda n: _abelian(n * (n - 1) // 2),
               r"h^{\ast } = 2\sum^{\ell -1}_{i=1}i h_i + (\ell +1) h_{\ell } + (\ell -1)h_{\ell +1} = 2\sum^{\ell }_{i=1} e_i - 2e_{\ell +1}",
               r"Z_{\mbox{$\scriptscriptstyle \frac{1}{2}$} \ell (\ell +1)}"),
    PaperEntry("4.3", "D", (4, None), lambda n: n,
               lambda n: SimpleType("A", n - 1),
               lambda n: tuple(2 * i for i in range(1, n - 1)) + (n - 2, n),
               lambda n: _x2(*([2] * n)),
               lambda n: n * (n - 1) // 2, lambda n: _abelian(n * (n - 1) // 2),
               r"h^{\ast } = 2\sum^{\ell -1}_{i=1}i h_i + (\ell -1) h_{\ell } + (\ell +1) h_{\ell +1} = 2\sum^{\ell +1}_{i=1} e_i",
               r"Z_{\mbox{$\scriptscriptstyle \frac{1}{2}$} \ell (\ell +1)}"),
    PaperEntry("5.1", "G", (2, 2), _const(1), _const(SimpleType("A", 1)),
               _const((2, 3)), _const(_x2(-4, -5, -3)), _const(5), _const(_heis(1)),
               r"h^{\ast } = 2h_1+3h_2 = -4e_1-5e_2 - 3e_3",
               r"{\mathrm{h}}^{\widehat{\zeta}}_3",
               "one pair summing to zeta"),
    PaperEntry("5.2", "G", (2, 2), _const(2), _const(SimpleType("A", 1)),
               _const((1, 2)), _const(_x2(-3, -3, -2)), _const(5), _const(_heis(2)),
               r"h^{\ast } = h_1+2h_2 = -3e_1-3e_2 - 2e_3",
               r"{\mathrm{h}}^{\widehat{\zeta}}_5",
               "two pairs summing to zeta"),
    PaperEntry("6.1", "F", (4, 4), _const(4), _const(SimpleType("B", 3)),
               _const((2, 3, 2, 1)), _const(_x2(2, 0, 0, 0)), _const(15),
               _const(_heis(4, 2, 2, 2, 2, 2, 2)),
               r"h^{\ast } = 2h_1+3h_2+2h_3+h_4 = 2e_1",
               r"{\mathrm{h}}^{{\widehat{\zeta}}_1}_9 + \sum^7_{k=2}+{\mathrm{h}}^{{\widehat{\zeta}}_k}_5",
               "four pairs to zeta_1, two pairs to each of zeta_2..zeta_7"),
    PaperEntry("6.2", "F", (4, 4), _const(1), _const(SimpleType("C", 3)),
               _const((2, 3, 2, 1)), _const(_x2(1, 1, 0, 0)), _const(15), _const(_heis(7)),
               r"h^{\ast } = 2h_1+3h_2+2h_3+h_4 = e_1+e_2",
               r"{\mathrm{h}}^{\widehat{\zeta }}_{15}",
               "seven pairs summing to zeta"),
    PaperEntry("7.1", "E", (6, 6), _const(1), _const(SimpleType("D", 5)),
               _const((4, 3, 5, 6, 4, 2)), _const(_x2(0, 0, 0, 0, 0, 6)), _const(16),
               _const(_abelian(16)),
               r"h^{\ast } = 4h_1+3h_2+5h_3+6h_4+4h_5 + 2h_6 = 6e_6",
               r"Z_{16}"),
    PaperEntry("7.2", "E", (6, 6), _const(6), _const(SimpleType("D", 5)),
               _const((2, 3, 4, 6, 5, 4)), _const(_x2(0, 0, 0, 0, 3, 3)), _const(16),
               _const(_abelian(16)),
               r"h^{\ast } = 2h_1+3h_2+4h_3 + 6h_4+5h_5 + 4h_6 = 3(e_5+e_6)",
               r"Z_{16}"),
    PaperEntry("7.3", "E", (6, 6), _const(2), _const(SimpleType("A", 5)),
               _const((2, 4, 4, 6, 4, 2)), _const(_x2(1, 1, 1, 1, 1, 3)), _const(21),
               _const(_heis(10)),
               r"h^{\ast } = 2h_1+4h_2+4h_3+6h_4+4h_5+2h_6 = \sum^5_{i=1}e_i + 3e_6",
               r"{\mathrm{h}}^{\widehat{\zeta }}_{21}",
               "ten pairs summing to zeta"),
    PaperEntry("8.1", "E", (7, 7), _const(1), _const(SimpleType("D", 6)),
               _const((2, 2, 3, 4, 3, 2, 1)), _const(_x2(0, 0, 0, 0, 0, 0, 2)), _const(33),
               _const(_heis(43)),
               r"h^{\ast } = 2h_1+2h_2+3h_3+4h_4+3h_5+2h_6+h_7 = 2e_7",
               r"{\mathrm{h}}^{\widehat{\zeta }}_{87}",
               "pairs summing to a single zeta"),
    PaperEntry("8.2", "E", (7, 7), _const(7), _const(SimpleType("E", 6)),
               _const((2, 3, 4, 6, 5, 4, 3)), _const(_x2(0, 0, 0, 0, 0, 2, 2)), _const(27),
               _const(_abelian(16)),
               r"h^{\ast } = 2h_1+3h_2+4h_3+6h_4+5h_5+4h_6+3h_7 = 2(e_6+e_7)",
               r"Z_{16}"),
    PaperEntry("8.3", "E", (7, 7), _const(2), _const(SimpleType("A", 6)),
               _const((4, 7, 8, 12, 9, 6, 3)), _const(_x2(-1, 1, 1, 1, 1, 1, 4)), _const(42),
               _const(_heis(21, 5, 5, 5, 5, 5, 5)),
               r"h^{\ast } = 4h_1+7h_2+8h_3+12h_4+9h_5+6h_6+3h_7 = -e_1 +\sum^6_{i=2}e_i+4e_7",
               r"{\mathrm{h}}^{{\widehat{\zeta }}_1}_{43} + {\mathrm{h}}^{{\widehat{\zeta }}_{-}}_{11} + \sum^6_{k=2} +{\mathrm{h}}^{{\widehat{\zeta }}_k}_{11}",
               "pairs to zeta_1, zeta_-, zeta_2..zeta_6"),
    PaperEntry("9.1", "E", (8, 8), _const(1), _const(SimpleType("D", 7)),
               _const((4, 5, 7, 10, 8, 6, 4, 2)), _const(_x2(0, 0, 0, 0, 0, 0, 0, 1)),
               _const(64), _const(_abelian(78)),
               r"h^{\ast } = 4h_1+5h_2+7h_3+10h_4+8h_5+6h_6+4h_7 + 2h_8 = e_8",
               r"Z_{78}"),
    PaperEntry("9.2", "E", (8, 8), _const(8), _const(SimpleType("E", 7)),
               _const((2, 3, 4, 6, 5, 4, 3, 2)), _const(_x2(0, 0, 0, 0, 0, 0, 1, 1)),
               _const(44), _const(_abelian(32)),
               r"h^{\ast } = 2h_1+3h_2+4h_3+6h_4+5h_5+4h_6+3h_7 + 2h_8 = e_7 + e_8",
               r"Z_{32}"),
)

ENTRIES: Dict[str, PaperEntry] = {e.label: e for e in PAPER_TABLE}


def find_entry(t: SimpleType, L: int) -> Optional[PaperEntry]:
    for e in PAPER_TABLE:
        if e.family == t.family and e.covers(t.rank) and e.node(t.rank) == L:
            return e
    return None


@dataclass(frozen=True)
class Discrepancy:
    field: str
    computed: str
    claimed: str


@dataclass(frozen=True)
class ClassificationReport:
    type: SimpleType
    node: int
    carving: Carving
    analysis: NilradicalAnalysis
    hat_classes: Tuple[HatClass, ...]
    mark: int
    fact_4_2: bool
    grading_agrees: bool
    paper: Optional[PaperEntry]
    verdict: str
    discrepancies: Tuple[Discrepancy, ...] = ()
    notes: Tuple[str, ...] = ()
    alias_of: Optional[int] = None

    @property
    def case_id(self) -> str:
        return f"{self.type}/{self.node}"

    @property
    def property3(self) -> bool:
        return all(len(h.members) == 1 for h in self.hat_classes)

    def computed_structure(self) -> Optional[Structure]:
        d = self.analysis.descriptor
        return None if d is None else (d.abelian_dim, d.multiplicities())


def render_structure(s: Optional[Structure]) -> str:
    if s is None:
        return "undefined (not a sandwich)"
    a, ms = s
    parts = [f"Z_{a}"] if a else []
    counts: Dict[int, int] = {}
    for m in ms:
        counts[m] = counts.get(m, 0) + 1
    for m in sorted(counts, reverse=True):
        k = counts[m]
        parts.append(f"h_{2 * m + 1}" if k == 1 else f"{k} x h_{2 * m + 1}")
    return " + ".join(parts) if parts else "0"


def _positive_ratio(a: Tuple[int, ...], b: Tuple[int, ...]) -> Optional[Fraction]:
    """``a / b`` when ``a`` is a positive multiple of ``b``."""
    k = next((Fraction(x, y) for x, y in zip(a, b) if y), None)
    if k is None or k <= 0 or any(Fraction(x) != k * y for x, y in zip(a, b)):
        return None
    return k


def _compare(rep_fields: dict, entry: PaperEntry, rank: int) -> Tuple[List[Discrepancy], List[str]]:
    out: List[Discrepancy] = []
    notes: List[str] = []
    g = entry.claimed_g(rank)
    if rep_fields["g_type"] != g:
        out.append(Discrepancy("g_type", str(rep_fields["g_type"]), str(g)))
    hx2 = entry.claimed_hstar_x2(rank)
    if rep_fields["h_star"].coords_x2 != hx2:
        out.append(Discrepancy("h_star", str(rep_fields["h_star"]), str(HalfVec(hx2))))
        ratio = _positive_ratio(hx2, rep_fields["h_star"].coords_x2)
        if ratio is not None:
            notes.append(f"printed h* is {ratio} times the primitive generator")
    if rep_fields["coeffs"] != entry.claimed_hstar_coeffs(rank):
        notes.append(f"printed h* coefficients {entry.claimed_hstar_coeffs(rank)} "
                     f"differ from the computed {rep_fields['coeffs']}")
    if rep_fields["r_minus"] != entry.claimed_r_minus(rank):
        out.append(Discrepancy("r_minus_count", str(rep_fields["r_minus"]),
                               str(entry.claimed_r_minus(rank))))
    if not rep_fields["sandwich"]:
        out.append(Discrepancy("sandwich", "False", "True"))
    if not rep_fields["property3"]:
        out.append(Discrepancy("property3", "False", "True"))
    claimed = entry.claimed_structure(rank)
    if rep_fields["structure"] != claimed:
        out.append(Discrepancy("structure", render_structure(rep_fields["structure"]),
                               render_structure(claimed)))
    return out, notes


def run_case(t: SimpleType, L: int, alias_of: Optional[int] = None) -> ClassificationReport:
    rs = build(t)
    c = carve(rs, L)
    an = analyse(c)
    hats = tuple(restrict(c))
    _, marks = highest_root(rs)
    entry = find_entry(t, L)
    p3 = all(len(h.members) == 1 for h in hats)
    structure = None if an.descriptor is None else (an.descriptor.abelian_dim,
                                                    an.descriptor.multiplicities())
    discrepancies: List[Discrepancy] = []
    notes: List[str] = []
    if entry is not None:
        discrepancies, notes = _compare(
            {"g_type": c.g_type, "h_star": c.h_star, "coeffs": c.h_star_coeffs,
             "r_minus": len(c.Rminus), "sandwich": an.sandwich, "property3": p3,
             "structure": structure}, entry, t.rank)
        verdict = "discrepancy" if discrepancies else "match"
    else:
        verdict = "not-in-paper" if an.sandwich else "non-sandwich"
    if t == SimpleType("B", 2):
        notes.append("B2 and C2 share one diagram; this case is also C2 with the nodes swapped")
    return ClassificationReport(
        t, L, c, an, hats, marks[L - 1], check_fact_4_2(c), grading_cross_check(c, an),
        entry, verdict, tuple(discrepancies), tuple(notes), alias_of)


def all_types(max_classical_rank: int) -> List[SimpleType]:
    types = [SimpleType(f, n) for f, lo in CLASSICAL_MIN_RANK.items()
             for n in range(lo, max_classical_rank + 1)]
    return sorted(types + list(EXCEPTIONAL))


def classify_all(max_classical_rank: int = 8) -> List[ClassificationReport]:
    if max_classical_rank < 4:
        raise ValueError("max_classical_rank must be at least 4")
    reports = []
    for t in all_types(max_classical_rank):
        for orbit in node_orbits(t, extremities(t)):
            canon = orbit[0]
            for L in orbit:
                reports.append(run_case(t, L, None if L == canon else canon))
    return sorted(reports, key=lambda r: (r.type.family, r.type.rank, r.node))


@dataclass(frozen=True)
class EntryResult:
    entry: PaperEntry
    reports: Tuple[ClassificationReport, ...]

    @property
    def verdict(self) -> str:
        return "match" if all(r.verdict == "match" for r in self.reports) else "discrepancy"


def verify_paper(max_rank: int = 8) -> List[EntryResult]:
    """Check every table entry at each supported rank up to ``max_rank``."""
    out = []
    for e in PAPER_TABLE:
        lo, hi = e.ranks
        top = max_rank if hi is None else hi
        reps = tuple(run_case(SimpleType(e.family, n), e.node(n)) for n in range(lo, top + 1))
        out.append(EntryResult(e, reps))
    return out
