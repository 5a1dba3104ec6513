"""Bracket-support analysis of the nilradical spanned by the R- root spaces.

Two root spaces bracket nontrivially exactly when the sum of their roots
is a root, so every question here reduces to set membership.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import AbstractSet, Dict, Iterable, List, Optional, Tuple

from .carving import Carving
from .exactvec import HalfVec, rank
from .rootsys import highest_root

Roots = Tuple[HalfVec, ...]
Pair = Tuple[HalfVec, HalfVec]
PairSets = Dict[HalfVec, Tuple[Pair, ...]]


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class StructureDescriptor:
    abelian_dim: int
    heisenbergs: Tuple[Tuple[HalfVec, int], ...]

    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(sorted((m for _, m in self.heisenbergs), reverse=True))

    def render(self) -> str:
        parts = []
        if self.abelian_dim:
            parts.append(f"Z_{self.abelian_dim}")
        counts: Dict[int, int] = {}
        for m in self.multiplicities():
            counts[m] = counts.get(m, 0) + 1
        for m in sorted(counts, reverse=True):
            k = counts[m]
            parts.append(f"h_{2 * m + 1}" if k == 1 else f"{k} x h_{2 * m + 1}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class NilradicalAnalysis:
    closed: bool
    ideal: bool
    sandwich: bool
    witness: Optional[Tuple[HalfVec, HalfVec, HalfVec]]
    center_roots: Roots
    sum_roots: Roots
    pair_sets: PairSets = field(hash=False)
    descriptor: Optional[StructureDescriptor]
    r_minus: Roots


def is_closed(rminus: Iterable[HalfVec], roots: AbstractSet[HalfVec]) -> bool:
    rm = list(rminus)
    inside = set(rm)
    for a, b in combinations(rm, 2):
        s = a + b
        if s in roots and s not in inside:
            return False
    return True


def is_ideal(c: Carving) -> bool:
    roots = c.parent.root_set
    inside = set(c.Rminus)
    for a in c.R0:
        for b in c.Rminus:
            s = a + b
            if s in roots and s not in inside:
                return False
    return True


def sandwich_check(rminus: Iterable[HalfVec], roots: AbstractSet[HalfVec]
                   ) -> Tuple[bool, Optional[Tuple[HalfVec, HalfVec, HalfVec]]]:
    """Two-step nilpotency test; returns the lexicographically least witness on failure."""
    rm = sorted(rminus)
    for a in rm:
        for b in rm:
            s = a + b
            if s not in roots:
                continue
            for g in rm:
                if s + g in roots:
                    return False, (a, b, g)
    return True, None


def center_and_pairs(rminus: Iterable[HalfVec], roots: AbstractSet[HalfVec]
                     ) -> Tuple[Roots, Roots, PairSets]:
    rm = sorted(rminus)
    center = tuple(g for g in rm if all(g + d not in roots for d in rm))
    pairs: Dict[HalfVec, List[Pair]] = {}
    for a, b in combinations(rm, 2):
        s = a + b
        if s in roots:
            pairs.setdefault(s, []).append((a, b))
    for a in rm:
        assert a.scale(2) not in roots, "reduced systems have no doubled roots"
    pair_sets = {z: tuple(ps) for z, ps in sorted(pairs.items())}
    return center, tuple(pair_sets), pair_sets


def structure_descriptor(an: NilradicalAnalysis) -> StructureDescriptor:
    if not an.sandwich:
        raise ValueError("structure descriptor is undefined for a non-sandwich nilradical")
    return _descriptor(an.r_minus, an.pair_sets)


def _descriptor(rminus: Roots, pair_sets: PairSets) -> StructureDescriptor:
    if not pair_sets:
        return StructureDescriptor(len(rminus), ())
    members = {x for ps in pair_sets.values() for p in ps for x in p}
    abelian = len(rminus) - len(members) - len(pair_sets)
    heis = tuple((z, len(ps)) for z, ps in sorted(pair_sets.items()))
    return StructureDescriptor(abelian, heis)


def analyse(c: Carving) -> NilradicalAnalysis:
    roots = c.parent.root_set
    ok, witness = sandwich_check(c.Rminus, roots)
    center, sums, pair_sets = center_and_pairs(c.Rminus, roots)
    desc = _descriptor(c.Rminus, pair_sets) if ok else None
    return NilradicalAnalysis(
        closed=is_closed(c.Rminus, roots), ideal=is_ideal(c), sandwich=ok,
        witness=witness, center_roots=center, sum_roots=sums,
        pair_sets=pair_sets, descriptor=desc, r_minus=c.Rminus)


def grading_cross_check(c: Carving, an: Optional[NilradicalAnalysis] = None) -> bool:
    """Compare the triple scan with the highest-root mark of the deleted node.

    The grading by the L-th coefficient has depth equal to that mark, so the
    nilradical is two-step iff mark <= 2 and abelian iff mark == 1.
    """
    an = an or analyse(c)
    _, marks = highest_root(c.parent)
    mark = marks[c.L - 1]
    assert (not an.pair_sets) == (mark == 1), "abelian test disagrees with the mark"
    return an.sandwich == (mark <= 2)


def verify_lemma_2_2_and_2_3(an: NilradicalAnalysis) -> bool:
    center = set(an.center_roots)
    noncentral = [r for r in an.r_minus if r not in center]
    targets = {z for z, ps in an.pair_sets.items()
               if any(a not in center and b not in center for a, b in ps)}
    covered = {x for ps in an.pair_sets.values() for p in ps for x in p}
    return targets == set(an.sum_roots) and all(r in covered for r in noncentral)


def symplectic_rank(zeta: HalfVec, pair_sets: PairSets) -> int:
    """Rank of the support-level form on the members of the pairs summing to ``zeta``."""
    pairs = pair_sets[zeta]
    members = sorted({x for p in pairs for x in p})
    index = {m: i for i, m in enumerate(members)}
    n = len(members)
    partners: Dict[HalfVec, HalfVec] = {}
    omega = [[0] * n for _ in range(n)]
    for a, b in pairs:
        for x, y in ((a, b), (b, a)):
            if x in partners and partners[x] != y:
                raise DegenerateFormError(f"{x} has two partners for {zeta}")
            partners[x] = y
        omega[index[a]][index[b]] = 1
        omega[index[b]][index[a]] = -1
    return rank(omega)
