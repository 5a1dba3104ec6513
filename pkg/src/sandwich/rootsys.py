"""Simple root systems in explicit epsilon coordinates.

Simple roots and the coweight basis follow the node numbering of the
classification tables (E types branch at node 2 off node 4).  The Cartan
matrix convention is ``C[i][j] = alpha_i(h_j)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exactvec import (HalfVec, IntMatrix, SpanSolver, StructuralError, check_root_parity,
                       dot)

Roots = Tuple[HalfVec, ...]

RANK_BOUNDS = {
    "A": "A_n needs n >= 1",
    "B": "B_n needs n >= 2",
    "C": "C_n needs n >= 3",
    "D": "D_n needs n >= 4",
    "E": "E_n needs n in {6, 7, 8}",
    "F": "F_n needs n = 4",
    "G": "G_n needs n = 2",
}


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1, "B": n >= 2, "C": n >= 3, "D": n >= 4,
            "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
        }.get(f)
        if ok is None:
            raise UnsupportedType(f"unknown family {f!r}")
        if not ok:
            raise UnsupportedType(f"unsupported rank {n} for {f}: {RANK_BOUNDS[f]}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "SimpleType":
        """Accept ``"E8"`` or ``"E"`` plus an explicit rank."""
        text = text.strip().upper()
        if not text or text[0] not in "ABCDEFG":
            raise UnsupportedType(f"cannot parse type {text!r}")
        fam, digits = text[0], text[1:]
        if digits:
            if not digits.isdigit():
                raise UnsupportedType(f"cannot parse type {text!r}")
            if rank is not None and int(digits) != rank:
                raise UnsupportedType(f"type {text} disagrees with rank {rank}")
            rank = int(digits)
        if rank is None:
            raise UnsupportedType(f"type {text!r} needs a rank")
        return cls(fam, rank)


def normalized_type(family: str, rank: int) -> SimpleType:
    """Map low-rank coincidences to the canonical label (B1, C1 -> A1, C2 -> B2, D3 -> A3)."""
    if family in "BC" and rank == 1:
        return SimpleType("A", 1)
    if family == "C" and rank == 2:
        return SimpleType("B", 2)
    if family == "D" and rank == 3:
        return SimpleType("A", 3)
    if family == "D" and rank == 2:
        raise UnsupportedType("D2 is not simple")
    return SimpleType(family, rank)


@dataclass(frozen=True)
class DiagramAutomorphism:
    node_permutation: Tuple[int, ...]  # sigma(i) at position i-1, 1-based values

    def __call__(self, i: int) -> int:
        return self.node_permutation[i - 1]

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.node_permutation, start=1))


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    ambient_dim: int
    simple_roots: Roots
    coweight_basis: Roots
    all_roots: Roots
    positive_roots: Roots
    cartan: IntMatrix

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def root_set(self) -> FrozenSet[HalfVec]:
        return frozenset(self.all_roots)

    @cached_property
    def _coeff_cache(self) -> Dict[HalfVec, Tuple[int, ...]]:
        return {}

    @cached_property
    def _solver(self) -> SpanSolver:
        return SpanSolver(self.simple_roots)

    def simple_coefficients(self, v: HalfVec) -> Tuple[int, ...]:
        """Integer coordinates of a root in the simple-root basis."""
        cache = self._coeff_cache
        if v not in cache:
            ks = self._solver.solve(v)
            if any(k.denominator != 1 for k in ks):
                raise StructuralError(f"{v} has non-integral simple coefficients")
            cache[v] = tuple(int(k) for k in ks)
        return cache[v]


# ---------------------------------------------------------------- coordinates

def _e(dim: int, *terms: Tuple[int, object]) -> HalfVec:
    v = [Fraction(0)] * dim
    for i, c in terms:
        v[i - 1] += Fraction(c)
    return HalfVec.from_coords(v)


def _half(*signs: int) -> HalfVec:
    return HalfVec(tuple(signs))


def simple_data(t: SimpleType) -> Tuple[int, Roots, Roots]:
    """(ambient dimension, simple roots, coweight basis) in table coordinates."""
    f, n = t.family, t.rank
    if f == "A":
        d = n + 1
        s = tuple(_e(d, (i, 1), (i + 1, -1)) for i in range(1, n + 1))
        return d, s, s
    if f in "BCD":
        d = n
        chain = [_e(d, (i, 1), (i + 1, -1)) for i in range(1, n)]
        if f == "B":
            return d, tuple(chain + [_e(d, (n, 1))]), tuple(chain + [_e(d, (n, 2))])
        if f == "C":
            return d, tuple(chain + [_e(d, (n, 2))]), tuple(chain + [_e(d, (n, 1))])
        last = _e(d, (n - 1, 1), (n, 1))
        return d, tuple(chain + [last]), tuple(chain + [last])
    if f == "G":
        s = (_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1)))
        h = (_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, -1), (3, -1)))
        return 3, s, h
    if f == "F":
        s = (_e(4, (2, 1), (3, -1)), _e(4, (3, 1), (4, -1)), _e(4, (4, 1)),
             _half(1, -1, -1, -1))
        h = (_e(4, (2, 1), (3, -1)), _e(4, (3, 1), (4, -1)), _e(4, (4, 2)),
             _e(4, (1, 1), (2, -1), (3, -1), (4, -1)))
        return 4, s, h
    if n == 6:
        tail = [_e(6, (2, 1), (1, 1))] + [_e(6, (i - 1, 1), (i - 2, -1)) for i in range(3, 7)]
        return 6, (_half(1, -1, -1, -1, -1, 1), *tail), (_half(1, -1, -1, -1, -1, 3), *tail)
    if n == 7:
        tail = [_e(7, (2, 1), (1, -1)), _e(7, (2, 1), (1, 1))]
        tail += [_e(7, (i - 1, 1), (i - 2, -1)) for i in range(4, 8)]
        return (7, (_half(-1, -1, -1, -1, -1, -1, 1), *tail),
                (_half(-1, -1, -1, -1, -1, -1, 2), *tail))
    tail = [_e(8, (2, 1), (1, 1))] + [_e(8, (i - 1, 1), (i - 2, -1)) for i in range(3, 9)]
    a1 = _half(1, -1, -1, -1, -1, -1, -1, 1)
    return 8, (a1, *tail), (a1, *tail)


# ---------------------------------------------------------------- generators

def _pm_pairs(dim: int, upto: int) -> List[HalfVec]:
    out = []
    for i, j in itertools.combinations(range(1, upto + 1), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            out.append(_e(dim, (i, si), (j, sj)))
    return out


def _units(dim: int, idx: Sequence[int], c: int) -> List[HalfVec]:
    return [_e(dim, (i, s * c)) for i in idx for s in (1, -1)]


def _even_half_sums(n: int, tail: Tuple[int, ...] = ()) -> List[HalfVec]:
    """Half sign vectors on ``n`` coordinates with an even count of minus signs."""
    out = []
    for signs in itertools.product((1, -1), repeat=n):
        if signs.count(-1) % 2 == 0:
            out.append(HalfVec(signs + tail))
    return out


def roots_from_formula(t: SimpleType) -> Roots:
    """Every root, read from the explicit per-family descriptions."""
    f, n = t.family, t.rank
    roots: List[HalfVec] = []
    if f == "A":
        d = n + 1
        roots = [_e(d, (i, 1), (j, -1)) for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
    elif f in "BCD":
        roots = _pm_pairs(n, n)
        if f == "B":
            roots += _units(n, range(1, n + 1), 1)
        elif f == "C":
            roots += _units(n, range(1, n + 1), 2)
    elif f == "G":
        pos = [(1, -1, 0), (-2, 1, 1), (-1, 0, 1), (0, -1, 1), (1, -2, 1), (-1, -1, 2)]
        pos_v = [HalfVec.from_coords(p) for p in pos]
        roots = pos_v + [-v for v in pos_v]
    elif f == "F":
        roots = _pm_pairs(4, 4) + _units(4, range(1, 5), 1)
        roots += [HalfVec(s) for s in itertools.product((1, -1), repeat=4)]
    elif n == 6:
        roots = [HalfVec(v.coords_x2 + (0,)) for v in _pm_pairs(5, 5)]
        halves = _even_half_sums(5, (1,))
        roots += halves + [-v for v in halves]
    elif n == 7:
        roots = [HalfVec(v.coords_x2 + (0,)) for v in _pm_pairs(6, 6)]
        roots += _units(7, [7], 1)
        halves = _even_half_sums(6, (1,))
        roots += halves + [-v for v in halves]
    else:
        roots = _pm_pairs(8, 8) + _even_half_sums(8)
    for r in roots:
        check_root_parity(r)
    return tuple(sorted(set(roots)))


def cartan_from_pairings(simple: Roots, coweights: Roots) -> IntMatrix:
    rows = []
    for a in simple:
        row = []
        for h in coweights:
            v = dot(a, h)
            if v.denominator != 1:
                raise StructuralError(f"non-integral pairing {v}")
            row.append(int(v))
        rows.append(row)
    return IntMatrix.from_rows(rows, len(coweights))


def positive_roots_by_strings(c: IntMatrix) -> List[Tuple[int, ...]]:
    """Positive roots in simple coordinates, built up by root strings.

    Uses only the Cartan matrix: ``beta + alpha_j`` is a root iff
    ``p - <beta, alpha_j^vee> > 0`` where ``p`` counts how far the
    ``alpha_j`` string extends downward from ``beta``.
    """
    n = c.rows
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for j in range(n):
                pairing = sum(beta[i] * c[i, j] for i in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[j] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = tuple(b + (1 if k == j else 0) for k, b in enumerate(beta))
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(known)


def roots_by_closure(t: SimpleType) -> Roots:
    """Every root, grown from the simple roots with the Cartan matrix alone."""
    _, simple, coweights = simple_data(t)
    c = cartan_from_pairings(simple, coweights)
    out = set()
    for ks in positive_roots_by_strings(c):
        v = HalfVec.zero(simple[0].dim)
        for k, a in zip(ks, simple):
            v = v + a.scale(k)
        out.add(v)
        out.add(-v)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def build(t: SimpleType) -> RootSystem:
    """Cached: root systems are immutable once built."""
    dim, simple, coweights = simple_data(t)
    roots = roots_from_formula(t)
    rs = RootSystem(t, dim, simple, coweights, roots, (), cartan_from_pairings(simple, coweights))
    positive = []
    for r in roots:
        ks = rs.simple_coefficients(r)
        if all(k >= 0 for k in ks):
            positive.append(r)
        elif not all(k <= 0 for k in ks):
            raise StructuralError(f"{r} has mixed-sign simple coefficients")
    object.__setattr__(rs, "positive_roots", tuple(positive))
    return rs


def highest_root(rs: RootSystem) -> Tuple[HalfVec, Tuple[int, ...]]:
    best = max(rs.positive_roots, key=lambda r: sum(rs.simple_coefficients(r)))
    marks = rs.simple_coefficients(best)
    for r in rs.positive_roots:
        if any(k > m for k, m in zip(rs.simple_coefficients(r), marks)):
            raise StructuralError("no dominating positive root")
    return best, marks


# ---------------------------------------------------------------- diagrams

def _neighbours(c: IntMatrix) -> List[List[int]]:
    return [[j for j in range(c.cols) if j != i and c[i, j] != 0] for i in range(c.rows)]


def _validate_cartan(c: IntMatrix) -> None:
    n = c.rows
    if n == 0 or c.cols != n:
        raise StructuralError("Cartan matrix must be square and nonempty")
    for i in range(n):
        if c[i, i] != 2:
            raise StructuralError("diagonal entries must be 2")
        for j in range(n):
            if i == j:
                continue
            if c[i, j] > 0 or (c[i, j] == 0) != (c[j, i] == 0):
                raise StructuralError("off-diagonal pattern is not a Cartan matrix")
            if c[i, j] * c[j, i] > 3:
                raise StructuralError("bond of multiplicity above 3")
    nb = _neighbours(c)
    seen = {0}
    stack = [0]
    while stack:
        for j in nb[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        raise StructuralError("diagram is disconnected")
    if sum(len(x) for x in nb) // 2 != n - 1:
        raise StructuralError("diagram contains a cycle")


def diagram_type(c: IntMatrix) -> SimpleType:
    """Recognise a connected finite-type Cartan matrix up to relabelling."""
    _validate_cartan(c)
    n = c.rows
    nb = _neighbours(c)
    bonds = {(i, j): c[i, j] * c[j, i] for i in range(n) for j in nb[i] if i < j}
    mult = sorted(bonds.values())
    if 3 in mult:
        if n != 2:
            raise StructuralError("triple bond outside rank 2")
        return SimpleType("G", 2)
    degrees = [len(x) for x in nb]
    if max(degrees, default=0) > 3 or degrees.count(3) > 1:
        raise StructuralError("not a finite-type diagram")
    if 2 in mult:
        if mult.count(2) > 1 or 3 in degrees:
            raise StructuralError("not a finite-type diagram")
        (i, j), = [k for k, v in bonds.items() if v == 2]
        short = j if c[i, j] == -2 else i
        long_ = i if short == j else j
        if n == 2:
            return SimpleType("B", 2)
        if degrees[short] == 1:
            return SimpleType("B", n)
        if degrees[long_] == 1:
            return normalized_type("C", n)
        if n == 4:
            return SimpleType("F", 4)
        raise StructuralError("not a finite-type diagram")
    if 3 not in degrees:
        return SimpleType("A", n)
    centre = degrees.index(3)
    legs = []
    for start in nb[centre]:
        length, prev, cur = 1, centre, start
        while degrees[cur] == 2:
            prev, cur = cur, next(k for k in nb[cur] if k != prev)
            length += 1
        legs.append(length)
    legs.sort()
    if legs[:2] == [1, 1]:
        return SimpleType("D", n)
    if legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
        return SimpleType("E", n)
    raise StructuralError(f"not a finite-type diagram (legs {legs})")


def cartan_automorphisms(c: IntMatrix) -> List[DiagramAutomorphism]:
    n = c.rows
    out: List[DiagramAutomorphism] = []

    def extend(perm: List[int]):
        k = len(perm)
        if k == n:
            out.append(DiagramAutomorphism(tuple(p + 1 for p in perm)))
            return
        for cand in range(n):
            if cand in perm:
                continue
            if c[cand, cand] != c[k, k]:
                continue
            if all(c[perm[i], cand] == c[i, k] and c[cand, perm[i]] == c[k, i] for i in range(k)):
                extend(perm + [cand])

    extend([])
    return sorted(out, key=lambda a: a.node_permutation)


def automorphisms(t: SimpleType) -> List[DiagramAutomorphism]:
    _, s, h = simple_data(t)
    return cartan_automorphisms(cartan_from_pairings(s, h))


def extremities(t: SimpleType) -> List[int]:
    _, s, h = simple_data(t)
    nb = _neighbours(cartan_from_pairings(s, h))
    return [i + 1 for i, x in enumerate(nb) if len(x) == 1]


def node_orbits(t: SimpleType, nodes: Sequence[int]) -> List[Tuple[int, ...]]:
    """Partition ``nodes`` into orbits under the diagram automorphisms."""
    auts = automorphisms(t)
    left = sorted(nodes)
    orbits = []
    while left:
        seed = left[0]
        orb = sorted({a(seed) for a in auts} & set(left))
        orbits.append(tuple(orb))
        left = [x for x in left if x not in orb]
    return orbits
