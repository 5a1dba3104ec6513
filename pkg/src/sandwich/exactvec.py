"""Exact half-integer vectors and small integer matrices.

Coordinates are stored doubled so every root and coweight in the tables
fits in plain integers.  Pairings come back as :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


class StructuralError(ValueError):
    """Input was not of the shape a node-deleted Cartan matrix has."""


@dataclass(frozen=True, order=True)
class HalfVec:
    coords_x2: Tuple[int, ...]

    def __post_init__(self):
        if not self.coords_x2:
            raise ValueError("HalfVec needs at least one coordinate")
        object.__setattr__(self, "coords_x2", tuple(int(c) for c in self.coords_x2))

    @classmethod
    def from_coords(cls, coords: Iterable) -> "HalfVec":
        out = []
        for c in coords:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            out.append(int(c2))
        return cls(tuple(out))

    @classmethod
    def zero(cls, dim: int) -> "HalfVec":
        return cls((0,) * dim)

    @classmethod
    def unit(cls, dim: int, i: int, coeff=1) -> "HalfVec":
        """``coeff * e_i`` with ``i`` counted from 1."""
        v = [0] * dim
        v[i - 1] = int(Fraction(coeff) * 2)
        return cls(tuple(v))

    @property
    def dim(self) -> int:
        return len(self.coords_x2)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.coords_x2)

    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self.coords_x2)

    def is_half_odd(self) -> bool:
        return all(c % 2 != 0 for c in self.coords_x2)

    def is_zero(self) -> bool:
        return not any(self.coords_x2)

    def _check(self, other: "HalfVec"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "HalfVec") -> "HalfVec":
        self._check(other)
        return HalfVec(tuple(a + b for a, b in zip(self.coords_x2, other.coords_x2)))

    def __sub__(self, other: "HalfVec") -> "HalfVec":
        self._check(other)
        return HalfVec(tuple(a - b for a, b in zip(self.coords_x2, other.coords_x2)))

    def __neg__(self) -> "HalfVec":
        return HalfVec(tuple(-a for a in self.coords_x2))

    def scale(self, k: int) -> "HalfVec":
        return HalfVec(tuple(k * a for a in self.coords_x2))

    def __str__(self) -> str:
        return format_linear(self.coords, "e")

    def __repr__(self) -> str:
        return f"HalfVec({list(self.coords_x2)})"


def format_linear(coeffs: Sequence[Fraction], symbol: str) -> str:
    """Render ``sum c_i symbol_i``, pulling out a common 1/2 when it helps."""
    coeffs = [Fraction(c) for c in coeffs]
    if not any(coeffs):
        return "0"
    if any(c.denominator != 1 for c in coeffs):
        inner = format_linear([2 * c for c in coeffs], symbol)
        return f"1/2({inner})"
    parts = []
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        mag = abs(c)
        body = f"{symbol}{i}" if mag == 1 else f"{mag}{symbol}{i}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def check_root_parity(v: HalfVec) -> None:
    """Reject mixed-parity vectors (roots are all-integer or all-half-odd)."""
    if not (v.is_integral() or v.is_half_odd()):
        raise ValueError(f"{v!r} mixes integer and half-integer coordinates")


def dot(a: HalfVec, b: HalfVec) -> Fraction:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return Fraction(sum(x * y for x, y in zip(a.coords_x2, b.coords_x2)), 4)


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError("rows * cols must equal the number of entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __str__(self) -> str:
        if not self.entries:
            return "()"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in self.row(i))
                         for i in range(self.rows))


def delete_row(m: IntMatrix, L: int) -> IntMatrix:
    """Drop row ``L`` (1-based)."""
    if not 1 <= L <= m.rows:
        raise ValueError(f"row {L} out of range 1..{m.rows}")
    return IntMatrix.from_rows([m.row(i) for i in range(m.rows) if i != L - 1], m.cols)


def delete_row_col(m: IntMatrix, L: int) -> IntMatrix:
    """Drop row and column ``L`` (1-based) of a square matrix."""
    if m.rows != m.cols:
        raise ValueError("delete_row_col needs a square matrix")
    if not 1 <= L <= m.rows:
        raise ValueError(f"index {L} out of range 1..{m.rows}")
    keep = [i for i in range(m.rows) if i != L - 1]
    return IntMatrix.from_rows([[m[i, j] for j in keep] for i in keep], len(keep))


def _echelon(rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form; rows are kept primitive."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [pv * a - f * b for a, b in zip(rows[i], rows[r])]
                g = math.gcd(*rows[i])
                if g > 1:
                    rows[i] = [a // g for a in rows[i]]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return len(_echelon([list(r) for r in rows])[1])


def kernel_generator(m: IntMatrix) -> Tuple[int, ...]:
    """Primitive integer generator of a one-dimensional kernel.

    The sign is whatever elimination produces; callers fix it.
    """
    if m.rows != m.cols - 1:
        raise StructuralError(f"expected a {m.cols - 1}x{m.cols} matrix, got {m.rows}x{m.cols}")
    ech, pivots = _echelon(m.to_lists()) if m.rows else ([], [])
    free = [c for c in range(m.cols) if c not in pivots]
    if len(free) != 1:
        raise StructuralError(f"kernel has dimension {len(free)}, expected 1")
    f = free[0]
    x = [Fraction(0)] * m.cols
    x[f] = Fraction(1)
    # reduced form: each pivot row has a single nonzero among pivot columns
    for row, c in zip(ech, pivots):
        x[c] = Fraction(-row[f], row[c])
    den = math.lcm(*(v.denominator for v in x))
    ints = [int(v * den) for v in x]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


def solve_exact(columns: Sequence[HalfVec], target: HalfVec) -> Tuple[Fraction, ...]:
    """Coefficients ``k`` with ``sum k_i columns[i] == target``.

    The columns must be linearly independent; the ambient dimension may
    exceed their number.  Raises ``StructuralError`` when ``target`` is
    outside their span.
    """
    n = len(columns)
    dim = target.dim
    aug = [[Fraction(col.coords_x2[r]) for col in columns] + [Fraction(target.coords_x2[r])]
           for r in range(dim)]
    piv_row = 0
    pivots = []
    for c in range(n):
        p = next((i for i in range(piv_row, dim) if aug[i][c] != 0), None)
        if p is None:
            raise StructuralError("columns are linearly dependent")
        aug[piv_row], aug[p] = aug[p], aug[piv_row]
        pv = aug[piv_row][c]
        aug[piv_row] = [a / pv for a in aug[piv_row]]
        for i in range(dim):
            if i != piv_row and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[piv_row])]
        pivots.append(piv_row)
        piv_row += 1
    if any(aug[i][n] != 0 for i in range(piv_row, dim)):
        raise StructuralError(f"{target} is not in the span of the given vectors")
    return tuple(aug[i][n] for i in pivots)


class SpanSolver:
    """Repeated exact solves against one fixed set of independent columns.

    Precomputes an integer left inverse ``M`` with ``M A = d I`` through the
    Gram matrix, then checks every answer by reconstructing the target.
    """

    def __init__(self, columns: Sequence[HalfVec]):
        self.columns = tuple(columns)
        n = len(self.columns)
        gram = [[dot(a, b) for b in self.columns] for a in self.columns]
        inv = _inverse(gram)
        den = math.lcm(*(x.denominator for row in inv for x in row))
        # rows of M act on doubled coordinates; the 1/4 from dot goes into the denominator
        self._m = [[int(sum(inv[i][k] * den * self.columns[k].coords_x2[r] for k in range(n)))
                    for r in range(self.columns[0].dim)] for i in range(n)]
        self._den = den * 4

    def solve(self, target: HalfVec) -> Tuple[Fraction, ...]:
        ks = tuple(Fraction(sum(m * t for m, t in zip(row, target.coords_x2)), self._den)
                   for row in self._m)
        back = [sum(k * col.coords_x2[r] for k, col in zip(ks, self.columns))
                for r in range(target.dim)]
        if back != list(target.coords_x2):
            raise StructuralError(f"{target} is not in the span of the given vectors")
        return ks


def _inverse(m: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise StructuralError("columns are linearly dependent")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
