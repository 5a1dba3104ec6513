"""Delete an extremity node and split the roots by the sign of h*."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .exactvec import HalfVec, StructuralError, delete_row, delete_row_col, dot, kernel_generator
from .rootsys import RootSystem, SimpleType, diagram_type, extremities

Roots = Tuple[HalfVec, ...]


class NotExtremityError(ValueError):
    """Deleting this node disconnects the diagram, so the retained algebra is not simple."""


@dataclass(frozen=True)
class Carving:
    parent: RootSystem
    L: int
    h_star: HalfVec
    h_star_coeffs: Tuple[int, ...]
    g_type: SimpleType
    R0: Roots
    Rminus: Roots
    Rplus: Roots


@dataclass(frozen=True)
class HatClass:
    representative_functional: Tuple[Fraction, ...]
    members: Roots


def _hstar(rs: RootSystem, L: int) -> Tuple[Tuple[int, ...], HalfVec]:
    coeffs = kernel_generator(delete_row(rs.cartan, L))
    h = HalfVec.zero(rs.ambient_dim)
    for c, hj in zip(coeffs, rs.coweight_basis):
        h = h + hj.scale(c)
    if dot(rs.simple_roots[L - 1], h) < 0:
        coeffs = tuple(-c for c in coeffs)
        h = -h
    return coeffs, h


def carve(rs: RootSystem, L: int, allow_non_extremity: bool = False) -> Carving:
    """Split ``rs`` along node ``L``.

    With ``allow_non_extremity`` a middle node is processed too; the
    retained diagram is then disconnected and ``g_type`` is ``None``.
    """
    if not 1 <= L <= rs.rank:
        raise ValueError(f"node {L} out of range 1..{rs.rank} for {rs.type}")
    is_ext = L in extremities(rs.type)
    if not is_ext and not allow_non_extremity:
        raise NotExtremityError(
            f"node {L} of {rs.type} is not an extremity: removal disconnects the diagram")
    coeffs, h = _hstar(rs, L)
    g_type = diagram_type(delete_row_col(rs.cartan, L)) if is_ext else None
    r0, rm, rp = [], [], []
    for r in rs.all_roots:
        v = dot(r, h)
        (r0 if v == 0 else rm if v < 0 else rp).append(r)
    return Carving(rs, L, h, coeffs, g_type, tuple(r0), tuple(rm), tuple(rp))


def check_fact_4_2(c: Carving) -> bool:
    """Roots below zero carry a negative L-th simple coefficient; R0 carries none."""
    i = c.L - 1
    rs = c.parent
    try:
        return (all(rs.simple_coefficients(r)[i] < 0 for r in c.Rminus)
                and all(rs.simple_coefficients(r)[i] == 0 for r in c.R0))
    except StructuralError:
        raise


def restriction(c: Carving, root: HalfVec) -> Tuple[Fraction, ...]:
    return tuple(dot(root, h) for j, h in enumerate(c.parent.coweight_basis) if j != c.L - 1)


def restrict(c: Carving) -> List[HatClass]:
    groups = {}
    for r in c.Rminus:
        groups.setdefault(restriction(c, r), []).append(r)
    return [HatClass(k, tuple(sorted(v))) for k, v in sorted(groups.items())]


def property_three_holds(c: Carving) -> bool:
    return all(len(h.members) == 1 for h in restrict(c))
