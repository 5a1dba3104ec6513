"""The package against the brute-force oracle: frozen values and a live rerun."""
from __future__ import annotations

import pytest

import oracle_bruteforce as ob
from golden import ORACLE

from conftest import analysis_of, carving_of


def package_view(family, rank, L):
    c = carving_of(family, rank, L)
    an = analysis_of(family, rank, L)
    members = {x for ps in an.pair_sets.values() for p in ps for x in p}
    from sandwich.carving import restrict
    return {
        "coeffs": c.h_star_coeffs,
        "hstar_x2": c.h_star.coords_x2,
        "n_roots": len(c.parent.all_roots),
        "r_minus": len(c.Rminus),
        "sandwich": an.sandwich,
        "n_center": len(an.center_roots),
        "heis": tuple(sorted(len(ps) for ps in an.pair_sets.values())),
        "abelian_dim": len(c.Rminus) - len(members) - len(an.pair_sets),
        "hat_sizes": tuple(sorted(len(h.members) for h in restrict(c))),
    }


@pytest.mark.parametrize("label", sorted(ORACLE))
def test_package_matches_frozen_oracle(label):
    case, expected = ORACLE[label]
    assert package_view(*case) == expected


@pytest.mark.parametrize("label", sorted(ob.ENTRIES))
def test_frozen_values_match_live_oracle(label):
    live = ob.analyse(*ob.ENTRIES[label])
    live.pop("cartan")
    frozen = ORACLE[label][1]
    assert {k: tuple(x) if isinstance(x, list) else x for k, x in live.items()} == frozen


@pytest.mark.parametrize("case", [("A", 3, 1), ("B", 3, 3), ("C", 5, 1), ("D", 6, 5),
                                  ("D", 4, 4), ("B", 2, 2), ("C", 3, 3)])
def test_live_oracle_on_other_ranks(case):
    live = ob.analyse(*case)
    live.pop("cartan")
    live = {k: tuple(x) if isinstance(x, list) else x for k, x in live.items()}
    assert package_view(*case) == live
