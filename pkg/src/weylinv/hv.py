"""Orbit dimensions of tuples of weight vectors in minuscule modules.

The stabiliser in Lie G of a weight vector is spanned by a subspace of the
Cartan subalgebra and root spaces.  For a minuscule module V(lam) the root
vector e_alpha kills a weight vector of weight mu exactly when mu + alpha is
not a weight, so every dimension below is a count over roots.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .characters import weight_multiplicities
from .errors import WeylInvError
from .rootsystem import RootSystem, weyl_orbit


@dataclass(frozen=True)
class TupleStabilizer:
    torus_codim: int
    stabilizer_roots: tuple[tuple[int, ...], ...]
    dimension: int


@dataclass(frozen=True)
class MinusculeModule:
    root_system: RootSystem
    highest_weight: tuple[int, ...]
    weights: frozenset


def is_minuscule(rs: RootSystem, lam) -> bool:
    char = weight_multiplicities(rs, lam)
    orbit = weyl_orbit(rs, lam)
    return len(char.terms) == len(orbit) == char.dimension


def minuscule_module(rs: RootSystem, lam) -> MinusculeModule:
    lam = rs.check_weight(lam)
    if not is_minuscule(rs, lam):
        raise WeylInvError(f"{lam} is not minuscule for {rs.name}")
    return MinusculeModule(rs, lam, frozenset(weight_multiplicities(rs, lam).terms))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def tuple_stabilizer(rs: RootSystem, lam, weights) -> TupleStabilizer:
    module = minuscule_module(rs, lam)
    weights = [rs.check_weight(w) for w in weights]
    for w in weights:
        if w not in module.weights:
            raise WeylInvError(f"{w} is not a weight of V{module.highest_weight}")
    roots = tuple(a for a in rs.roots
                  if all(_add(mu, a) not in module.weights for mu in weights))
    span = linalg.rank(weights)
    return TupleStabilizer(span, roots, (rs.rank - span) + len(roots))


def hv_dimension(rs: RootSystem, lam) -> int:
    """dim X(lam) = 1 + #{roots alpha : lam + alpha is a weight of V(lam)}."""
    module = minuscule_module(rs, lam)
    return 1 + sum(_add(module.highest_weight, a) in module.weights for a in rs.roots)


def tuple_orbit_dimension(rs: RootSystem, lam, weights) -> int:
    """Dimension of the G-orbit of a tuple of weight vectors with the given weights."""
    return rs.dimension - tuple_stabilizer(rs, lam, weights).dimension


def _witnesses(rs: RootSystem, lam):
    module = minuscule_module(rs, lam)
    target = 2 * hv_dimension(rs, lam)
    for mu in weyl_orbit(rs, module.highest_weight):
        if tuple_orbit_dimension(rs, lam, [module.highest_weight, mu]) == target:
            yield mu


def dense_orbit_witnesses(rs: RootSystem, lam) -> list[tuple[int, ...]]:
    """All mu in P(lam), in canonical order, with dim G.(v_lam, v_mu) = 2 dim X(lam)."""
    return list(_witnesses(rs, lam))


def find_dense_orbit_pair(rs: RootSystem, lam) -> tuple[int, ...] | None:
    return next(_witnesses(rs, lam), None)
