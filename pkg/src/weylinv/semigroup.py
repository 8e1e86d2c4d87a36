"""Tensor-invariant semigroups M(G) of simply connected semisimple groups.

M(G) is the set of n such that every nonzero rational G-module V has a nonzero
invariant in its n-th tensor power.  For every simple group it has the closed
form {n : d | n, n >= t}, which is also closed under intersection, so M(G) of
a product is computed factorwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import WeylInvError
from .linalg import lcm
from .rootsystem import build_root_system, validate_type


@dataclass(frozen=True)
class SemigroupDescriptor:
    """The set {n >= 1 : modulus | n, n >= threshold}, or the empty set.

    ``threshold`` is normalised to the least multiple of ``modulus`` that is at
    least the requested bound, so it is always the minimal element.
    """

    empty: bool
    modulus: int = 1
    threshold: int = 1

    def __post_init__(self):
        if self.empty:
            object.__setattr__(self, "modulus", 0)
            object.__setattr__(self, "threshold", 0)
            return
        if self.modulus < 1 or self.threshold < 1:
            raise WeylInvError("modulus and threshold must be positive")
        d, t = self.modulus, self.threshold
        object.__setattr__(self, "threshold", -(-t // d) * d)

    @classmethod
    def multiples(cls, d: int) -> "SemigroupDescriptor":
        return cls(False, d, d)

    @classmethod
    def at_least(cls, t: int, d: int = 1) -> "SemigroupDescriptor":
        return cls(False, d, t)

    @classmethod
    def empty_set(cls) -> "SemigroupDescriptor":
        """M(G) of a reductive group with a nontrivial central torus."""
        return cls(True)

    def __str__(self):
        if self.empty:
            return "{}"
        if self.threshold == self.modulus:
            return "N" if self.modulus == 1 else f"{self.modulus}N"
        if self.modulus == 1:
            return f"{{n>={self.threshold}}}"
        return f"{{n in {self.modulus}N : n>={self.threshold}}}"

    def to_json(self):
        if self.empty:
            return {"empty": True}
        return {"empty": False, "modulus": self.modulus, "threshold": self.threshold}


def contains(s: SemigroupDescriptor, n: int) -> bool:
    if s.empty or n < 1:
        return False
    return n >= s.threshold and n % s.modulus == 0


def min_element(s: SemigroupDescriptor) -> int:
    if s.empty:
        raise WeylInvError("the empty semigroup has no minimal element")
    return s.threshold


def intersect(a: SemigroupDescriptor, b: SemigroupDescriptor) -> SemigroupDescriptor:
    if a.empty or b.empty:
        return SemigroupDescriptor.empty_set()
    return SemigroupDescriptor(False, lcm(a.modulus, b.modulus), max(a.threshold, b.threshold))


def generators(s: SemigroupDescriptor) -> list[int]:
    """Minimal generators: members that are not a sum of two members.

    Every member n >= 2t is t + (n - t), so the generators are the members below 2t.
    """
    if s.empty:
        return []
    return list(range(s.threshold, 2 * s.threshold, s.modulus))


# -- the table for simple groups --------------------------------------------

def m_of_simple(family: str, rank: int) -> SemigroupDescriptor:
    """M(G) for the simple simply connected group of the given type."""
    family, rank = validate_type(family, rank)
    if family == "A":
        return SemigroupDescriptor.multiples(rank + 1)
    if family in "BC":
        return SemigroupDescriptor.multiples(2)
    if family == "D":
        return SemigroupDescriptor.multiples(4 if rank % 2 else 2)
    if family == "E":
        return {6: SemigroupDescriptor.multiples(3),
                7: SemigroupDescriptor.multiples(2),
                8: SemigroupDescriptor.at_least(2)}[rank]
    return SemigroupDescriptor.at_least(2)  # F4, G2


def center_exponent(family: str, rank: int) -> int:
    """Largest order of a cyclic subgroup of the center of the simply connected group."""
    family, rank = validate_type(family, rank)
    if family == "A":
        return rank + 1
    if family in "BC":
        return 2
    if family == "D":
        return 4 if rank % 2 else 2
    if family == "E":
        return {6: 3, 7: 2, 8: 1}[rank]
    return 1


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise WeylInvError("a group needs at least one simple factor")
        object.__setattr__(self, "factors",
                           tuple(validate_type(f, r) for f, r in self.factors))

    def __str__(self):
        return "x".join(f"{f}{r}" for f, r in self.factors)


def m_of_semisimple(spec: GroupSpec) -> SemigroupDescriptor:
    result = None
    for family, rank in spec.factors:
        s = m_of_simple(family, rank)
        result = s if result is None else intersect(result, s)
    return result


# -- empirical screen --------------------------------------------------------

@dataclass(frozen=True)
class MembershipCheck:
    holds: bool
    witness: tuple[int, ...] | None
    checked: int


def dominant_grid(rank: int, bound: int) -> list[tuple[int, ...]]:
    """Nonzero dominant weights with coordinates <= bound, lowest total degree
    first and, within a degree, weights on earlier fundamental weights first."""
    grid = [w for w in product(range(bound + 1), repeat=rank) if any(w)]
    grid.sort(key=lambda w: (sum(w), tuple(-c for c in w)))
    return grid


def verify_membership(family: str, rank: int, n: int, coordinate_bound: int,
                      cap: int | None = None) -> MembershipCheck:
    """Check that V(lam)^{(x) n} has an invariant for every dominant lam in a grid.

    This is a falsification screen over finitely many modules, not a proof.
    """
    from . import characters

    rs = build_root_system(family, rank)
    checked = 0
    for lam in dominant_grid(rs.rank, coordinate_bound):
        kwargs = {} if cap is None else {"cap": cap}
        if characters.invariant_dimension(rs, [lam] * n, **kwargs) == 0:
            return MembershipCheck(False, lam, checked + 1)
        checked += 1
    return MembershipCheck(True, None, checked)
