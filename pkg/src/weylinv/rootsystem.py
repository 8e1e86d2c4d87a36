"""Root systems of simple types with exact data, in fundamental-weight coordinates.

Conventions
-----------
* ``cartan_matrix[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` is the simple
  root ``alpha_i`` written in the basis of fundamental weights.
* Weights are integer tuples in the fundamental-weight basis; ``lam[i]`` is
  ``<lam, alpha_i^vee>``.
* Numbering: B_n has ``alpha_n`` short, C_n has ``alpha_n`` long, D_n has the
  half-spin nodes ``n-1`` and ``n``.  E_r is the chain ``1..r-1`` with node ``r``
  attached to node ``r-3``, so that ``varpi_1`` of E6 is the 27-dimensional
  module.  F4 has ``alpha_1, alpha_2`` long, G2 has ``alpha_1`` short.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetExceeded, WeylInvError
from .linalg import Matrix, inverse

Weight = tuple[int, ...]

FAMILIES = "ABCDEFG"
ORBIT_BUDGET = 10**6


def validate_type(family: str, rank: int) -> tuple[str, int]:
    """Normalise and check a (family, rank) pair; raise WeylInvError if invalid."""
    if not isinstance(family, str) or family.upper() not in FAMILIES or len(family) != 1:
        raise WeylInvError(f"unknown family {family!r}")
    family = family.upper()
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise WeylInvError(f"rank must be an integer, got {rank!r}")
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not ok:
        raise WeylInvError(f"rank {rank} out of range for family {family}")
    return family, rank


def cartan_matrix(family: str, rank: int) -> Matrix:
    family, n = validate_type(family, rank)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j):  # 1-based simply-laced edge
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1

    if family in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if family == "B":
            a[n - 2][n - 1] = -2
        elif family == "C":
            a[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif family == "E":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 3, n)
    elif family == "F":
        link(1, 2)
        link(2, 3)
        link(3, 4)
        a[1][2] = -2
    elif family == "G":
        a[0][1] = -1
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def _symmetrizer(a: Matrix) -> tuple[int, ...]:
    """Integers d_i = (alpha_i, alpha_i)/2 with a_ij d_j = a_ji d_i, shortest root d = 1."""
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if a[i][j] and d[j] is None:
                # a_ij d_j = a_ji d_i
                d[j] = d[i] * a[j][i] / a[i][j]
                queue.append(j)
    low = min(d)
    d = [x / low for x in d]
    assert all(x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan_matrix: Matrix
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Weight, ...]          # fundamental-weight coordinates
    positive_root_coeffs: tuple[Weight, ...]    # simple-root coordinates
    _gram: tuple = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self.cartan_matrix

    @property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def coxeter_number(self) -> int:
        return 2 * len(self.positive_roots) // self.rank

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra: rank plus number of roots."""
        return self.rank + 2 * len(self.positive_roots)

    def __str__(self):
        return self.name

    def check_weight(self, w) -> Weight:
        w = tuple(w)
        if len(w) != self.rank:
            raise WeylInvError(f"weight {w} has length {len(w)}, expected {self.rank} for {self.name}")
        if not all(isinstance(x, int) for x in w):
            raise WeylInvError(f"weight {w} must have integer coordinates")
        return w

    def inner(self, x, y) -> Fraction:
        """Invariant form on weights, normalised so the shortest roots have (a, a) = 2."""
        g = self._gram
        return sum((g[i][j] * x[i] * y[j] for i in range(self.rank) for j in range(self.rank)
                    if x[i] and y[j]), Fraction(0))

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i (0-based index)."""
        c = w[i]
        if not c:
            return w
        row = self.cartan_matrix[i]
        return tuple(x - c * r for x, r in zip(w, row))

    def root_coeffs(self, w: Weight) -> tuple[Fraction, ...]:
        """Coordinates of ``w`` in the basis of simple roots."""
        inv = _inverse_cartan(self.cartan_matrix)
        return tuple(sum((w[i] * inv[i][j] for i in range(self.rank)), Fraction(0))
                     for j in range(self.rank))


@lru_cache(maxsize=None)
def _inverse_cartan(a: Matrix):
    return inverse(a)


def _positive_roots(a: Matrix) -> list[Weight]:
    """All positive roots in simple-root coordinates, by closing the simple roots
    under simple reflections and keeping the non-negative ones."""
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            pairing = sum(beta[j] * a[j][i] for j in range(n))
            if not pairing:
                continue
            image = tuple(b - pairing * int(j == i) for j, b in enumerate(beta))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    positive = [r for r in seen if all(c >= 0 for c in r)]
    assert 2 * len(positive) == len(seen)
    positive.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
    return positive


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of type ``family`` and ``rank``.

    >>> len(build_root_system("E", 8).positive_roots)
    120
    """
    family, rank = validate_type(family, rank)
    a = cartan_matrix(family, rank)
    d = _symmetrizer(a)
    coeffs = _positive_roots(a)
    weights = [tuple(sum(c[j] * a[j][i] for j in range(rank)) for i in range(rank)) for c in coeffs]
    inv = inverse(a)
    # (varpi_i, varpi_j) = (A^-1)_ij d_j
    gram = tuple(tuple(inv[i][j] * d[j] for j in range(rank)) for i in range(rank))
    return RootSystem(family, rank, a, d, tuple(weights), tuple(coeffs), gram)


def is_dominant(rs: RootSystem, w) -> bool:
    w = rs.check_weight(w)
    return all(x >= 0 for x in w)


def dominant_representative(rs: RootSystem, w: Weight) -> tuple[Weight, int]:
    """Return the dominant element of the orbit of ``w`` and the number of
    simple reflections used to reach it."""
    steps = 0
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = rs.reflect(w, i)
                steps += 1
                break
        else:
            return w, steps


def _orbit_key(w: Weight):
    return tuple(-x for x in w)


def weyl_orbit(rs: RootSystem, w, budget: int = ORBIT_BUDGET) -> list[Weight]:
    """The Weyl orbit of ``w``, sorted in canonical (descending lexicographic) order."""
    w = rs.check_weight(w)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for i in range(rs.rank):
            y = rs.reflect(x, i)
            if y not in seen:
                seen.add(y)
                if len(seen) > budget:
                    raise BudgetExceeded(f"orbit of {w} in {rs.name} exceeds budget {budget}",
                                         used=len(seen), budget=budget)
                queue.append(y)
    return sorted(seen, key=_orbit_key)


# -- epsilon coordinates (types A and D) ------------------------------------

def to_epsilon(rs: RootSystem, w) -> tuple[Fraction, ...]:
    """Ambient coordinates of a weight.

    A_{n-1}: vectors in Q^n with coordinate sum zero.
    D_r: the standard basis e_1..e_r, with varpi_{r-1}, varpi_r the half-spin weights.
    """
    w = rs.check_weight(w)
    if rs.family == "A":
        n = rs.rank + 1
        out = [Fraction(0)] * n
        for i, c in enumerate(w, start=1):
            for k in range(n):
                out[k] += c * (Fraction(int(k < i)) - Fraction(i, n))
        return tuple(out)
    if rs.family == "D":
        r = rs.rank
        out = [Fraction(0)] * r
        for i, c in enumerate(w, start=1):
            if not c:
                continue
            if i <= r - 2:
                for k in range(i):
                    out[k] += c
            else:
                half = Fraction(c, 2)
                for k in range(r - 1):
                    out[k] += half
                out[r - 1] += half if i == r else -half
        return tuple(out)
    raise WeylInvError(f"epsilon coordinates are only supported for types A and D, not {rs.family}")


def from_epsilon(rs: RootSystem, x) -> Weight:
    """Inverse of :func:`to_epsilon`; raises if ``x`` is not in the weight lattice."""
    x = [Fraction(c) for c in x]
    if rs.family == "A":
        if len(x) != rs.rank + 1:
            raise WeylInvError(f"expected {rs.rank + 1} epsilon coordinates")
        coords = [x[i] - x[i + 1] for i in range(rs.rank)]
    elif rs.family == "D":
        r = rs.rank
        if len(x) != r:
            raise WeylInvError(f"expected {r} epsilon coordinates")
        coords = [x[i] - x[i + 1] for i in range(r - 1)] + [x[r - 2] + x[r - 1]]
        if any((c - x[0]).denominator != 1 for c in x):
            raise WeylInvError(f"{tuple(x)} is not in the weight lattice of {rs.name}")
    else:
        raise WeylInvError(f"epsilon coordinates are only supported for types A and D, not {rs.family}")
    if any(c.denominator != 1 for c in coords):
        raise WeylInvError(f"{tuple(x)} is not in the weight lattice of {rs.name}")
    return tuple(int(c) for c in coords)


def is_epsilon_dominant(family: str, x) -> bool:
    """Dominance read off ambient coordinates."""
    x = list(x)
    if family == "D":
        return all(x[i] >= x[i + 1] for i in range(len(x) - 2)) and x[-2] >= abs(x[-1])
    if family == "A":
        return all(x[i] >= x[i + 1] for i in range(len(x) - 1))
    raise WeylInvError(f"unsupported family {family}")
