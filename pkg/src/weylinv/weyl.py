"""Weyl group elements as integer matrices, Coxeter data and balanced collections.

A :class:`WeylElement` acts on column vectors of fundamental-weight
coordinates.  Words are 1-based sequences of simple reflection indices read as
a left-to-right matrix product, so ``word=(1, 2)`` is ``s_1 s_2`` and acts on a
weight by ``s_2`` first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import BudgetExceeded, WeylInvError
from .linalg import Matrix
from .rootsystem import RootSystem

ENUMERATION_BUDGET = 100_000
SEARCH_BUDGET = 5_000_000


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(linalg.matmul(self.matrix, other.matrix), word)

    def __pow__(self, k: int) -> "WeylElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = WeylElement(linalg.identity(self.rank), ())
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self) -> "WeylElement":
        return WeylElement(linalg.matneg(self.matrix))

    def inverse(self) -> "WeylElement":
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(linalg.to_int_matrix(linalg.inverse(self.matrix)), word)

    def act(self, weight) -> tuple[int, ...]:
        return linalg.matvec(self.matrix, weight)

    def is_identity(self) -> bool:
        return self.matrix == linalg.identity(self.rank)

    def det_minus(self, c: int) -> Fraction:
        """det(w - c Id)."""
        n = self.rank
        return linalg.determinant(
            [[self.matrix[i][j] - c * int(i == j) for j in range(n)] for i in range(n)])

    def has_real_eigenvalue(self) -> bool:
        return self.det_minus(1) == 0 or self.det_minus(-1) == 0

    def to_json(self):
        out = {"matrix": [list(r) for r in self.matrix]}
        if self.word is not None:
            out["word"] = list(self.word)
        return out


@dataclass(frozen=True)
class BalancedCollection:
    elements: tuple[WeylElement, ...]
    certificate: Matrix
    pieces: tuple[tuple[str, int], ...] = ()

    def __len__(self):
        return len(self.elements)

    def to_json(self):
        return {
            "size": len(self.elements),
            "pieces": [{"generator": g, "length": k} for g, k in self.pieces],
            "elements": [w.to_json() for w in self.elements],
            "sum": [list(r) for r in self.certificate],
        }


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(linalg.identity(rs.rank), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i for a 1-based index ``i``."""
    if not 1 <= i <= rs.rank:
        raise WeylInvError(f"simple reflection index {i} out of range for {rs.name}")
    a = rs.cartan_matrix
    n = rs.rank
    k0 = i - 1
    m = tuple(tuple(int(k == j) - int(j == k0) * a[k0][k] for j in range(n)) for k in range(n))
    return WeylElement(m, (i,))


def from_word(rs: RootSystem, word) -> WeylElement:
    result = identity_element(rs)
    for i in word:
        result = result * simple_reflection(rs, i)
    return result


def element_from_matrix(rs: RootSystem, matrix) -> WeylElement:
    """Recognise an integer matrix as a Weyl group element and attach a word.

    Reduces ``matrix @ rho`` to ``rho``; since rho has trivial stabiliser the
    reducing word determines the only candidate element.
    """
    matrix = linalg.to_int_matrix(matrix)
    if len(matrix) != rs.rank:
        raise WeylInvError("matrix size does not match the rank")
    x = linalg.matvec(matrix, rs.rho)
    word = []
    while True:
        i = next((k for k, c in enumerate(x) if c < 0), None)
        if i is None:
            break
        x = rs.reflect(x, i)
        word.append(i + 1)
    candidate = from_word(rs, word)
    if x != rs.rho or candidate.matrix != matrix:
        raise WeylInvError("matrix is not an element of the Weyl group")
    return candidate


# -- Coxeter elements and exponents -----------------------------------------

def coxeter_element(rs: RootSystem) -> WeylElement:
    """The product s_1 s_2 ... s_r in index order."""
    return from_word(rs, range(1, rs.rank + 1))


def element_order(w: WeylElement, limit: int = 10_000) -> int:
    ident = linalg.identity(w.rank)
    power = w.matrix
    k = 1
    while power != ident:
        power = linalg.matmul(power, w.matrix)
        k += 1
        if k > limit:
            raise WeylInvError("element order exceeds limit; not a Weyl group element?")
    return k


@lru_cache(maxsize=None)
def _exponents(rs: RootSystem) -> tuple[int, ...]:
    c = coxeter_element(rs)
    h = element_order(c)
    poly = linalg.charpoly(c.matrix)
    found = []
    for d in linalg.divisors(h):
        phi = linalg.cyclotomic(d)
        while True:
            q, r = linalg.polydivmod(poly, phi)
            if r != [0]:
                break
            poly = q
            # roots of Phi_d are exp(2 pi i k/d), gcd(k, d) = 1, i.e. m = k h/d
            found.extend(k * (h // d) for k in range(1, d + 1) if _coprime(k, d))
    if poly != [1]:
        raise ArithmeticError(f"characteristic polynomial of the Coxeter element of {rs.name} "
                              f"did not factor into cyclotomic polynomials")
    found.sort()
    if len(found) != rs.rank or any(not 0 < m < h for m in found) \
            or sum(found) != len(rs.positive_roots):
        raise ArithmeticError(f"inconsistent exponents {found} for {rs.name}")
    return tuple(found)


def _coprime(a, b):
    from math import gcd
    return gcd(a, b) == 1


def exponents(rs: RootSystem) -> list[int]:
    """Exponents m_i: the Coxeter element has eigenvalues exp(2 pi i m_i / h).

    Read off exactly from the cyclotomic factorisation of the characteristic
    polynomial of the Coxeter element.
    """
    return list(_exponents(rs))


def weyl_group_order(rs: RootSystem) -> int:
    out = 1
    for m in _exponents(rs):
        out *= m + 1
    return out


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> WeylElement:
    """w_0, found by driving rho to -rho with simple reflections."""
    x = rs.rho
    applied = []
    while True:
        i = next((k for k, c in enumerate(x) if c > 0), None)
        if i is None:
            break
        x = rs.reflect(x, i)
        applied.append(i + 1)
    # x = s_{i_k} ... s_{i_1} rho
    return from_word(rs, reversed(applied))


def minus_identity_in_weyl(rs: RootSystem) -> bool:
    return longest_element(rs).matrix == linalg.matneg(linalg.identity(rs.rank))


def enumerate_weyl_group(rs: RootSystem, budget: int = ENUMERATION_BUDGET) -> list[WeylElement]:
    """All elements of W by breadth-first closure, in canonical order
    (word length, then lexicographic order of the flattened matrix)."""
    return list(_enumerate(rs, budget))


@lru_cache(maxsize=16)
def _enumerate(rs: RootSystem, budget: int) -> tuple[WeylElement, ...]:
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    start = identity_element(rs)
    depth = {start.matrix: 0}
    elements = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            u = s * w
            if u.matrix not in depth:
                depth[u.matrix] = depth[w.matrix] + 1
                if len(depth) > budget:
                    raise BudgetExceeded(f"|W({rs.name})| exceeds enumeration budget {budget}",
                                         used=len(depth), budget=budget)
                elements.append(u)
                queue.append(u)
    elements.sort(key=lambda w: (depth[w.matrix], linalg.flatten(w.matrix)))
    return tuple(elements)


# -- balanced collections ----------------------------------------------------

def is_balanced(elements) -> bool:
    elements = list(elements)
    if not elements:
        return True
    n = elements[0].rank
    if any(w.rank != n for w in elements):
        raise WeylInvError("elements of a collection must share the same rank")
    total = linalg.zeros(n)
    for w in elements:
        total = linalg.matadd(total, w.matrix)
    return linalg.is_zero(total)


def _collection(elements, pieces=()) -> BalancedCollection:
    elements = tuple(elements)
    n = elements[0].rank
    total = linalg.zeros(n)
    for w in elements:
        total = linalg.matadd(total, w.matrix)
    if not linalg.is_zero(total):
        raise AssertionError("collection is not balanced")
    return BalancedCollection(elements, total, tuple(pieces))


def order3_balanced_check(w: WeylElement) -> bool:
    """True iff w has order 3 and 1 is not an eigenvalue, so Id + w + w^2 = 0."""
    if w.is_identity():
        return False
    if (w ** 3).matrix != linalg.identity(w.rank):
        return False
    if w.det_minus(1) == 0:
        return False
    assert is_balanced([w ** 0, w, w ** 2])
    return True


def _d_odd_quadruple(rs: RootSystem) -> list[WeylElement]:
    """Four diagonal sign changes of D_n, n odd, summing to zero."""
    from .rootsystem import from_epsilon, to_epsilon
    n = rs.rank
    diagonals = [
        [1] + [-1] * (n - 1),
        [-1, 1] + [-1] * (n - 2),
        [-1, -1] + [1] * (n - 2),
        [1] * n,
    ]
    out = []
    for diag in diagonals:
        cols = []
        for j in range(n):
            eps = to_epsilon(rs, tuple(int(i == j) for i in range(n)))
            cols.append(from_epsilon(rs, [d * e for d, e in zip(diag, eps)]))
        matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        out.append(element_from_matrix(rs, matrix))
    return out


def balanced_generators(rs: RootSystem) -> dict[str, list[WeylElement]]:
    """The basic balanced collections available for this type, keyed by name."""
    gens: dict[str, list[WeylElement]] = {}
    c = coxeter_element(rs)
    h = element_order(c)
    if rs.family == "A":
        gens["coxeter-powers"] = [c ** k for k in range(1, h + 1)]
    w0 = longest_element(rs)
    if w0.matrix == linalg.matneg(linalg.identity(rs.rank)):
        gens["id-minus-id"] = [identity_element(rs), w0]
    if h % 3 == 0:
        w = c ** (h // 3)
        if order3_balanced_check(w):
            gens["order-3"] = [identity_element(rs), w, w ** 2]
    if rs.family == "D" and rs.rank % 2 == 1:
        gens["diagonal-4"] = _d_odd_quadruple(rs)
    return gens


def _decompose(m: int, lengths: list[int]) -> list[int] | None:
    """Write m as a sum of the given lengths, largest parts first, by backtracking."""
    lengths = sorted(set(lengths), reverse=True)

    def go(rest, start):
        if rest == 0:
            return []
        for idx in range(start, len(lengths)):
            k = lengths[idx]
            if k <= rest:
                tail = go(rest - k, idx)
                if tail is not None:
                    return [k] + tail
        return None

    return go(m, 0)


def canonical_balanced_collection(rs: RootSystem, m: int) -> BalancedCollection:
    """A balanced collection of exactly ``m`` elements built from the generators
    of :func:`balanced_generators`, concatenated.

    Raises WeylInvError naming the violated bound when ``m`` is not in M(G).
    """
    from .semigroup import center_exponent, contains, m_of_simple

    if not isinstance(m, int) or m < 1:
        raise WeylInvError(f"collection size must be a positive integer, got {m!r}")
    semigroup = m_of_simple(rs.family, rs.rank)
    if not contains(semigroup, m):
        z = center_exponent(rs.family, rs.rank)
        if m % z:
            raise WeylInvError(
                f"m={m} is not in M({rs.name})={semigroup}: the center has a cyclic subgroup "
                f"of order {z}, which does not divide {m}")
        raise WeylInvError(f"m={m} is not in M({rs.name})={semigroup}: below the minimum "
                           f"{semigroup.threshold}")
    gens = balanced_generators(rs)
    by_length = {}
    for name, coll in gens.items():
        by_length.setdefault(len(coll), (name, coll))
    parts = _decompose(m, list(by_length))
    if parts is None:
        raise AssertionError(f"no decomposition of {m} into generator lengths {sorted(by_length)}")
    parts.sort()
    elements, pieces = [], []
    for k in parts:
        name, coll = by_length[k]
        elements.extend(coll)
        pieces.append((name, k))
    return _collection(elements, pieces)


# -- search ------------------------------------------------------------------

def _orbit_sum_reach(vectors, depth):
    """reach[k] = set of sums of k vectors (with repetition) from ``vectors``."""
    reach = [{tuple(0 for _ in vectors[0])}]
    for _ in range(depth):
        reach.append({tuple(a + b for a, b in zip(s, v)) for s in reach[-1] for v in vectors})
    return reach


def search_balanced(rs: RootSystem, m: int, budget: int = SEARCH_BUDGET) -> BalancedCollection | None:
    """Depth-first search for a balanced m-collection over all of W.

    Returns the first collection in canonical element order, or None if the
    exhaustive search proves that none exists.  Raises BudgetExceeded when
    the node budget runs out before either outcome is established.

    Pruning: for each fundamental weight varpi_j, the remaining k elements must
    send varpi_j to vectors summing to minus the current partial image, which
    is checked against the precomputed k-fold sums of the orbit of varpi_j.
    Failed (position, remaining, partial sum) states are memoised.
    """
    if m < 1:
        raise WeylInvError("collection size must be positive")
    group = enumerate_weyl_group(rs)
    n = rs.rank
    mats = [linalg.flatten(w.matrix) for w in group]
    # column j of a Weyl matrix is the image of varpi_j
    col_reach = []
    for j in range(n):
        orbit = sorted({tuple(mat[i * n + j] for i in range(n)) for mat in mats})
        col_reach.append(_orbit_sum_reach(orbit, m))
    size = len(mats)
    nodes = 0
    failed = set()
    chosen: list[int] = []

    def feasible(partial, k):
        for j in range(n):
            target = tuple(-partial[i * n + j] for i in range(n))
            if target not in col_reach[j][k]:
                return False
        return True

    def dfs(start, k, partial):
        nonlocal nodes
        if k == 0:
            return all(x == 0 for x in partial)
        key = (start, k, partial)
        if key in failed:
            return False
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"search for a balanced {m}-collection in W({rs.name}) "
                                 f"exceeded {budget} nodes", used=nodes, budget=budget)
        for idx in range(start, size):
            nxt = tuple(a + b for a, b in zip(partial, mats[idx]))
            if not feasible(nxt, k - 1):
                continue
            chosen.append(idx)
            if dfs(idx, k - 1, nxt):
                return True
            chosen.pop()
        failed.add(key)
        return False

    zero = (0,) * (n * n)
    if not feasible(zero, m) or not dfs(0, m, zero):
        return None
    return _collection([group[i] for i in chosen], [("search", m)])
