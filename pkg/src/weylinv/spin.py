"""Spin_{2r} standard tableaux and the tensor rule for multiples of a half-spin weight.

Tableaux of shape q*varpi_r are stored as q rows of length r, listed from the
top row down.  Rows are strictly increasing, columns weakly increase from the
bottom row to the top row, and a row never holds both i and 2r+1-i.  With r
entries and r such pairs, a row is fixed by the set I of its entries <= r;
the others are 2r+1-j for j outside I, and their number must be even.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .characters import DecompositionResult, invariant_dimension, irrep_dimension
from .errors import BudgetExceeded, WeylInvError
from .rootsystem import build_root_system, from_epsilon, is_epsilon_dominant, to_epsilon

TABLEAU_BUDGET = 10**6


@dataclass(frozen=True)
class SpinShape:
    rank: int
    weight: tuple[int, ...]
    rows: tuple[int, ...]

    @property
    def rectangle(self) -> tuple[int, int] | None:
        """(rows, columns) of the working rectangle when the weight is q*varpi_r."""
        q = self.weight[-1]
        if q and not any(self.weight[:-1]):
            return (q, self.rank)
        return None


@dataclass(frozen=True)
class SpinTableau:
    rank: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        problem = _standardness_problem(self.rank, self.entries)
        if problem:
            raise WeylInvError(f"not a standard Spin_{2 * self.rank} tableau: {problem}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    def count(self, i: int) -> int:
        return sum(row.count(i) for row in self.entries)


def _row_problem(r: int, row) -> str | None:
    if len(row) != r:
        return f"row {row} does not have {r} entries"
    if any(not 1 <= x <= 2 * r for x in row):
        return f"row {row} has an entry outside 1..{2 * r}"
    if any(a >= b for a, b in zip(row, row[1:])):
        return f"row {row} is not strictly increasing"
    s = set(row)
    if any(2 * r + 1 - i in s for i in s):
        return f"row {row} contains a pair i, {2 * r + 1}-i"
    if sum(x > r for x in row) % 2:
        return f"row {row} has an odd number of entries greater than {r}"
    return None


def _standardness_problem(r: int, entries) -> str | None:
    for row in entries:
        p = _row_problem(r, row)
        if p:
            return p
    for upper, lower in zip(entries, entries[1:]):
        if any(a < b for a, b in zip(upper, lower)):
            return f"column condition fails between {upper} above {lower}"
    return None


def row_from_subset(r: int, kept) -> tuple[int, ...]:
    """The row whose entries <= r are ``kept``; each removed j contributes 2r+1-j."""
    kept = set(kept)
    return tuple(sorted(kept | {2 * r + 1 - j for j in range(1, r + 1) if j not in kept}))


def standard_rows(r: int) -> list[tuple[int, ...]]:
    rows = []
    for size in range(r, -1, -1):
        if (r - size) % 2:
            continue
        for kept in combinations(range(1, r + 1), size):
            rows.append(row_from_subset(r, kept))
    rows.sort()
    return rows


def shape_of_weight(r: int, lam) -> SpinShape:
    """Row lengths c_1 >= ... of the Young diagram of a dominant D_r weight."""
    rs = build_root_system("D", r)
    lam = rs.check_weight(lam)
    if any(a < 0 for a in lam):
        raise WeylInvError(f"{lam} is not dominant")
    a = (0,) + lam  # 1-based
    rows = []
    for p in range(1, r + 1):
        if p <= r - 2:
            rows.append(2 * sum(a[p:r - 1]) + a[r - 1] + a[r])
        elif p == r - 1:
            rows.append(a[r - 1] + a[r])
        else:
            rows.append(a[r])
    return SpinShape(r, lam, tuple(c for c in rows if c))


def enumerate_standard_tableaux(r: int, q: int, budget: int = TABLEAU_BUDGET) -> list[SpinTableau]:
    """All standard tableaux of shape q*varpi_r, in row-lexicographic order."""
    if r < 2 or q < 0:
        raise WeylInvError("need r >= 2 and q >= 0")
    rows = standard_rows(r)
    out: list[SpinTableau] = []

    def extend(prefix):
        if len(prefix) == q:
            out.append(SpinTableau(r, tuple(prefix)))
            if len(out) > budget:
                raise BudgetExceeded(f"more than {budget} tableaux", used=len(out), budget=budget)
            return
        for row in rows:
            if prefix and any(a < b for a, b in zip(prefix[-1], row)):
                continue
            prefix.append(row)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def tableau_weight(t: SpinTableau, top_rows: int | None = None) -> tuple[Fraction, ...]:
    """v(T) in epsilon coordinates; with ``top_rows=m`` only the top m rows count."""
    r = t.rank
    entries = t.entries if top_rows is None else t.entries[:top_rows]
    counts = [0] * (2 * r + 1)
    for row in entries:
        for x in row:
            counts[x] += 1
    return tuple(Fraction(counts[i] - counts[2 * r + 1 - i], 2) for i in range(1, r + 1))


def tableau_weight_fundamental(t: SpinTableau) -> tuple[int, ...]:
    return from_epsilon(build_root_system("D", t.rank), tableau_weight(t))


def is_lambda_dominant(lam, t: SpinTableau) -> bool:
    """2 lam + 2 v_m(T) dominant for every m, rows counted from the top."""
    rs = build_root_system("D", t.rank)
    base = to_epsilon(rs, lam)
    if not is_epsilon_dominant("D", base):
        raise WeylInvError(f"{tuple(lam)} is not dominant")
    for m in range(1, t.rows + 1):
        v = tableau_weight(t, m)
        if not is_epsilon_dominant("D", [2 * a + 2 * b for a, b in zip(base, v)]):
            return False
    return True


def lr_tensor_decompose(r: int, p: int, q: int) -> DecompositionResult:
    """V(p varpi_r) (x) V(q varpi_r) as a sum of V(p varpi_r + v(T)) over
    p varpi_r-dominant standard tableaux T of shape q varpi_r."""
    if p < q:
        raise WeylInvError(f"need p >= q, got p={p}, q={q}")
    rs = build_root_system("D", r)
    lam = (0,) * (r - 1) + (p,)
    base = to_epsilon(rs, lam)
    summands: dict[tuple[int, ...], int] = {}
    for t in enumerate_standard_tableaux(r, q):
        if is_lambda_dominant(lam, t):
            w = from_epsilon(rs, [a + b for a, b in zip(base, tableau_weight(t))])
            summands[w] = summands.get(w, 0) + 1
    return DecompositionResult(rs, summands)


def half_spin_closed_form(n: int, p: int, q: int) -> DecompositionResult:
    """V(p varpi_{2n+1}) (x) V(q varpi_{2n+1}) for Spin_{4n+2}, generated directly:
    one copy of V((p+q-2s) varpi_{2n+1} + varpi_{i_1} + ... + varpi_{i_s}) for each
    s = 0..q and each multiset of odd indices i_1 <= ... <= i_s <= 2n-1."""
    if n < 1:
        raise WeylInvError("need n >= 1")
    if p < q or q < 0:
        raise WeylInvError(f"need p >= q >= 0, got p={p}, q={q}")
    r = 2 * n + 1
    rs = build_root_system("D", r)
    odd = range(1, 2 * n, 2)
    summands: dict[tuple[int, ...], int] = {}
    for s in range(q + 1):
        for idx in combinations_with_replacement(odd, s):
            w = [0] * r
            w[r - 1] = p + q - 2 * s
            for i in idx:
                w[i - 1] += 1
            w = tuple(w)
            summands[w] = summands.get(w, 0) + 1
    return DecompositionResult(rs, summands)


@dataclass(frozen=True)
class TripleVerdict:
    invariant_free: bool
    min_first_coordinate: Fraction
    reason: str
    oracle: int | None = None

    def to_json(self):
        return {
            "invariant_free": self.invariant_free,
            "min_first_coordinate": str(self.min_first_coordinate),
            "reason": self.reason,
            "oracle_invariant_dimension": self.oracle,
        }


def is_invariant_free_triple(n: int, p: int, q: int, t: int, oracle: bool = False,
                             oracle_cap: int = 10**6) -> TripleVerdict:
    """Whether V(p w) (x) V(q w) (x) V(t w), w = varpi_{2n+1} of Spin_{4n+2}, has no invariant.

    Every summand of the product is V(nu + v(T)) with nu from the closed form of
    the larger two factors and T a standard tableau for the smallest.  A zero
    summand needs a zero first epsilon-coordinate; we compute the minimum of
    that coordinate over all candidates.
    """
    if n < 1:
        raise WeylInvError("need n >= 1")
    p, q, t = sorted((p, q, t), reverse=True)
    if t < 1:
        raise WeylInvError("multiplicities must be positive")
    r = 2 * n + 1
    rs = build_root_system("D", r)
    nu_min = min(to_epsilon(rs, nu)[0] for nu in half_spin_closed_form(n, p, q).summands)
    # v(T)_1 is a sum over rows, so its minimum over t-row tableaux is t times the
    # minimum over single rows (repeating a row keeps the columns weakly increasing)
    row_min = min(Fraction(int(1 in row) - int(2 * r in row), 2) for row in standard_rows(r))
    low = nu_min + t * row_min
    free = low > 0
    reason = (f"first epsilon-coordinate of every candidate summand is >= "
              f"{nu_min} + {t}*({row_min}) = {low}"
              + (" > 0, so the trivial module cannot occur" if free
                 else ", so the first-coordinate argument is inconclusive"))
    checked = None
    if oracle:
        w = lambda k: (0,) * (r - 1) + (k,)
        dims = irrep_dimension(rs, w(p)) * irrep_dimension(rs, w(q)) * irrep_dimension(rs, w(t))
        if dims <= oracle_cap:
            checked = invariant_dimension(rs, [w(p), w(q), w(t)])
    return TripleVerdict(free, low, reason, checked)
