"""Exact formal characters: weight multiplicities, dimensions, tensor products
and invariant dimensions.

Characters of irreducible modules come from Freudenthal's recursion on the
dominant weights and are expanded over Weyl orbits.  Tensor products are
decomposed either by multiplying characters and peeling off highest weights
(``method="subtract"``) or by the Brauer-Klimyk reflection rule
(``method="klimyk"``); the two are independent and cross-checked in tests.
"""

from __future__ import annotations

import json
import os
import threading
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, WeylInvError
from .rootsystem import RootSystem, build_root_system, weyl_orbit

DIMENSION_CAP = 10**5
PRODUCT_CAP = 10**6
WORK_CAP = 2 * 10**7

CACHE_FORMAT = "weylinv-character-cache"
CACHE_VERSION = 1

Weight = tuple[int, ...]


@dataclass(frozen=True)
class FormalCharacter:
    root_system: RootSystem
    terms: dict[Weight, int]

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())

    def multiplicity(self, w) -> int:
        return self.terms.get(tuple(w), 0)

    def dominant_terms(self) -> dict[Weight, int]:
        return {w: m for w, m in self.terms.items() if all(x >= 0 for x in w)}

    def to_json(self):
        return [[list(w), m] for w, m in sorted(self.terms.items(), key=_desc)]


@dataclass(frozen=True)
class DecompositionResult:
    root_system: RootSystem
    summands: dict[Weight, int]

    @property
    def dimension(self) -> int:
        return sum(m * irrep_dimension(self.root_system, w) for w, m in self.summands.items())

    def to_json(self):
        return [{"weight": list(w), "multiplicity": m,
                 "dimension": irrep_dimension(self.root_system, w)}
                for w, m in sorted(self.summands.items(), key=_desc)]


def _desc(item):
    w = item[0] if isinstance(item, tuple) and isinstance(item[0], tuple) else item
    return tuple(-x for x in w)


def _check_dominant(rs: RootSystem, lam) -> Weight:
    lam = rs.check_weight(lam)
    if any(x < 0 for x in lam):
        raise WeylInvError(f"{lam} is not dominant")
    return lam


# -- cache -------------------------------------------------------------------

class CharacterCache:
    """Characters keyed by (family, rank, highest weight).

    Reads are lock-free dictionary lookups; writes are serialised.
    """

    def __init__(self):
        self._entries: dict[tuple[str, int, Weight], dict[Weight, int]] = {}
        self._lock = threading.Lock()
        self.dirty = False

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def get(self, key):
        return self._entries.get(key)

    def put(self, key, terms):
        with self._lock:
            if key not in self._entries:
                self._entries[key] = dict(terms)
                self.dirty = True

    def clear(self):
        with self._lock:
            self._entries.clear()
            self.dirty = False

    @staticmethod
    def key_string(key) -> str:
        family, rank, lam = key
        return f"{family}-{rank}-{','.join(map(str, lam))}"

    @staticmethod
    def parse_key(text: str):
        family, rank, coords = text.split("-", 2)
        return family, int(rank), tuple(int(c) for c in coords.split(","))

    def dumps(self) -> str:
        """Serialise with one weight per line, entries in sorted key order."""
        lines = ["{", f'  "format": "{CACHE_FORMAT}",', f'  "version": {CACHE_VERSION},',
                 '  "entries": {']
        keys = sorted(self._entries, key=lambda k: (k[0], k[1], k[2]))
        for n, key in enumerate(keys):
            terms = sorted(self._entries[key].items(), key=_desc)
            lines.append(f'    "{self.key_string(key)}": [')
            for i, (w, m) in enumerate(terms):
                sep = "," if i + 1 < len(terms) else ""
                lines.append(f"      [{json.dumps(list(w))}, {m}]{sep}")
            lines.append("    ]" + ("," if n + 1 < len(keys) else ""))
        lines += ["  }", "}", ""]
        return "\n".join(lines)

    def save(self, path):
        text = self.dumps()
        tmp = f"{path}.tmp{os.getpid()}"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
        self.dirty = False

    def load(self, path):
        """Merge entries from ``path``.  An empty file is an empty cache."""
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        self.loads(text)

    def loads(self, text: str):
        if not text.strip():
            return
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise WeylInvError(f"corrupt cache file at offset {exc.pos}: {exc.msg}") from None
        if not isinstance(doc, dict) or doc.get("format") != CACHE_FORMAT:
            raise WeylInvError("not a character cache file")
        if doc.get("version") != CACHE_VERSION:
            raise WeylInvError(f"cache version {doc.get('version')!r} does not match "
                               f"supported version {CACHE_VERSION}")
        with self._lock:
            for k, terms in doc.get("entries", {}).items():
                try:
                    key = self.parse_key(k)
                    self._entries[key] = {tuple(w): int(m) for w, m in terms}
                except (ValueError, TypeError) as exc:
                    raise WeylInvError(f"malformed cache entry {k!r}: {exc}") from None


CACHE = CharacterCache()


# -- dimensions and characters ----------------------------------------------

def irrep_dimension(rs: RootSystem, lam) -> int:
    """Weyl dimension formula: prod over positive roots of <lam+rho, a^v>/<rho, a^v>."""
    lam = _check_dominant(rs, lam)
    num, den = 1, 1
    d = rs.symmetrizer
    for coeffs in rs.positive_root_coeffs:
        # <x, alpha^vee> = sum_i c_i d_i x_i / d_alpha, and d_alpha cancels in the ratio
        num *= sum(c * di * (x + 1) for c, di, x in zip(coeffs, d, lam))
        den *= sum(c * di for c, di in zip(coeffs, d))
    q, r = divmod(num, den)
    assert r == 0
    return q


def _dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights of V(lam): close {lam} under root strings and reduce to
    dominant representatives (the saturated set with highest weight lam)."""
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for alpha in rs.positive_roots:
            # length of the alpha-string below mu: <mu, alpha^vee>
            pairing = _coroot_pairing(rs, mu, alpha)
            x = mu
            for _ in range(pairing):
                x = tuple(a - b for a, b in zip(x, alpha))
                dom = _to_dominant(rs, x)
                if dom not in seen:
                    seen.add(dom)
                    stack.append(dom)
    return list(seen)


def _coroot_pairing(rs: RootSystem, mu: Weight, alpha: Weight) -> int:
    two = 2 * rs.inner(mu, alpha)
    q = two / rs.inner(alpha, alpha)
    assert q.denominator == 1
    return int(q)


def _to_dominant(rs: RootSystem, w: Weight) -> Weight:
    a = rs.cartan_matrix
    w = list(w)
    while True:
        for i, c in enumerate(w):
            if c < 0:
                row = a[i]
                for k in range(len(w)):
                    w[k] -= c * row[k]
                break
        else:
            return tuple(w)


def _freudenthal(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    dominant = _dominant_weights(rs, lam)
    coeff = {mu: sum(rs.root_coeffs(tuple(a - b for a, b in zip(lam, mu)))) for mu in dominant}
    dominant.sort(key=lambda mu: coeff[mu])
    rho = rs.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = rs.inner(lr, lr)
    pos = [(alpha, rs.inner(alpha, alpha)) for alpha in rs.positive_roots]
    mult = {lam: 1}
    for mu in dominant[1:]:
        total = Fraction(0)
        for alpha, _ in pos:
            k = 1
            while True:
                x = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mult.get(_to_dominant(rs, x), 0)
                if not m:
                    break
                total += m * rs.inner(x, alpha)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        value = 2 * total / (top - rs.inner(mr, mr))
        assert value.denominator == 1 and value > 0
        mult[mu] = int(value)
    return mult


def weight_multiplicities(rs: RootSystem, lam, cap: int = DIMENSION_CAP,
                          cache: CharacterCache | None = None) -> FormalCharacter:
    """The full character of V(lam)."""
    lam = _check_dominant(rs, lam)
    cache = CACHE if cache is None else cache
    key = (rs.family, rs.rank, lam)
    terms = cache.get(key)
    if terms is not None and sum(terms.values()) != irrep_dimension(rs, lam):
        raise WeylInvError(f"cached character of {rs.name} {lam} has the wrong dimension")
    if terms is None:
        dim = irrep_dimension(rs, lam)
        if dim > cap:
            raise BudgetExceeded(f"dim V{lam} = {dim} exceeds the dimension cap {cap}",
                                 used=dim, budget=cap)
        terms = {}
        for mu, m in _freudenthal(rs, lam).items():
            for w in weyl_orbit(rs, mu):
                terms[w] = m
        assert sum(terms.values()) == dim
        cache.put(key, terms)
    return FormalCharacter(rs, dict(terms))


def dominant_character(rs: RootSystem, lam, **kwargs) -> dict[Weight, int]:
    return weight_multiplicities(rs, lam, **kwargs).dominant_terms()


# -- duals -------------------------------------------------------------------

def dual_weight(rs: RootSystem, lam) -> Weight:
    """Highest weight of the dual module, -w0(lam)."""
    from .weyl import longest_element

    lam = _check_dominant(rs, lam)
    w0 = longest_element(rs)
    return tuple(-x for x in w0.act(lam))


# -- tensor products ---------------------------------------------------------

class _Klimyk:
    """Brauer-Klimyk reflection with memoisation of the reflected weights."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.memo: dict[Weight, tuple[Weight, int] | None] = {}

    def reduce(self, x: Weight):
        """For x = nu + rho: (dominant(x) - rho, sign) or None if x is singular."""
        hit = self.memo.get(x, False)
        if hit is not False:
            return hit
        a = self.rs.cartan_matrix
        w = list(x)
        sign = 1
        while True:
            for i, c in enumerate(w):
                if c < 0:
                    row = a[i]
                    for k in range(len(w)):
                        w[k] -= c * row[k]
                    sign = -sign
                    break
            else:
                break
        out = None if 0 in w else (tuple(c - 1 for c in w), sign)
        self.memo[x] = out
        return out


_KLIMYK: dict[RootSystem, _Klimyk] = {}


def _klimyk(rs):
    k = _KLIMYK.get(rs)
    if k is None:
        k = _KLIMYK[rs] = _Klimyk(rs)
    return k


def _tensor_with(rs: RootSystem, decomposition: dict[Weight, int], lam: Weight,
                 cap: int, work: list[int]) -> dict[Weight, int]:
    """(sum_kappa c_kappa V(kappa)) (x) V(lam) by the Brauer-Klimyk rule."""
    char = weight_multiplicities(rs, lam).terms
    work[0] += len(decomposition) * len(char)
    if work[0] > cap:
        raise BudgetExceeded(f"tensor product work {work[0]} exceeds the cap {cap}",
                             used=work[0], budget=cap)
    reducer = _klimyk(rs)
    out: dict[Weight, int] = defaultdict(int)
    items = list(char.items())
    for kappa, c in decomposition.items():
        shifted = tuple(k + 1 for k in kappa)
        for nu, m in items:
            r = reducer.reduce(tuple(a + b for a, b in zip(shifted, nu)))
            if r is not None:
                out[r[0]] += r[1] * c * m
    return {w: m for w, m in out.items() if m}


def _decompose_subtract(rs: RootSystem, lam: Weight, mu: Weight) -> dict[Weight, int]:
    a = weight_multiplicities(rs, lam).terms
    b = weight_multiplicities(rs, mu).terms
    product: dict[Weight, int] = defaultdict(int)
    for x, m in a.items():
        for y, n in b.items():
            z = tuple(p + q for p, q in zip(x, y))
            if all(c >= 0 for c in z):
                product[z] += m * n
    remaining = {w: m for w, m in product.items() if m}
    height = {}
    result: dict[Weight, int] = {}
    while remaining:
        for w in remaining:
            if w not in height:
                height[w] = sum(rs.root_coeffs(w))
        top = max(remaining, key=lambda w: (height[w], w))
        c = remaining[top]
        if c < 0:
            raise ArithmeticError("negative multiplicity while peeling highest weights")
        result[top] = c
        for w, m in dominant_character(rs, top).items():
            left = remaining.get(w, 0) - c * m
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return result


def tensor_decompose(rs: RootSystem, lam, mu, method: str = "subtract",
                     cap: int = PRODUCT_CAP) -> DecompositionResult:
    """Decompose V(lam) (x) V(mu) into irreducibles."""
    lam = _check_dominant(rs, lam)
    mu = _check_dominant(rs, mu)
    size = irrep_dimension(rs, lam) * irrep_dimension(rs, mu)
    if size > cap:
        raise BudgetExceeded(f"product dimension {size} exceeds the cap {cap}", used=size, budget=cap)
    if method == "subtract":
        summands = _decompose_subtract(rs, lam, mu)
    elif method == "klimyk":
        summands = _tensor_with(rs, {lam: 1}, mu, WORK_CAP, [0])
    else:
        raise WeylInvError(f"unknown decomposition method {method!r}")
    if any(m <= 0 for m in summands.values()):
        raise ArithmeticError("non-positive multiplicity in a decomposition")
    return DecompositionResult(rs, summands)


_FOLDS: dict[tuple[RootSystem, tuple[Weight, ...]], dict[Weight, int]] = {}


def _fold(rs: RootSystem, weights: tuple[Weight, ...], cap: int, work: list[int]):
    """Decomposition of V(w_1) (x) ... (x) V(w_k); prefixes are memoised."""
    if not weights:
        return {(0,) * rs.rank: 1}
    if len(weights) == 1:
        return {weights[0]: 1}
    key = (rs, weights)
    hit = _FOLDS.get(key)
    if hit is not None:
        return hit
    prev = _fold(rs, weights[:-1], cap, work)
    out = _tensor_with(rs, prev, weights[-1], cap, work)
    _FOLDS[key] = out
    return out


def _fold_order(rs: RootSystem, weights) -> list[Weight]:
    # the first factor of a fold never needs its character, so lead with the largest
    ws = [_check_dominant(rs, w) for w in weights]
    return sorted(ws, key=lambda w: (-irrep_dimension(rs, w), w))


def tensor_power_decomposition(rs: RootSystem, weights, cap: int = WORK_CAP) -> DecompositionResult:
    ws = tuple(_fold_order(rs, weights))
    return DecompositionResult(rs, dict(_fold(rs, ws, cap, [0])))


def invariant_dimension(rs: RootSystem, weights, cap: int = WORK_CAP) -> int:
    """Multiplicity of the trivial module in V(w_1) (x) ... (x) V(w_k).

    The list is split in two halves A and B; the answer is
    sum_nu mult_A(nu) mult_B(nu*), which needs only two folds of half length.
    """
    ws = _fold_order(rs, weights)
    if not ws:
        return 1
    work = [0]
    half = len(ws) // 2
    left = _fold(rs, tuple(ws[:half]), cap, work)
    right = _fold(rs, tuple(ws[half:]), cap, work)
    total = 0
    for nu, m in left.items():
        n = right.get(dual_weight(rs, nu), 0)
        if n:
            total += m * n
    return total


def clear_memo():
    """Drop fold and reflection memo tables (the character cache is kept)."""
    _FOLDS.clear()
    _KLIMYK.clear()


def character_for(family: str, rank: int, lam, **kwargs) -> FormalCharacter:
    return weight_multiplicities(build_root_system(family, rank), lam, **kwargs)
