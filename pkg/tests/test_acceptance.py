"""Acceptance gate.  One test (or parametrised family) per criterion; the
conftest hook prints one PASS/FAIL line per criterion at the end of the run."""

import random
import time

import pytest

from weylinv import characters
from weylinv.cli import run
from weylinv.characters import dual_weight, invariant_dimension, irrep_dimension, tensor_decompose
from weylinv.hv import hv_dimension, is_minuscule, tuple_orbit_dimension
from weylinv.rootsystem import build_root_system, weyl_orbit
from weylinv.semigroup import center_exponent, contains, generators, m_of_simple
from weylinv.spin import half_spin_closed_form, is_invariant_free_triple, lr_tensor_decompose
from weylinv.weyl import (
    canonical_balanced_collection,
    coxeter_element,
    element_order,
    exponents,
    is_balanced,
    minus_identity_in_weyl,
    search_balanced,
    weyl_group_order,
)

TABLE_TYPES = ([("A", n) for n in range(1, 8)] + [("B", n) for n in range(2, 9)]
               + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)]
               + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])

# the M(G) table, transcribed independently of the library as (modulus, threshold):
# kN -> (k, k); {n >= 2} -> (1, 2)
EXPECTED_M = {
    **{("A", n): (n + 1, n + 1) for n in range(1, 8)},
    **{("B", n): (2, 2) for n in range(2, 9)},
    **{("C", n): (2, 2) for n in range(2, 9)},
    **{("D", n): ((4, 4) if n % 2 else (2, 2)) for n in range(3, 9)},
    ("E", 6): (3, 3), ("E", 7): (2, 2), ("E", 8): (1, 2), ("F", 4): (1, 2), ("G", 2): (1, 2),
}

RANK3 = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("G", 2)]


def _cli(*argv):
    import json
    code, out = run(list(argv) + ["--no-timing"])
    assert code == 0, out
    return json.loads(out)


def test_criterion_01_mg_table():
    start = time.perf_counter()
    for family, rank in TABLE_TYPES:
        doc = _cli("mg", f"{family}{rank}")
        modulus, threshold = EXPECTED_M[family, rank]
        assert doc["result"]["modulus"] == modulus, (family, rank)
        assert doc["result"]["m"] == threshold, (family, rank)
        expected_str = f"{modulus}N" if modulus > 1 else f"{{n>={threshold}}}"
        assert doc["result"]["M"] == expected_str
    assert _cli("mg", "E6")["result"]["M"] == "3N"
    assert time.perf_counter() - start < 1.0


def test_criterion_02_certificates():
    start = time.perf_counter()
    for family, rank in TABLE_TYPES:
        rs = build_root_system(family, rank)
        s = m_of_simple(family, rank)
        z = center_exponent(family, rank)
        for m in generators(s):
            coll = canonical_balanced_collection(rs, m)
            assert len(coll) == m
            assert is_balanced(coll.elements), (family, rank, m)
        for n in range(1, 60):
            if contains(s, n):
                assert n % z == 0
    assert time.perf_counter() - start < 1.0


def test_criterion_03_coxeter_data():
    start = time.perf_counter()
    assert element_order(coxeter_element(build_root_system("F", 4))) == 12
    assert element_order(coxeter_element(build_root_system("E", 6))) == 12
    assert element_order(coxeter_element(build_root_system("E", 8))) == 30
    for n in range(2, 9):
        assert element_order(coxeter_element(build_root_system("A", n - 1))) == n
    assert exponents(build_root_system("F", 4)) == [1, 5, 7, 11]
    assert exponents(build_root_system("E", 6)) == [1, 4, 5, 7, 8, 11]
    assert weyl_group_order(build_root_system("E", 6)) == 51840 == 2**7 * 3**4 * 5
    assert exponents(build_root_system("E", 8)) == [1, 7, 11, 13, 17, 19, 23, 29]
    assert time.perf_counter() - start < 5.0


def test_criterion_04_search_matches_table():
    start = time.perf_counter()
    for family, rank in RANK3:
        rs = build_root_system(family, rank)
        s = m_of_simple(family, rank)
        for m in range(1, 9):
            found = search_balanced(rs, m)
            assert (found is not None) == contains(s, m), (family, rank, m)
            if found is not None:
                assert is_balanced(found.elements)
    assert time.perf_counter() - start < 120.0


def test_criterion_05_balanced_collections_give_invariants():
    start = time.perf_counter()
    rng = random.Random(20240611)
    checked = 0
    for _ in range(200):
        family, rank = rng.choice(RANK3)
        rs = build_root_system(family, rank)
        lam = tuple(rng.randint(0, 2) for _ in range(rank))
        if not any(lam):
            lam = (1,) + lam[1:]
        s = m_of_simple(family, rank)
        for m in range(1, 7):
            if not contains(s, m):
                continue
            assert is_balanced(canonical_balanced_collection(rs, m).elements)
            assert invariant_dimension(rs, [lam] * m) >= 1, (family, rank, lam, m)
            checked += 1
    assert checked > 200
    assert time.perf_counter() - start < 300.0


def test_criterion_06_spin_lr():
    start = time.perf_counter()
    for n in (1, 2):
        r = 2 * n + 1
        rs = build_root_system("D", r)
        for p in range(0, 7):
            for q in range(0, p + 1):
                if p + q > 6 or p == 0:
                    continue
                lr = lr_tensor_decompose(r, p, q)
                closed = half_spin_closed_form(n, p, q)
                assert lr.summands == closed.summands, (n, p, q)
                assert set(closed.summands.values()) == {1}
                w = lambda k: (0,) * (r - 1) + (k,)
                assert closed.dimension == irrep_dimension(rs, w(p)) * irrep_dimension(rs, w(q))
                if n == 1 and p + q <= 5:
                    assert tensor_decompose(rs, w(p), w(q)).summands == lr.summands
    assert time.perf_counter() - start < 60.0


def test_criterion_07_invariant_free_triples():
    start = time.perf_counter()
    rs = build_root_system("D", 3)
    w = lambda k: (0, 0, k)
    for p in range(1, 4):
        for q in range(1, p + 1):
            for t in range(1, q + 1):
                assert invariant_dimension(rs, [w(p), w(q), w(t)]) == 0, (p, q, t)
    for n in range(1, 4):
        for p in range(1, 6):
            for q in range(1, p + 1):
                for t in range(1, q + 1):
                    verdict = is_invariant_free_triple(n, p, q, t)
                    assert verdict.invariant_free, (n, p, q, t)
                    assert verdict.min_first_coordinate > 0
                    assert "first epsilon-coordinate" in verdict.reason
    assert time.perf_counter() - start < 60.0


def test_criterion_08_e6_geometry():
    start = time.perf_counter()
    rs = build_root_system("E", 6)
    w1 = (1, 0, 0, 0, 0, 0)
    assert is_minuscule(rs, w1)
    assert hv_dimension(rs, w1) == 17
    assert any(tuple_orbit_dimension(rs, w1, [w1, mu]) == 34 for mu in weyl_orbit(rs, w1))
    char = characters.weight_multiplicities(rs, w1)
    assert irrep_dimension(rs, w1) == 27
    assert len(char.terms) == 27 and set(char.terms.values()) == {1}
    doc = _cli("hv-pair", "E6", "1,0,0,0,0,0")["result"]
    assert (doc["dense_orbit"], doc["orbit_dim"], doc["hv_dim"]) == (True, 34, 17)
    assert time.perf_counter() - start < 30.0


SELF_CONJUGATE = {("A", 1), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


def _expect_minus_id(family, rank):
    if family in "BC":
        return True
    if family == "D":
        return rank % 2 == 0
    return (family, rank) in SELF_CONJUGATE


def test_criterion_09_self_conjugacy():
    start = time.perf_counter()
    for family, rank in TABLE_TYPES:
        assert minus_identity_in_weyl(build_root_system(family, rank)) == _expect_minus_id(family, rank)
    rng = random.Random(7)
    pair_checked = 0
    pool = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4),
            ("D", 5), ("G", 2), ("F", 4), ("E", 6)]
    for _ in range(50):
        family, rank = rng.choice(pool)
        rs = build_root_system(family, rank)
        lam = tuple(rng.randint(0, 2) for _ in range(rank))
        if not any(lam):
            lam = (0,) * (rank - 1) + (1,)
        dual = dual_weight(rs, lam)
        assert invariant_dimension(rs, [lam, dual]) == 1
        if irrep_dimension(rs, lam) ** 2 <= 200_000:
            # independent route: peel the character product
            summands = tensor_decompose(rs, lam, dual).summands
            assert summands.get((0,) * rank) == 1
            pair_checked += 1
        if minus_identity_in_weyl(rs):
            assert dual == lam
    assert pair_checked >= 25
    assert time.perf_counter() - start < 60.0


@pytest.mark.parametrize("family,rank", [("D", 5), ("B", 4)])
def test_pair_count_matches_direct_decomposition(family, rank):
    # the meet-in-the-middle count agrees with a plain iterated decomposition
    rs = build_root_system(family, rank)
    lam = (1,) + (0,) * (rank - 1)
    full = tensor_decompose(rs, lam, lam)
    direct = sum(m * int(w == (0,) * rank) for w, m in full.summands.items())
    assert invariant_dimension(rs, [lam, lam]) == direct == 1
    assert full.dimension == irrep_dimension(rs, lam) ** 2
