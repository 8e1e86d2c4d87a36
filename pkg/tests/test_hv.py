import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylinv.errors import WeylInvError
from weylinv.hv import (
    dense_orbit_witnesses,
    find_dense_orbit_pair,
    hv_dimension,
    is_minuscule,
    tuple_orbit_dimension,
    tuple_stabilizer,
)
from weylinv.rootsystem import build_root_system, weyl_orbit


def fundamental(rank, k):
    return tuple(int(i == k - 1) for i in range(rank))


# dimensions of highest-weight-vector cones from classical geometry
@pytest.mark.parametrize("family,rank,k,expected", [
    *[("A", n, k, k * (n + 1 - k) + 1) for n in (1, 3, 5) for k in range(1, n + 1)],
    ("D", 5, 1, 9), ("D", 6, 1, 11),               # isotropic cone in the vector module
    ("D", 5, 5, 11), ("D", 6, 6, 16),              # spinor varieties: n(n-1)/2 + 1
    ("B", 3, 3, 7), ("B", 4, 4, 11),               # n(n+1)/2 + 1
    ("C", 3, 1, 6),                                # all of K^{2n}
    ("E", 6, 1, 17), ("E", 7, 1, 28),
])
def test_hv_dimension_matches_geometry(family, rank, k, expected):
    rs = build_root_system(family, rank)
    lam = fundamental(rank, k)
    assert is_minuscule(rs, lam)
    assert hv_dimension(rs, lam) == expected


def test_non_minuscule_rejected():
    rs = build_root_system("A", 1)
    assert not is_minuscule(rs, (2,))
    with pytest.raises(WeylInvError):
        hv_dimension(rs, (2,))
    assert not is_minuscule(build_root_system("B", 3), (1, 0, 0))
    assert not is_minuscule(build_root_system("G", 2), (1, 0))


def test_weights_must_lie_in_the_module():
    rs = build_root_system("A", 2)
    with pytest.raises(WeylInvError):
        tuple_stabilizer(rs, (1, 0), [(0, 1)])


def test_pairs_in_type_a():
    # two generic vectors: dense for SL_3, not for SL_2 (the determinant is invariant)
    assert find_dense_orbit_pair(build_root_system("A", 1), (1,)) is None
    a2 = build_root_system("A", 2)
    mu = find_dense_orbit_pair(a2, (1, 0))
    assert tuple_orbit_dimension(a2, (1, 0), [(1, 0), mu]) == 6
    assert find_dense_orbit_pair(build_root_system("C", 2), (1, 0)) is None


def test_e6_witnesses():
    rs = build_root_system("E", 6)
    lam = fundamental(6, 1)
    witnesses = dense_orbit_witnesses(rs, lam)
    assert witnesses
    assert find_dense_orbit_pair(rs, lam) == witnesses[0]
    for mu in witnesses:
        assert tuple_orbit_dimension(rs, lam, [lam, mu]) == 34
    # the highest weight itself only gives the orbit of one vector
    assert tuple_orbit_dimension(rs, lam, [lam]) == 17
    assert tuple_orbit_dimension(rs, lam, [lam, lam]) == 17


MINUSCULE = [("A", 3, 2), ("A", 4, 1), ("D", 4, 1), ("D", 5, 5), ("E", 6, 1), ("B", 3, 3), ("C", 3, 1)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MINUSCULE), st.data())
def test_stabilizer_roots_closed_under_addition(case, data):
    family, rank, k = case
    rs = build_root_system(family, rank)
    lam = fundamental(rank, k)
    orbit = weyl_orbit(rs, lam)
    mus = data.draw(st.lists(st.sampled_from(orbit), min_size=1, max_size=3))
    stab = tuple_stabilizer(rs, lam, mus)
    roots = set(rs.roots)
    s = set(stab.stabilizer_roots)
    for a in s:
        for b in s:
            c = tuple(x + y for x, y in zip(a, b))
            if c in roots:
                assert c in s
    dim = tuple_orbit_dimension(rs, lam, mus)
    assert 0 < dim <= len(mus) * hv_dimension(rs, lam)
    # adding a vector never shrinks the orbit
    assert tuple_orbit_dimension(rs, lam, mus + [lam]) >= dim


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(MINUSCULE), st.data())
def test_tuple_order_is_irrelevant(case, data):
    family, rank, k = case
    rs = build_root_system(family, rank)
    lam = fundamental(rank, k)
    mus = data.draw(st.lists(st.sampled_from(weyl_orbit(rs, lam)), min_size=1, max_size=3))
    perm = data.draw(st.permutations(mus))
    d = tuple_orbit_dimension(rs, lam, mus)
    assert d == tuple_orbit_dimension(rs, lam, list(perm))
    assert d <= rs.dimension


@pytest.mark.parametrize("family,rank,k", MINUSCULE)
def test_cone_fits_in_module(family, rank, k):
    from weylinv.characters import irrep_dimension

    rs = build_root_system(family, rank)
    lam = fundamental(rank, k)
    whole = hv_dimension(rs, lam) == irrep_dimension(rs, lam)
    assert hv_dimension(rs, lam) <= irrep_dimension(rs, lam)
    assert whole == ((family == "A" and k in (1, rank)) or family == "C")
