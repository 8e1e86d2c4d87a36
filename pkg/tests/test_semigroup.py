import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylinv.errors import WeylInvError
from weylinv.semigroup import (
    GroupSpec,
    SemigroupDescriptor,
    center_exponent,
    contains,
    dominant_grid,
    generators,
    intersect,
    m_of_semisimple,
    m_of_simple,
    min_element,
    verify_membership,
)

descriptors = st.one_of(
    st.just(SemigroupDescriptor.empty_set()),
    st.builds(SemigroupDescriptor.at_least, st.integers(1, 12), st.integers(1, 12)),
)


def _members(s, upto=200):
    return {n for n in range(1, upto) if contains(s, n)}


@given(descriptors, descriptors)
def test_intersection_commutes_and_matches_sets(a, b):
    assert intersect(a, b) == intersect(b, a)
    assert _members(intersect(a, b)) == _members(a) & _members(b)


@given(descriptors, descriptors, descriptors)
def test_intersection_associative(a, b, c):
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))


@given(descriptors)
def test_intersection_idempotent(a):
    assert intersect(a, a) == a


@given(descriptors)
def test_closed_under_addition_and_generators(s):
    members = sorted(_members(s, 120))
    for x in members[:10]:
        for y in members[:10]:
            assert contains(s, x + y)
    gens = generators(s)
    sums = {x + y for x in members for y in members}
    assert gens == [n for n in members if n not in sums]


def test_descriptor_strings():
    assert str(SemigroupDescriptor.multiples(3)) == "3N"
    assert str(SemigroupDescriptor.at_least(2)) == "{n>=2}"
    assert str(SemigroupDescriptor.empty_set()) == "{}"
    assert SemigroupDescriptor.at_least(5, 2).threshold == 6
    with pytest.raises(WeylInvError):
        min_element(SemigroupDescriptor.empty_set())


def test_table_values():
    assert str(m_of_simple("E", 6)) == "3N"
    assert str(m_of_simple("E", 8)) == "{n>=2}"
    assert str(m_of_simple("D", 7)) == "4N"
    assert str(m_of_simple("D", 6)) == "2N"
    assert str(m_of_simple("A", 4)) == "5N"
    assert generators(m_of_simple("G", 2)) == [2, 3]


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 5), ("B", 4), ("C", 3), ("D", 4), ("D", 5),
                                         ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])
def test_center_exponent_bounds_table(family, rank):
    z = center_exponent(family, rank)
    s = m_of_simple(family, rank)
    assert s.modulus == z


def test_product_groups():
    assert str(m_of_semisimple(GroupSpec((("A", 1), ("A", 2))))) == "6N"
    assert str(m_of_semisimple(GroupSpec((("G", 2), ("E", 8))))) == "{n>=2}"
    assert str(m_of_semisimple(GroupSpec((("G", 2), ("E", 6))))) == "3N"
    with pytest.raises(WeylInvError):
        GroupSpec(())


def test_dominant_grid_order():
    grid = dominant_grid(2, 2)
    assert grid[0] == (1, 0)
    assert len(grid) == 8
    assert all(any(w) for w in grid)


@pytest.mark.parametrize("family,rank,n", [("A", 1, 2), ("A", 1, 3), ("A", 2, 3), ("A", 2, 4),
                                           ("B", 2, 2), ("B", 2, 3), ("G", 2, 2), ("G", 2, 3),
                                           ("G", 2, 5), ("C", 3, 4), ("D", 3, 2), ("D", 3, 4)])
def test_verify_membership_agrees_with_table(family, rank, n):
    check = verify_membership(family, rank, n, 2)
    assert check.holds == contains(m_of_simple(family, rank), n)
    if not check.holds:
        # the witness is a module whose n-th tensor power really has no invariant
        from weylinv.characters import invariant_dimension
        from weylinv.rootsystem import build_root_system
        assert invariant_dimension(build_root_system(family, rank), [check.witness] * n) == 0


def test_membership_screen_examples():
    check = verify_membership("A", 2, 2, 3)
    assert not check.holds and check.witness == (1, 0)
    assert verify_membership("D", 3, 4, 2).holds
