from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from weylinv import linalg

square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_inverse_and_determinant(a):
    det = linalg.determinant(a)
    if det:
        inv = linalg.inverse(a)
        prod = [[sum(Fraction(a[i][k]) * inv[k][j] for k in range(len(a))) for j in range(len(a))]
                for i in range(len(a))]
        assert prod == [list(r) for r in linalg.identity(len(a))]
    assert (det != 0) == (linalg.rank(a) == len(a))


@given(square)
def test_charpoly_constant_term_and_trace(a):
    p = linalg.charpoly(a)  # coefficients from degree 0 upward
    n = len(a)
    assert p[n] == 1
    assert p[n - 1] == -sum(a[i][i] for i in range(n))
    assert p[0] == (-1) ** n * linalg.determinant(a)


def test_cyclotomic_polynomials():
    assert linalg.cyclotomic(1) == [-1, 1]
    assert linalg.cyclotomic(6) == [1, -1, 1]
    assert linalg.cyclotomic(12) == [1, 0, -1, 0, 1]
    x12 = [-1] + [0] * 11 + [1]
    for d in linalg.divisors(12):
        x12, rem = linalg.polydivmod(x12, linalg.cyclotomic(d))
        assert not any(rem)
    assert x12 == [1]
