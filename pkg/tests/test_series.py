from hypothesis import given
from hypothesis import strategies as st

from dicksonlab import CoeffSeq, make_field

F7 = make_field(7)

coeffs = st.lists(st.integers(0, 6), min_size=1, max_size=12)


@given(coeffs, coeffs)
def test_mul_commutes(a, b):
    A, B = CoeffSeq.from_ints(F7, a), CoeffSeq.from_ints(F7, b)
    assert (A * B).truncate(30) == (B * A).truncate(30)


@given(coeffs, st.integers(1, 25))
def test_inverse_when_unit(a, n):
    a = [1 + a[0] % 6] + a[1:]
    A = CoeffSeq.from_ints(F7, a)
    inv = A.inverse(n)
    prod = (A * inv).truncate(n)
    assert list(prod.values) == [1] + [0] * (n - 1)


def test_geometric_series():
    one_minus_t = CoeffSeq.from_ints(F7, [1, -1])
    assert set(one_minus_t.inverse(15).values) == {1}


def test_coeff_out_of_range_is_zero():
    A = CoeffSeq.from_ints(F7, [3, 4])
    assert A.coeff(9) == 0 and A.degree() == 1
