import pytest
from hypothesis import given
from hypothesis import strategies as st

from angulata import SkewMatrix, ValidationError, YSeed, mutate_matrix, mutate_y_tropical, trop_add, trop_mul
from angulata.tropical import neg_part, pos_part


def test_semifield_operations():
    assert trop_add((1, -2, 3), (0, 5, 3)) == (0, -2, 3)
    assert trop_mul((1, -2, 3), (0, 5, 3)) == (1, 3, 6)
    assert pos_part(-3) == 0 and neg_part(-3) == 3 and pos_part((2, -1)) == (2, 0) and neg_part((2, -1)) == (0, 1)
    with pytest.raises(ValidationError):
        trop_add((1,), (1, 2))


def test_skew_matrix_validation():
    with pytest.raises(ValidationError):
        SkewMatrix(((0, 1), (1, 0)))
    with pytest.raises(ValidationError):
        SkewMatrix(((0, 1),))
    assert SkewMatrix.zeros(3).tolist() == [[0] * 3] * 3


def test_mutate_matrix_examples():
    b = SkewMatrix(((0, 1), (-1, 0)))
    assert mutate_matrix(b, 0).tolist() == [[0, -1], [1, 0]]
    path = SkewMatrix(((0, 1, 0), (-1, 0, 1), (0, -1, 0)))
    assert mutate_matrix(path, 1).tolist() == [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]
    with pytest.raises(ValidationError):
        mutate_matrix(b, 2)


def test_mutate_y_examples():
    assert mutate_y_tropical(SkewMatrix(((0, 2), (-2, 0))), [(-1,), (3,)], 0) == ((1,), (3,))
    assert mutate_y_tropical(SkewMatrix(((0, 1), (-1, 0))), [(2,), (0,)], 0) == ((-2,), (2,))
    assert mutate_y_tropical(SkewMatrix(((0, 1), (-1, 0))), [(0,), (4,)], 0) == ((0,), (4,))
    with pytest.raises(ValidationError):
        mutate_y_tropical(SkewMatrix.zeros(2), [(1,)], 0)
    with pytest.raises(ValidationError):
        mutate_y_tropical(SkewMatrix.zeros(2), [(1,), (1, 2)], 0)


@st.composite
def skew_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(st.integers(-3, 3))
            rows[i][j], rows[j][i] = x, -x
    return SkewMatrix(tuple(map(tuple, rows)))


@given(skew_matrices(), st.data())
def test_matrix_mutation_is_involution(b, data):
    k = data.draw(st.integers(0, b.n - 1))
    once = mutate_matrix(b, k)
    assert mutate_matrix(once, k) == b


@given(skew_matrices(), st.data())
def test_y_seed_mutation_is_involution(b, data):
    r = data.draw(st.integers(1, 3))
    coeffs = tuple(tuple(data.draw(st.lists(st.integers(-5, 5), min_size=r, max_size=r))) for _ in range(b.n))
    k = data.draw(st.integers(0, b.n - 1))
    seed = YSeed(b, coeffs)
    assert seed.mutate(k).mutate(k) == seed


@given(skew_matrices(), st.data())
def test_y_mutation_is_entrywise(b, data):
    # each coordinate of Z^r evolves independently
    r = 3
    coeffs = [tuple(data.draw(st.lists(st.integers(-5, 5), min_size=r, max_size=r))) for _ in range(b.n)]
    k = data.draw(st.integers(0, b.n - 1))
    full = mutate_y_tropical(b, coeffs, k)
    for t in range(r):
        single = mutate_y_tropical(b, [(c[t],) for c in coeffs], k)
        assert [s[0] for s in single] == [f[t] for f in full]
