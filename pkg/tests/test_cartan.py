import random

import pytest
from hypothesis import given, settings, strategies as st

from affine_c.cartan import (
    CartanData, is_multiple_of_K, simple_reflect_coroot, type_c_affine,
    unit_coroot, word_act_coroot,
)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_type_c_matrix_cells(n):
    a = type_c_affine(n).a
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                want = 2
            elif (i, j) == (0, 1):
                want = -1
            elif (i, j) == (1, 0):
                want = -2
            elif (i, j) == (n - 1, n):
                want = -2
            elif (i, j) == (n, n - 1):
                want = -1
            elif abs(i - j) == 1:
                want = -1
            else:
                want = 0
            assert a[i][j] == want, (i, j)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_derived_constants(n):
    data = type_c_affine(n)
    assert data.central_element == (1,) * (n + 1)
    assert data.theta_coroot == (0,) + (1,) * n
    assert data.null_root == (1,) + (2,) * (n - 1) + (1,)
    for i in data.labels:
        assert simple_reflect_coroot(data, i, data.central_element) == data.central_element


def test_invalid_matrices_rejected():
    with pytest.raises(ValueError):
        CartanData(1, ((2, 1), (-2, 2)))
    with pytest.raises(ValueError):
        CartanData(1, ((2, -1), (0, 2)))
    with pytest.raises(ValueError):
        type_c_affine(1)


def test_reflection_examples():
    d2, d3 = type_c_affine(2), type_c_affine(3)
    assert simple_reflect_coroot(d2, 1, (1, 0, 0)) == (1, 1, 0)
    for i in d3.labels:
        e = unit_coroot(d3, i)
        assert simple_reflect_coroot(d3, i, e) == tuple(-x for x in e)
    assert word_act_coroot(d3, [0, 1, 2, 3], unit_coroot(d3, 2)) == (2, 1, 1, 2)
    assert word_act_coroot(d3, [], (4, 5, 6, 7)) == (4, 5, 6, 7)
    with pytest.raises(IndexError):
        simple_reflect_coroot(d2, 3, (0, 0, 0))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reflections_are_involutions_on_random_vectors(n):
    data = type_c_affine(n)
    rng = random.Random(n)
    for _ in range(10_000):
        mu = tuple(rng.randint(-50, 50) for _ in data.labels)
        i = rng.randrange(n + 1)
        assert simple_reflect_coroot(data, i, simple_reflect_coroot(data, i, mu)) == mu


def _braid_order(a, i, j):
    return {0: 2, 1: 3, 2: 4, 3: 6}[a[i][j] * a[j][i]]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braid_relations_on_basis(n):
    data = type_c_affine(n)
    for i in data.labels:
        for j in data.labels:
            if i < j:
                m = _braid_order(data.a, i, j)
                w1 = [i, j] * (m // 2) + [i] * (m % 2)
                w2 = [j, i] * (m // 2) + [j] * (m % 2)
                for k in data.labels:
                    e = unit_coroot(data, k)
                    assert word_act_coroot(data, w1, e) == word_act_coroot(data, w2, e)


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
       st.lists(st.integers(0, 3), max_size=8), st.integers(-5, 5))
@settings(max_examples=200, deadline=None)
def test_word_action_linear(mu, word, c):
    data = type_c_affine(3)
    k = data.central_element
    lhs = word_act_coroot(data, word, [x + c * y for x, y in zip(mu, k)])
    rhs = [x + c * y for x, y in zip(word_act_coroot(data, word, mu), k)]
    assert list(lhs) == rhs


def test_multiple_of_K():
    data = type_c_affine(3)
    assert is_multiple_of_K(data, (1, 1, 1, 1)) == (True, 1)
    assert is_multiple_of_K(data, (0, 0, 0, 0)) == (True, 0)
    assert is_multiple_of_K(data, (-3, -3, -3, -3)) == (True, -3)
    assert is_multiple_of_K(data, (1, 0, 0, 0)) == (False, None)
