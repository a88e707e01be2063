import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_carray, random_h_array, random_qarray
from oracles import complex_periodic_autocorr, oracle_left, oracle_right, oracle_star
from quatpcp.qarray import (
    CArray,
    QArray,
    ShapeError,
    first_offpeak_nonzero,
    flip,
    is_pcp,
    is_pqa,
    left_autocorr,
    merge,
    right_autocorr,
    scale,
    shift,
    split,
    star_correlate,
    transform,
)
from quatpcp.quaternion import H_UNITS, ONE, ZERO, I, J, K, Quaternion
from quatpcp.worked_example import D, D_H, D_V, PERFECT_BINARY_4

SHAPES = [(1,), (3,), (5,), (2, 2), (2, 3), (3, 2), (2, 2, 2), (2, 1, 3)]


def q(*c):
    return Quaternion(*c)


def test_star_correlate_examples():
    ones = QArray((2,), [ONE, ONE])
    assert star_correlate(ones, ones) == QArray.filled((2,), q(2))
    x, y = QArray((1,), [I]), QArray((1,), [J])
    assert star_correlate(x, y) == QArray((1,), [K])
    assert star_correlate(y, x) == QArray((1,), [-K])


@pytest.mark.parametrize("shape", SHAPES)
def test_delta_sifts(rng, shape):
    y = random_qarray(rng, shape)
    assert star_correlate(QArray.delta(shape), y) == y


@pytest.mark.parametrize("shape", SHAPES)
def test_correlations_match_oracles(rng, shape):
    for _ in range(5):
        x, y = random_qarray(rng, shape), random_qarray(rng, shape)
        assert [tuple(v) for v in star_correlate(x, y).data] == oracle_star(x.data, y.data, shape)
        assert [tuple(v) for v in right_autocorr(x).data] == oracle_right(x.data, shape)
        assert [tuple(v) for v in left_autocorr(x).data] == oracle_left(x.data, shape)


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        star_correlate(QArray.ones((2,)), QArray.ones((3,)))
    with pytest.raises(ShapeError):
        is_pcp(CArray.ones((2,)), CArray.ones((2, 1)))
    with pytest.raises(ShapeError):
        QArray((2, 2), [ONE] * 3)
    with pytest.raises(ShapeError):
        QArray((0,), [])


def test_right_autocorr_examples():
    assert right_autocorr(D) == QArray.delta((2, 2), 4)
    assert right_autocorr(QArray.ones((2, 3))) == QArray.filled((2, 3), q(6))
    assert right_autocorr(PERFECT_BINARY_4) == QArray.delta((4,), 4)


def test_left_autocorr_examples(rng):
    assert left_autocorr(D) == QArray.delta((2, 2), 4)
    assert left_autocorr(QArray.ones((3, 2))) == QArray.filled((3, 2), q(6))
    a = random_qarray(rng, (3,))
    r = right_autocorr(a.conj())
    assert left_autocorr(a).data == tuple(r.data[(-m) % 3] for m in range(3))


@pytest.mark.parametrize("shape", SHAPES)
def test_left_right_duality(rng, shape):
    a = random_qarray(rng, shape)
    assert left_autocorr(a) == flip(right_autocorr(a.conj()))


@pytest.mark.parametrize("shape", SHAPES)
def test_peak_is_frobenius_norm(rng, shape):
    a = random_qarray(rng, shape)
    assert right_autocorr(a).data[0] == q(a.frobenius2())


@pytest.mark.parametrize("shape", [(4,), (2, 3), (3, 3)])
def test_complex_reduction(rng, shape):
    x = random_carray(rng, shape, alphabet=[q(a, b) for a in (-2, 0, 1) for b in (-1, 0, 3)])
    ours = np.array([complex(v[0], v[1]) for v in right_autocorr(x).data]).reshape(shape)
    assert np.array_equal(ours, complex_periodic_autocorr([complex(v[0], v[1]) for v in x.data], shape))
    assert all(v.is_complex() for v in right_autocorr(x).data)


def test_transform_examples():
    a, b, c = q(1), q(0, 2), q(0, 0, 3)
    assert flip(QArray((3,), [a, b, c])) == QArray((3,), [a, c, b])
    m = QArray((2, 2), [ONE, I, J, K])
    assert shift(m, (1, 0)) == QArray((2, 2), [J, K, ONE, I])
    assert shift(m, (0, 1)) == QArray((2, 2), [I, ONE, K, J])
    assert transform(m, "conj") == QArray((2, 2), [ONE, -I, -J, -K])
    assert transform(m, "scale", J) == QArray((2, 2), [J, -K, -ONE, I])


def test_shift_direction_moves_content_down():
    col = QArray((3, 1), [ONE, ZERO, ZERO])
    assert shift(col, (1, 0)) == QArray((3, 1), [ZERO, ONE, ZERO])
    assert shift(col, (-1, 0)) == QArray((3, 1), [ZERO, ZERO, ONE])


def test_flip_2x2_is_identity(rng):
    for _ in range(10):
        a = random_qarray(rng, (2, 2))
        assert flip(a) == a


def test_transform_errors():
    with pytest.raises(ShapeError):
        shift(D, (1,))
    with pytest.raises(ValueError):
        scale(D, q(1, 1))
    with pytest.raises(ValueError):
        transform(D, "rotate")


def test_split_examples(rng):
    assert split(D) == (D_H, D_V)
    x = random_carray(rng, (2, 3))
    h, v = split(x)
    assert h == x and v == CArray.zeros((2, 3))


def test_split_merge_round_trip(rng):
    for shape in SHAPES:
        a = random_qarray(rng, shape)
        assert merge(*split(a)) == a
        h, v = random_carray(rng, shape), random_carray(rng, shape)
        assert split(merge(h, v)) == (h, v)


def test_is_pqa_examples():
    assert is_pqa(D)
    assert not is_pqa(QArray.ones((2, 2)))
    assert is_pqa(PERFECT_BINARY_4)
    assert first_offpeak_nonzero(right_autocorr(QArray.ones((2, 2)))) == (0, 1)


def test_is_pcp_examples():
    for n in (1, 2, 3):
        shape = (n, n)
        peak = CArray.delta(shape, n)  # sqrt(n*n) * delta
        assert is_pcp(peak, peak)
        assert right_autocorr(peak) + right_autocorr(peak) == QArray.delta(shape, 2 * n * n)
    two = CArray.delta((2, 2), 2)
    assert is_pcp(two, two)
    assert is_pcp(D_H, D_V)
    assert not is_pcp(CArray.ones((2, 2)), CArray.ones((2, 2)))


def test_conjugate_pqa_closure(searched_pqas):
    for arrays in searched_pqas.values():
        for a in arrays:
            assert is_pqa(a.conj())


def test_left_unit_scaling_closure(searched_pqas, rng):
    for a in searched_pqas[(2, 2)] + searched_pqas[(6,)][:20]:
        for u in H_UNITS:
            assert is_pqa(scale(a, u))
            assert right_autocorr(scale(a, u)) == QArray(
                a.shape, [u * r * u.conj() for r in right_autocorr(a).data])
    for _ in range(20):
        a = random_h_array(rng, (2, 2))
        assert all(is_pqa(scale(a, u)) == is_pqa(a) for u in H_UNITS)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sampled_from(H_UNITS), min_size=6, max_size=6),
       st.sampled_from([(6,), (2, 3), (3, 2)]))
def test_right_autocorr_oracle_hypothesis(units, shape):
    a = QArray(shape, units)
    assert [tuple(v) for v in right_autocorr(a).data] == oracle_right(a.data, shape)


def test_immutability():
    with pytest.raises(AttributeError):
        D.shape = (4,)
    assert D[(3, 5)] == D[(1, 1)]
    assert QArray.from_nested([[ONE, I], [J, K]]) == D
    assert D.to_nested() == [[ONE, I], [J, K]]
