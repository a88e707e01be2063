import numpy as np
import pytest

from conftest import random_carray
from oracles import naive_dft
from quatpcp.constructions import quaternary_pair_right
from quatpcp.qarray import CArray, ShapeError, flip, is_pcp, shift
from quatpcp.quaternion import Quaternion
from quatpcp.spectral import (
    Spectrum,
    default_tolerance,
    dft_nd,
    flatness_check,
    flatness_deviation,
    is_perfect_complex,
    negate_frequencies,
    spectrum_is_flat,
    to_numpy,
    wiener_khinchin_residual,
)
from quatpcp.worked_example import D, D_TILDE_FIRST, D_TILDE_SECOND, PERFECT_BINARY_4


def test_dft_of_delta_is_ones():
    for shape in [(4,), (2, 3), (2, 2, 2)]:
        assert np.allclose(dft_nd(CArray.delta(shape)), np.ones(shape), atol=0)


def test_dft_of_ones():
    out = dft_nd(CArray.ones((5,)))
    assert out[0] == 5
    assert np.max(np.abs(out[1:])) < 1e-12


def test_dft_matches_naive(rng):
    for _ in range(5):
        x = random_carray(rng, (4, 4))
        assert np.max(np.abs(dft_nd(x) - naive_dft(to_numpy(x)))) < 1e-12
    y = random_carray(rng, (3, 2, 2))
    assert np.max(np.abs(dft_nd(y) - naive_dft(to_numpy(y)))) < 1e-12


def test_flatness_worked_pair():
    assert flatness_check(D_TILDE_FIRST, D_TILDE_SECOND)
    total = Spectrum.of(D_TILDE_FIRST) + Spectrum.of(D_TILDE_SECOND)
    assert np.allclose(total.values, 8.0, rtol=0, atol=1e-12)


def test_flatness_delta_pairs():
    d = CArray.delta((2, 2))
    assert not flatness_check(d, d)
    scaled = to_numpy(d) * np.sqrt(4)
    assert flatness_check(scaled, scaled)
    ones = CArray.ones((2, 2))
    assert not flatness_check(ones, ones)
    with pytest.raises(ShapeError):
        flatness_check(d, CArray.delta((4,)))


def test_is_perfect_complex():
    assert is_perfect_complex(PERFECT_BINARY_4.as_carray())
    assert not is_perfect_complex(D_TILDE_FIRST)
    assert not is_perfect_complex(D_TILDE_SECOND)
    assert is_perfect_complex(CArray.delta((3,), 3))
    assert not spectrum_is_flat(D_TILDE_FIRST)
    assert spectrum_is_flat(PERFECT_BINARY_4.as_carray())
    with pytest.raises(ValueError):
        is_perfect_complex(D)


def test_wiener_khinchin(rng):
    assert wiener_khinchin_residual(CArray.delta((3, 3))) == 0
    for x in (D_TILDE_FIRST, D_TILDE_SECOND):
        assert wiener_khinchin_residual(x) <= 1e-9 * x.size
    for _ in range(10):
        x = random_carray(rng, (8, 8))
        assert wiener_khinchin_residual(x) <= 1e-9 * x.size


def test_flatness_agrees_with_is_pcp(searched_pqas, rng):
    for a in searched_pqas[(2, 2)][:10]:
        x, y = quaternary_pair_right(a).members()
        assert flatness_check(x, y) == is_pcp(x, y) == True  # noqa: E712
    for _ in range(20):
        x, y = random_carray(rng, (2, 3)), random_carray(rng, (2, 3))
        assert flatness_check(x, y) == is_pcp(x, y)


def test_shift_preserves_magnitude_and_flip_negates(rng):
    x = random_carray(rng, (4, 3))
    mag = np.abs(dft_nd(x))
    assert np.max(np.abs(np.abs(dft_nd(shift(x, (1, 2)))) - mag)) < 1e-12
    p = Spectrum.of(x).values
    assert np.max(np.abs(Spectrum.of(flip(x)).values - negate_frequencies(p))) < 1e-12


def test_parseval(rng):
    for shape in [(8,), (3, 5), (2, 2, 3)]:
        x = random_carray(rng, shape, alphabet=[Quaternion(a, b) for a in (-2, 1) for b in (0, 3)])
        sp = Spectrum.of(x)
        expect = x.size * float(x.frobenius2())
        assert abs(sp.total() - expect) <= 1e-9 * expect
        assert (sp.values >= 0).all()


def test_negate_frequencies():
    v = np.arange(6).reshape(2, 3)
    assert negate_frequencies(v).tolist() == [[0, 2, 1], [3, 5, 4]]


def test_exports(tmp_path):
    sp = Spectrum.of(D_TILDE_FIRST)
    sp.write_csv(tmp_path / "s.csv")
    lines = (tmp_path / "s.csv").read_text().splitlines()
    assert lines[0] == "k0,k1,value" and len(lines) == 5
    sp.write_pgm(tmp_path / "s.pgm")
    raw = (tmp_path / "s.pgm").read_bytes()
    assert raw.startswith(b"P5\n2 2\n255\n")
    pix = list(raw[len(b"P5\n2 2\n255\n"):])
    expected = np.clip(np.rint(sp.values.reshape(2, 2) / 8.0 * 255), 0, 255).astype(int).ravel()
    assert pix == expected.tolist()


def test_default_tolerance():
    assert default_tolerance(16) == pytest.approx(3.2e-8)
    with pytest.raises(ValueError):
        flatness_check(D_TILDE_FIRST, D_TILDE_SECOND, tol=0)
    assert flatness_deviation(D_TILDE_FIRST, D_TILDE_SECOND) < 1e-12
