"""Floating-point spectra of complex arrays: DFT, power spectra, flatness.

Exact verdicts live in :mod:`quatpcp.qarray`; everything here is a numerical
cross-check or human-readable output.
"""

from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass

import numpy as np

from .qarray import QArray, ShapeError, right_autocorr


def to_numpy(x: QArray) -> np.ndarray:
    """Complex numpy view of a complex array (j and k parts must be zero)."""
    if not x.is_complex():
        raise ValueError("spectral routines need a complex array")
    vals = np.array([complex(float(q[0]), float(q[1])) for q in x.data], dtype=np.complex128)
    return vals.reshape(x.shape)


def _as_complex(x) -> np.ndarray:
    if isinstance(x, QArray):
        return to_numpy(x)
    return np.asarray(x, dtype=np.complex128)


def dft_nd(x) -> np.ndarray:
    """Unnormalized forward DFT along every axis."""
    arr = _as_complex(x)
    return np.fft.fftn(arr, axes=tuple(range(arr.ndim)))


@dataclass(frozen=True)
class Spectrum:
    """Squared DFT magnitudes of an array, ``|F(X)|^2``."""

    shape: tuple[int, ...]
    values: np.ndarray

    @classmethod
    def of(cls, x) -> "Spectrum":
        f = dft_nd(x)
        return cls(tuple(f.shape), np.abs(f) ** 2)

    def __add__(self, other: "Spectrum") -> "Spectrum":
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Spectrum(self.shape, self.values + other.values)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    def total(self) -> float:
        return float(self.values.sum())

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([f"k{a}" for a in range(len(self.shape))] + ["value"])
            for idx in itertools.product(*(range(d) for d in self.shape)):
                writer.writerow(list(idx) + [repr(float(self.values[idx]))])

    def write_pgm(self, path, top: float | None = None) -> None:
        """8-bit binary PGM; values map linearly from [0, top] to 0..255.

        ``top`` defaults to ``2 * size``, the flat level of a complementary pair.
        Arrays with more than two axes are tiled row-major into 2D.
        """
        top = 2.0 * self.size if top is None else float(top)
        img = self.values.reshape(self.shape[0], -1) if len(self.shape) > 1 else self.values[None, :]
        pix = np.clip(np.rint(img / top * 255.0), 0, 255).astype(np.uint8)
        rows, cols = pix.shape
        with open(path, "wb") as fh:
            fh.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
            fh.write(pix.tobytes())


def flatness_deviation(x, y) -> float:
    """Largest ``| |F(X)|^2 + |F(Y)|^2 - 2 * size |`` over all frequencies."""
    fx, fy = dft_nd(x), dft_nd(y)
    if fx.shape != fy.shape:
        raise ShapeError(f"shape mismatch: {fx.shape} vs {fy.shape}")
    total = np.abs(fx) ** 2 + np.abs(fy) ** 2
    return float(np.max(np.abs(total - 2.0 * fx.size)))


def default_tolerance(size: int) -> float:
    return 1e-9 * 2 * size


def flatness_check(x, y, tol: float | None = None) -> bool:
    """Whether the summed power spectra equal ``2 * size`` everywhere within ``tol``."""
    size = int(np.prod(_as_complex(x).shape))
    tol = default_tolerance(size) if tol is None else tol
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return flatness_deviation(x, y) <= tol


def is_perfect_complex(x: QArray) -> bool:
    """Exact test that ``R_X = ||X||_F^2 delta``."""
    if not x.is_complex():
        raise ValueError("expected a complex array")
    return right_autocorr(x).is_delta()


def spectrum_is_flat(x: QArray, tol: float = 1e-9) -> bool:
    """Floating counterpart of :func:`is_perfect_complex`: ``|F(X)|^2`` is constant."""
    p = Spectrum.of(x).values
    return float(np.ptp(p)) <= tol * max(1.0, float(p.max()))


def negate_frequencies(values: np.ndarray) -> np.ndarray:
    """``out[f] = values[<-f>]`` on every axis."""
    out = values
    for axis in range(values.ndim):
        out = np.roll(np.flip(out, axis=axis), 1, axis=axis)
    return out


def wiener_khinchin_residual(x: QArray) -> float:
    """Max entrywise gap between ``F(R_X)`` and ``|F(X)|^2``.

    With ``R_X(m) = sum_k X(k) X*(<k+m>)`` the transform lands on the negated
    frequency, ``F(R_X)(f) = |F(X)(-f)|^2``, so the power spectrum is
    index-negated before comparing.
    """
    lhs = dft_nd(right_autocorr(x).as_carray())
    rhs = negate_frequencies(np.abs(dft_nd(x)) ** 2)
    return float(np.max(np.abs(lhs - rhs)))
