"""N-dimensional quaternion arrays with cyclic indexing and periodic correlations.

Storage is row-major and every index is taken modulo the shape, so a 1D
sequence, an M x N matrix and an M x N x S x T tensor all go through the same
code path.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .quaternion import (
    ONE,
    ZERO,
    Quaternion,
    Scalar,
    format_quaternion,
    qconj,
    qmul,
    scalar,
)


class ShapeError(ValueError):
    pass


def _check_shape(shape) -> tuple[int, ...]:
    shape = tuple(int(d) for d in shape)
    if not shape or any(d < 1 for d in shape):
        raise ShapeError(f"invalid shape {shape!r}; need at least one axis, all lengths >= 1")
    return shape


class QArray:
    """Immutable array of quaternions with an explicit shape.

    Entries are addressed by index tuples; every component is reduced modulo
    the corresponding axis length.
    """

    __slots__ = ("shape", "data")

    def __init__(self, shape: Sequence[int], data: Iterable[Quaternion]):
        shape = _check_shape(shape)
        data = tuple(data)
        if len(data) != prod(shape):
            raise ShapeError(f"shape {shape} needs {prod(shape)} entries, got {len(data)}")
        for q in data:
            if not isinstance(q, Quaternion):
                raise TypeError(f"entries must be Quaternion, got {type(q).__name__}")
        self._validate(data)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "data", data)

    def _validate(self, data):
        pass

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # --- construction helpers -------------------------------------------
    @classmethod
    def from_nested(cls, nested) -> "QArray":
        """Build from nested lists of quaternions (the nesting depth gives the shape)."""
        shape = []
        level = nested
        while isinstance(level, (list, tuple)) and not isinstance(level, Quaternion):
            shape.append(len(level))
            level = level[0]
        flat = list(_flatten(nested, len(shape)))
        return cls(shape, flat)

    @classmethod
    def filled(cls, shape: Sequence[int], value: Quaternion) -> "QArray":
        shape = _check_shape(shape)
        return cls(shape, [value] * prod(shape))

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> "QArray":
        return cls.filled(shape, ZERO)

    @classmethod
    def ones(cls, shape: Sequence[int]) -> "QArray":
        return cls.filled(shape, ONE)

    @classmethod
    def delta(cls, shape: Sequence[int], peak=1) -> "QArray":
        """``peak`` at the all-zero index, zero elsewhere."""
        shape = _check_shape(shape)
        data = [ZERO] * prod(shape)
        data[0] = Quaternion(scalar(peak), 0, 0, 0)
        return cls(shape, data)

    # --- access -----------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.data)

    @property
    def ndim(self) -> int:
        return len(self.shape)

    def flat_index(self, index: Sequence[int]) -> int:
        if len(index) != len(self.shape):
            raise ShapeError(f"index {tuple(index)} has wrong arity for shape {self.shape}")
        flat = 0
        for i, d in zip(index, self.shape):
            flat = flat * d + (i % d)
        return flat

    def unravel(self, flat: int) -> tuple[int, ...]:
        return unravel(flat, self.shape)

    def __getitem__(self, index) -> Quaternion:
        if isinstance(index, int):
            index = (index,)
        return self.data[self.flat_index(index)]

    def indices(self):
        return itertools.product(*(range(d) for d in self.shape))

    def to_nested(self):
        return _nest(list(self.data), self.shape)

    def __eq__(self, other):
        if not isinstance(other, QArray):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, self.data))

    def __repr__(self):
        body = ", ".join(format_quaternion(q) for q in self.data)
        return f"{type(self).__name__}(shape={self.shape}, [{body}])"

    # --- entrywise arithmetic --------------------------------------------
    def _binary(self, other, op):
        _same_shape(self, other)
        return QArray(self.shape, [op(a, b) for a, b in zip(self.data, other.data)])

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return QArray(self.shape, [-a for a in self.data])

    def right_mul(self, q: Quaternion) -> "QArray":
        """Every entry multiplied on the right by ``q``."""
        return QArray(self.shape, [qmul(a, q) for a in self.data])

    def left_mul(self, q: Quaternion) -> "QArray":
        """Every entry multiplied on the left by ``q``."""
        return QArray(self.shape, [qmul(q, a) for a in self.data])

    def conj(self) -> "QArray":
        return type(self)(self.shape, [qconj(a) for a in self.data])

    def frobenius2(self) -> Scalar:
        return sum(q.norm2() for q in self.data)

    def is_complex(self) -> bool:
        return all(q.is_complex() for q in self.data)

    def as_carray(self) -> "CArray":
        return CArray(self.shape, self.data)

    def as_qarray(self) -> "QArray":
        return QArray(self.shape, self.data)

    def is_delta(self) -> bool:
        return all(q.is_zero() for q in self.data[1:])


class CArray(QArray):
    """Array of complex numbers, stored as quaternions with zero j and k parts."""

    __slots__ = ()

    def _validate(self, data):
        for q in data:
            if q[2] != 0 or q[3] != 0:
                raise ValueError(f"CArray entry {format_quaternion(q)} is not complex")

    def _binary(self, other, op):
        out = super()._binary(other, op)
        return out.as_carray() if isinstance(other, CArray) else out

    def __neg__(self):
        return CArray(self.shape, [-a for a in self.data])

    def scaled(self, c: Quaternion) -> "CArray":
        return CArray(self.shape, [qmul(c, a) for a in self.data])


def unravel(flat: int, shape: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(shape):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


def _flatten(nested, depth):
    if depth == 0:
        yield nested
        return
    for item in nested:
        yield from _flatten(item, depth - 1)


def _nest(flat, shape):
    if len(shape) == 1:
        return flat
    step = prod(shape[1:])
    return [_nest(flat[n * step:(n + 1) * step], shape[1:]) for n in range(shape[0])]


def _same_shape(x: QArray, y: QArray):
    if x.shape != y.shape:
        raise ShapeError(f"shape mismatch: {x.shape} vs {y.shape}")


@lru_cache(maxsize=64)
def shift_table(shape: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """``table[m][k]`` is the flat index of ``<k + m>`` (per-axis modulo)."""
    coords = list(itertools.product(*(range(d) for d in shape)))
    strides = [prod(shape[a + 1:]) for a in range(len(shape))]

    def flat(c):
        return sum(((ci % d) * s) for ci, d, s in zip(c, shape, strides))

    return tuple(
        tuple(flat([k + m for k, m in zip(kc, mc)]) for kc in coords)
        for mc in coords
    )


@lru_cache(maxsize=64)
def negation_table(shape: tuple[int, ...]) -> tuple[int, ...]:
    """``table[m]`` is the flat index of ``<-m>``."""
    return tuple(shift_table(shape)[m].index(0) for m in range(prod(shape)))


def _correlate(xs, ys, table, shifted_left):
    """Sum over k of x[k] * y[<k+m>] (or y[<k+m>] * x[k]) for every shift m."""
    out = []
    pairs = list(enumerate(xs))
    for row in table:
        s1 = s2 = s3 = s4 = 0
        for k, p in pairs:
            q = ys[row[k]]
            if shifted_left:
                p, q = q, p
            p1, p2, p3, p4 = p
            q1, q2, q3, q4 = q
            s1 += p1 * q1 - p2 * q2 - p3 * q3 - p4 * q4
            s2 += q1 * p2 + p1 * q2 - q3 * p4 + p3 * q4
            s3 += q1 * p3 + p1 * q3 + q2 * p4 - p2 * q4
            s4 += q1 * p4 + p1 * q4 - q2 * p3 + p2 * q3
        out.append(Quaternion(s1, s2, s3, s4))
    return out


def star_correlate(x: QArray, y: QArray) -> QArray:
    """Conjugate-free periodic cross correlation ``O(m) = sum_k X(k) Y(<k+m>)``."""
    _same_shape(x, y)
    return QArray(x.shape, _correlate(x.data, y.data, shift_table(x.shape), False))


def right_autocorr(a: QArray) -> QArray:
    """``R_A(m) = sum_k A(k) A*(<k+m>)``, i.e. ``A star conj(A)``."""
    return star_correlate(a, a.conj())


def left_autocorr(a: QArray) -> QArray:
    """``L_A(m) = sum_k A*(<k+m>) A(k)``; the conjugated shifted entry sits on the left."""
    ac = a.conj()
    return QArray(a.shape, _correlate(a.data, ac.data, shift_table(a.shape), True))


def first_offpeak_nonzero(corr: QArray) -> tuple[int, ...] | None:
    """Index of the first nonzero entry away from the origin, or None for a delta."""
    for n, q in enumerate(corr.data):
        if n and not q.is_zero():
            return corr.unravel(n)
    return None


def is_pqa(a: QArray) -> bool:
    """True iff the right periodic autocorrelation vanishes at every nonzero shift."""
    return right_autocorr(a).is_delta()


def is_pcp(x: QArray, y: QArray) -> bool:
    """True iff ``R_X(m) + R_Y(m) = 0`` for every nonzero shift ``m``.

    Entries need not have unit modulus; only the off-peak cancellation is tested.
    """
    return pcp_offender(x, y) is None


def pcp_offender(x: QArray, y: QArray) -> tuple[int, ...] | None:
    _same_shape(x, y)
    return first_offpeak_nonzero(right_autocorr(x) + right_autocorr(y))


# --- transforms -------------------------------------------------------------

def conjugate(a: QArray) -> QArray:
    return a.conj()


def flip(a: QArray) -> QArray:
    """``out(m) = a(<-m>)`` on every axis."""
    neg = negation_table(a.shape)
    return type(a)(a.shape, [a.data[neg[m]] for m in range(a.size)])


def shift(a: QArray, offsets: Sequence[int]) -> QArray:
    """Circulant shift moving content forward: ``out(m) = a(<m - r>)``."""
    offsets = tuple(int(r) for r in offsets)
    if len(offsets) != a.ndim:
        raise ShapeError(f"shift {offsets} has wrong arity for shape {a.shape}")
    back = tuple(-r for r in offsets)
    src = shift_table(a.shape)[a.flat_index(back)]
    return type(a)(a.shape, [a.data[src[m]] for m in range(a.size)])


def scale(a: QArray, u: Quaternion) -> QArray:
    """Left-multiply every entry by the unit-modulus value ``u``."""
    if u.norm2() != 1:
        raise ValueError(f"scale factor {format_quaternion(u)} does not have unit modulus")
    out = a.left_mul(u)
    if isinstance(a, CArray) and u.is_complex():
        return out.as_carray()
    return out


def transform(a: QArray, op: str, arg=None) -> QArray:
    """Dispatch one of ``conjugate``, ``flip``, ``shift`` (offsets) or ``scale`` (unit)."""
    if op in ("conj", "conjugate"):
        return conjugate(a)
    if op == "flip":
        return flip(a)
    if op == "shift":
        return shift(a, arg)
    if op == "scale":
        return scale(a, arg)
    raise ValueError(f"unknown transform {op!r}")


# --- complex components -----------------------------------------------------

def split(a: QArray) -> tuple[CArray, CArray]:
    """Entrywise ``a = h + v j``; returns ``(h, v)``."""
    h = CArray(a.shape, [Quaternion(q[0], q[1], 0, 0) for q in a.data])
    v = CArray(a.shape, [Quaternion(q[2], q[3], 0, 0) for q in a.data])
    return h, v


def merge(h: QArray, v: QArray) -> QArray:
    """Inverse of :func:`split`: builds ``h + v j``."""
    _same_shape(h, v)
    if not (h.is_complex() and v.is_complex()):
        raise ValueError("merge expects two complex arrays")
    return QArray(h.shape, [Quaternion(p[0], p[1], q[0], q[1]) for p, q in zip(h.data, v.data)])
