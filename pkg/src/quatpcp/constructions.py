"""Maps between perfect quaternion arrays and complex periodic complementary pairs."""

from __future__ import annotations

from dataclasses import dataclass

from .qarray import (
    CArray,
    QArray,
    ShapeError,
    first_offpeak_nonzero,
    is_pcp,
    is_pqa,
    merge,
    right_autocorr,
    split,
    star_correlate,
)
from .quaternion import ONE, J, Quaternion, half, in_alphabet_c, in_alphabet_h

PROVENANCES = ("right_construction", "left_construction", "external")


class NotPQAError(ValueError):
    """The input array is not a perfect quaternion array."""

    def __init__(self, offender):
        self.offender = offender
        super().__init__(f"not a PQA: right autocorrelation is nonzero at shift {offender}")


class AlphabetError(ValueError):
    def __init__(self, index, value, alphabet="H"):
        self.index = index
        self.value = value
        super().__init__(f"entry at {index} is outside alphabet {alphabet}: {value}")


class ComposePqaError(ValueError):
    """A reverse-composition condition failed.

    ``condition`` is ``"a"``, ``"b"`` or ``"c"``; ``index`` is the first
    offending entry or shift.
    """

    MESSAGES = {
        "a": "pair is not a unit-modulus periodic complementary pair",
        "b": "pair does not commute under star correlation",
        "c": "entries are not equal up to sign",
    }

    def __init__(self, condition: str, index):
        self.condition = condition
        self.index = index
        super().__init__(f"condition ({condition}) fails at {index}: {self.MESSAGES[condition]}")


@dataclass(frozen=True)
class PcpPair:
    first: CArray
    second: CArray
    verified: bool
    commutative: bool
    provenance: str = "external"

    def __post_init__(self):
        if self.first.shape != self.second.shape:
            raise ShapeError(f"pair members differ in shape: {self.first.shape} vs {self.second.shape}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.verified and not is_pcp(self.first, self.second):
            raise ValueError("pair flagged verified but is not a PCP")

    @classmethod
    def checked(cls, first: QArray, second: QArray, provenance="external") -> "PcpPair":
        """Build a pair, computing both flags from scratch."""
        first, second = first.as_carray(), second.as_carray()
        return cls(first, second, is_pcp(first, second),
                   check_commutativity(first, second), provenance)

    def members(self):
        return self.first, self.second


def _require_pqa(a: QArray):
    offender = first_offpeak_nonzero(right_autocorr(a))
    if offender is not None:
        raise NotPQAError(offender)


def _require_alphabet_h(a: QArray):
    for n, q in enumerate(a.data):
        if not in_alphabet_h(q):
            raise AlphabetError(a.unravel(n), q)


def check_commutativity(x: QArray, y: QArray) -> bool:
    """True iff ``x star y == y star x`` exactly."""
    return star_correlate(x, y) == star_correlate(y, x)


def lemma1_residual(a: QArray) -> QArray:
    """``R_A - R_Ah - R_Av - (Av star Ah - Ah star Av) j``; zero for every input."""
    h, v = split(a)
    cross = (star_correlate(v, h) - star_correlate(h, v)).right_mul(J)
    return right_autocorr(a) - right_autocorr(h) - right_autocorr(v) - cross


def theorem1_decompose(a: QArray) -> PcpPair:
    """Complex components ``(A_h, A_v)`` of a PQA, which always form a PCP."""
    _require_pqa(a)
    h, v = split(a)
    pair = PcpPair(h, v, is_pcp(h, v), check_commutativity(h, v), "external")
    if not (pair.verified and pair.commutative):
        raise AssertionError("PQA split failed to give a commuting PCP")
    return pair


def quaternary_pair_right(a: QArray) -> PcpPair:
    """Quaternary PCP from the complex components of ``A (1 + j)``.

    Returned as ``(A_h + A_v, A_h - A_v)`` so that :func:`compose_pqa` inverts it.
    """
    _require_alphabet_h(a)
    _require_pqa(a)
    h, v = split(a)
    return _quaternary_pair(h + v, h - v, "right_construction")


def quaternary_pair_left(a: QArray) -> PcpPair:
    """Quaternary PCP ``(A_h* + A_v, A_h* - A_v)`` built from the conjugate PQA."""
    _require_alphabet_h(a)
    _require_pqa(a)
    h, v = split(a)
    hc = h.conj()
    return _quaternary_pair(hc + v, hc - v, "left_construction")


def _quaternary_pair(first, second, provenance) -> PcpPair:
    for arr in (first, second):
        for n, q in enumerate(arr.data):
            if not in_alphabet_c(q):
                raise AssertionError(f"construction produced {q} at {arr.unravel(n)}")
    pair = PcpPair.checked(first, second, provenance)
    if not pair.verified:
        raise AssertionError(f"{provenance} pair failed the PCP check")
    return pair


def quaternary_intermediate(a: QArray) -> QArray:
    """``A (1 + j)``, whose right autocorrelation is twice that of ``A``."""
    return a.right_mul(ONE + J)


def compose_pqa(bh: QArray, bv: QArray) -> QArray:
    """Rebuild a PQA over the basic units from a quaternary PCP.

    Conditions: (a) unit-modulus entries plus the PCP property, (b)
    commutativity under star correlation, (c) ``bh = +-bv`` entrywise.  The
    entrywise test (c) runs first, then (a), then (b); the first failure raises
    :class:`ComposePqaError`.  On success returns ``A_h + A_v j`` with
    ``A_h = (bh + bv)/2`` and ``A_v = (bh - bv)/2``.
    """
    if bh.shape != bv.shape:
        raise ShapeError(f"shape mismatch: {bh.shape} vs {bv.shape}")
    for n, (p, q) in enumerate(zip(bh.data, bv.data)):
        if p != q and p != -q:
            raise ComposePqaError("c", bh.unravel(n))
    for arr in (bh, bv):
        for n, q in enumerate(arr.data):
            if not q.is_complex() or q.norm2() != 1:
                raise ComposePqaError("a", arr.unravel(n))
    offender = first_offpeak_nonzero(right_autocorr(bh) + right_autocorr(bv))
    if offender is not None:
        raise ComposePqaError("a", offender)
    lhs, rhs = star_correlate(bh, bv), star_correlate(bv, bh)
    for n, (p, q) in enumerate(zip(lhs.data, rhs.data)):
        if p != q:
            raise ComposePqaError("b", bh.unravel(n))
    ah = CArray(bh.shape, [Quaternion(half(p[0] + q[0]), half(p[1] + q[1]), 0, 0)
                           for p, q in zip(bh.data, bv.data)])
    av = CArray(bh.shape, [Quaternion(half(p[0] - q[0]), half(p[1] - q[1]), 0, 0)
                           for p, q in zip(bh.data, bv.data)])
    return merge(ah, av)


def tensor_lift(a: QArray, b: QArray) -> QArray:
    """Outer product ``C(k, l) = A(k) b(l)`` with ``b`` a perfect +-1 sequence.

    Appends one axis of length ``len(b)``; the result is again perfect.
    """
    if b.ndim != 1:
        raise ShapeError("lift sequence must be one-dimensional")
    for q in b.data:
        if q not in (ONE, -ONE):
            raise ValueError(f"lift sequence entries must be +-1, got {q}")
    _require_pqa(a)
    if not is_pqa(b):
        raise NotPQAError(first_offpeak_nonzero(right_autocorr(b)))
    data = [q if s == ONE else -q for q in a.data for s in b.data]
    return QArray(a.shape + b.shape, data)
