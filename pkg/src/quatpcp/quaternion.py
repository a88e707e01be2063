"""Exact quaternion arithmetic and the two unit alphabets.

Components are exact rationals: plain ``int`` whenever the value is integral,
``fractions.Fraction`` otherwise.  Products of alphabet-valued entries stay in
integers, so correlation verdicts never need a tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

Scalar = Union[int, Fraction]


def scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar, collapsing integral fractions to int."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if not value.is_integer():
            raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or string")
        return int(value)
    frac = Fraction(value)
    return frac.numerator if frac.denominator == 1 else frac


def half(value: Scalar) -> Scalar:
    if isinstance(value, int) and value % 2 == 0:
        return value // 2
    return scalar(Fraction(value) / 2)


class Quaternion(NamedTuple):
    """``q1 + q2 i + q3 j + q4 k`` with exact components."""

    q1: Scalar = 0
    q2: Scalar = 0
    q3: Scalar = 0
    q4: Scalar = 0

    @classmethod
    def of(cls, q1=0, q2=0, q3=0, q4=0) -> "Quaternion":
        return cls(scalar(q1), scalar(q2), scalar(q3), scalar(q4))

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self[0] + other[0], self[1] + other[1],
                          self[2] + other[2], self[3] + other[3])

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self[0] - other[0], self[1] - other[1],
                          self[2] - other[2], self[3] - other[3])

    def __neg__(self):
        return Quaternion(-self[0], -self[1], -self[2], -self[3])

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quaternion(self[0] * other, self[1] * other, self[2] * other, self[3] * other)
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute with every quaternion
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.__mul__(other)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return qconj(self)

    def norm2(self) -> Scalar:
        """Squared norm ``q q*``."""
        return self[0] * self[0] + self[1] * self[1] + self[2] * self[2] + self[3] * self[3]

    def is_complex(self) -> bool:
        return self[2] == 0 and self[3] == 0

    def is_zero(self) -> bool:
        return not (self[0] or self[1] or self[2] or self[3])

    def __str__(self):
        return format_quaternion(self)


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p q`` (order matters)."""
    p1, p2, p3, p4 = p
    q1, q2, q3, q4 = q
    return Quaternion(
        p1 * q1 - p2 * q2 - p3 * q3 - p4 * q4,
        q1 * p2 + p1 * q2 - q3 * p4 + p3 * q4,
        q1 * p3 + p1 * q3 + q2 * p4 - p2 * q4,
        q1 * p4 + p1 * q4 - q2 * p3 + p2 * q3,
    )


def qconj(q: Quaternion) -> Quaternion:
    return Quaternion(q[0], -q[1], -q[2], -q[3])


def complex_q(re=0, im=0) -> Quaternion:
    """Embed ``re + im i`` as a quaternion."""
    return Quaternion(scalar(re), scalar(im), 0, 0)


def decompose(q: Quaternion) -> tuple[Quaternion, Quaternion]:
    """Split ``q`` into complex parts ``(h, v)`` with ``q = h + v j``."""
    return Quaternion(q[0], q[1], 0, 0), Quaternion(q[2], q[3], 0, 0)


def compose(h: Quaternion, v: Quaternion) -> Quaternion:
    """Inverse of :func:`decompose`; both arguments must be complex."""
    if not (h.is_complex() and v.is_complex()):
        raise ValueError("compose expects two complex values")
    return Quaternion(h[0], h[1], v[0], v[1])


# --- unit alphabets ---------------------------------------------------------

H_TOKENS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
C_TOKENS = ("1", "i", "-1", "-i")

# basis products from i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j (and reversed signs)
_BASIS = "1ijk"
_BASIS_MUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _token_parts(token: str) -> tuple[int, str]:
    return (-1, token[1:]) if token.startswith("-") else (1, token)


def _token_of(sign: int, basis: str) -> str:
    return basis if sign > 0 else "-" + basis


def _unit_quaternion(token: str) -> Quaternion:
    sign, basis = _token_parts(token)
    comps = [0, 0, 0, 0]
    comps[_BASIS.index(basis)] = sign
    return Quaternion(*comps)


H_UNITS: tuple[Quaternion, ...] = tuple(_unit_quaternion(t) for t in H_TOKENS)
C_UNITS: tuple[Quaternion, ...] = tuple(_unit_quaternion(t) for t in C_TOKENS)
_H_INDEX = {q: n for n, q in enumerate(H_UNITS)}


def _build_tables():
    mul = []
    for a in H_TOKENS:
        sa, ba = _token_parts(a)
        row = []
        for b in H_TOKENS:
            sb, bb = _token_parts(b)
            s, basis = _BASIS_MUL[(ba, bb)]
            row.append(H_TOKENS.index(_token_of(sa * sb * s, basis)))
        mul.append(tuple(row))
    conj = tuple(H_TOKENS.index(_token_of(-s if b != "1" else s, b))
                 for s, b in map(_token_parts, H_TOKENS))
    return tuple(mul), conj


#: ``H_MUL[a][b]`` is the index of ``H_UNITS[a] * H_UNITS[b]``.
H_MUL, H_CONJ = _build_tables()


def h_index(q: Quaternion) -> int:
    """Position of ``q`` in :data:`H_UNITS`; raises ``ValueError`` if ``q`` is not a basic unit."""
    try:
        return _H_INDEX[q]
    except KeyError:
        raise ValueError(f"{format_quaternion(q)} is not a basic unit quaternion") from None


def in_alphabet_h(q: Quaternion) -> bool:
    return q in _H_INDEX


def in_alphabet_c(q: Quaternion) -> bool:
    return q in C_UNITS


# --- text form --------------------------------------------------------------

def parse_token(token) -> Quaternion:
    """Parse a unit token such as ``"-k"`` or a ``[q1, q2, q3, q4]`` list of rational strings."""
    if isinstance(token, str):
        tok = token.strip()
        if tok == "0":
            return ZERO
        if tok in H_TOKENS:
            return _unit_quaternion(tok)
        raise ValueError(f"unknown quaternion token {token!r}")
    if isinstance(token, (list, tuple)) and len(token) == 4:
        try:
            return Quaternion.of(*(Fraction(str(c)) for c in token))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad quaternion components {token!r}") from exc
    raise ValueError(f"cannot parse quaternion from {token!r}")


def unit_token(q: Quaternion) -> str:
    return H_TOKENS[h_index(q)]


def components_text(q: Quaternion) -> list[str]:
    return [str(c) for c in q]


def format_quaternion(q: Quaternion) -> str:
    """Human-readable form, e.g. ``-28+4i+6j+8k``."""
    parts = []
    for value, suffix in zip(q, ("", "i", "j", "k")):
        if value == 0:
            continue
        if suffix and value in (1, -1):
            text = ("-" if value < 0 else "+") + suffix
        else:
            text = (f"{value}" if value < 0 else f"+{value}") + suffix
        parts.append(text)
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out
