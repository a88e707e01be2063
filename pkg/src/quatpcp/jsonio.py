"""JSON interchange for arrays, pairs and JSON-lines search output.

Array documents look like ``{"shape": [2, 2], "alphabet": "H", "data": [...]}``
with row-major data.  Alphabet ``"H"`` and ``"C"`` use unit tokens such as
``"-k"``; alphabet ``"Q"`` stores each entry as four rational strings.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from .constructions import PROVENANCES, PcpPair, check_commutativity
from .qarray import QArray, is_pcp
from .quaternion import (
    C_TOKENS,
    components_text,
    in_alphabet_c,
    in_alphabet_h,
    parse_token,
    unit_token,
)

ALPHABETS = ("H", "C", "Q")


class FormatError(ValueError):
    """Malformed or unreadable interchange document."""


def infer_alphabet(arr: QArray) -> str:
    if all(in_alphabet_c(q) for q in arr.data):
        return "C"
    if all(in_alphabet_h(q) for q in arr.data):
        return "H"
    return "Q"


def array_to_obj(arr: QArray, alphabet: str | None = None) -> dict:
    alphabet = alphabet or infer_alphabet(arr)
    if alphabet in ("H", "C"):
        data = [unit_token(q) for q in arr.data]
        if alphabet == "C" and any(t not in C_TOKENS for t in data):
            raise FormatError("array has entries outside alphabet C")
    elif alphabet == "Q":
        data = [components_text(q) for q in arr.data]
    else:
        raise FormatError(f"unknown alphabet {alphabet!r}")
    return {"shape": list(arr.shape), "alphabet": alphabet, "data": data}


def array_from_obj(obj) -> QArray:
    if not isinstance(obj, dict) or not {"shape", "data"} <= obj.keys():
        raise FormatError("array document needs 'shape' and 'data'")
    alphabet = obj.get("alphabet", "Q")
    if alphabet not in ALPHABETS:
        raise FormatError(f"unknown alphabet {alphabet!r}")
    shape = obj["shape"]
    if not isinstance(shape, list) or not all(isinstance(d, int) and d >= 1 for d in shape):
        raise FormatError(f"bad shape {shape!r}")
    try:
        data = [parse_token(t) for t in obj["data"]]
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc
    if alphabet == "H" and not all(in_alphabet_h(q) for q in data):
        raise FormatError("entry outside alphabet H")
    if alphabet == "C" and not all(in_alphabet_c(q) for q in data):
        raise FormatError("entry outside alphabet C")
    try:
        arr = QArray(shape, data)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return arr.as_carray() if arr.is_complex() else arr


def pair_to_obj(pair: PcpPair) -> dict:
    return {
        "first": array_to_obj(pair.first),
        "second": array_to_obj(pair.second),
        "provenance": pair.provenance,
        "metadata": {"verified": pair.verified, "commutative": pair.commutative},
    }


def pair_from_obj(obj) -> PcpPair:
    """Rebuild a pair; the flags are recomputed rather than trusted."""
    if not isinstance(obj, dict) or not {"first", "second"} <= obj.keys():
        raise FormatError("pair document needs 'first' and 'second'")
    first, second = array_from_obj(obj["first"]), array_from_obj(obj["second"])
    if not (first.is_complex() and second.is_complex()):
        raise FormatError("pair members must be complex arrays")
    if first.shape != second.shape:
        raise FormatError(f"pair members differ in shape: {first.shape} vs {second.shape}")
    provenance = obj.get("provenance", "external")
    if provenance not in PROVENANCES:
        raise FormatError(f"unknown provenance {provenance!r}")
    return PcpPair(first.as_carray(), second.as_carray(), is_pcp(first, second),
                   check_commutativity(first, second), provenance)


def dumps(obj) -> str:
    """Canonical text form: compact separators, one trailing newline."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


def read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg})") from exc


def load_array(path) -> QArray:
    return array_from_obj(read_json(path))


def save_array(arr: QArray, path, alphabet: str | None = None) -> None:
    Path(path).write_text(dumps(array_to_obj(arr, alphabet)))


def load_pair(path) -> PcpPair:
    return pair_from_obj(read_json(path))


def save_pair(pair: PcpPair, path) -> None:
    Path(path).write_text(dumps(pair_to_obj(pair)))


def is_pair_obj(obj) -> bool:
    return isinstance(obj, dict) and "first" in obj and "second" in obj


def write_jsonl(arrays: Iterable[QArray], path) -> int:
    n = 0
    with open(path, "w") as fh:
        for arr in arrays:
            fh.write(dumps(array_to_obj(arr)))
            n += 1
    return n


def read_catalog(path) -> list[QArray]:
    """Arrays from a JSON-lines file, a JSON list, or a single array document."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    if not text.strip():
        return []
    try:
        whole = json.loads(text)
    except json.JSONDecodeError:
        whole = None
    if isinstance(whole, list):
        return [array_from_obj(o) for o in whole]
    if isinstance(whole, dict):
        return [array_from_obj(whole)]
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(array_from_obj(json.loads(line)))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
    return out
