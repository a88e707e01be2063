"""Quaternary periodic complementary pairs from perfect quaternion arrays."""

from .constructions import (
    ComposePqaError,
    NotPQAError,
    PcpPair,
    check_commutativity,
    compose_pqa,
    lemma1_residual,
    quaternary_pair_left,
    quaternary_pair_right,
    tensor_lift,
    theorem1_decompose,
)
from .qarray import (
    CArray,
    QArray,
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
from .quaternion import Quaternion, compose, decompose, qconj, qmul
from .search import SearchConfig, SearchReport, search_pqa, verify_catalog

__version__ = "0.1.0"

__all__ = [
    "ComposePqaError",
    "NotPQAError",
    "PcpPair",
    "check_commutativity",
    "compose_pqa",
    "lemma1_residual",
    "quaternary_pair_left",
    "quaternary_pair_right",
    "tensor_lift",
    "theorem1_decompose",
    "CArray",
    "QArray",
    "flip",
    "is_pcp",
    "is_pqa",
    "left_autocorr",
    "merge",
    "right_autocorr",
    "scale",
    "shift",
    "split",
    "star_correlate",
    "transform",
    "Quaternion",
    "compose",
    "decompose",
    "qconj",
    "qmul",
    "SearchConfig",
    "SearchReport",
    "search_pqa",
    "verify_catalog",
]
