import random
import sys
from math import prod
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quatpcp.qarray import CArray, QArray
from quatpcp.quaternion import C_UNITS, H_UNITS, Quaternion
from quatpcp.search import SearchConfig, search_pqa


def random_quaternion(rng, lo=-3, hi=3):
    return Quaternion(*(rng.randint(lo, hi) for _ in range(4)))


def random_qarray(rng, shape, lo=-3, hi=3):
    return QArray(shape, [random_quaternion(rng, lo, hi) for _ in range(prod(shape))])


def random_carray(rng, shape, alphabet=C_UNITS):
    return CArray(shape, [rng.choice(alphabet) for _ in range(prod(shape))])


def random_h_array(rng, shape):
    return QArray(shape, [rng.choice(H_UNITS) for _ in range(prod(shape))])


@pytest.fixture
def rng():
    return random.Random(20190514)


@pytest.fixture(scope="session")
def searched_pqas():
    """All PQAs (first entry pinned) for a handful of small shapes."""
    out = {}
    for shape in [(2,), (4,), (2, 2), (6,), (8,)]:
        out[shape] = search_pqa(SearchConfig(shape)).results
    return out
