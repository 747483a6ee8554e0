from itertools import product
from pathlib import Path

import pytest

from lsalg.poset import chain_poset, diamond, double_diamond

DATA = Path(__file__).resolve().parent.parent / "examples_data"

# N in {1,2,3}, b_i in {1..4}: 84 chains
FAMILY = [b for N in (1, 2, 3) for b in product(range(1, 5), repeat=N)]
SMALL_FAMILY = [b for b in FAMILY if len(b) <= 2]


def family_id(b):
    return "b" + "-".join(map(str, b))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def chain2():
    return chain_poset([2])


@pytest.fixture
def chain3():
    return chain_poset([3])


@pytest.fixture
def chain23():
    return chain_poset([2, 3])


@pytest.fixture
def dia():
    return diamond()


@pytest.fixture
def ddia():
    return double_diamond()
