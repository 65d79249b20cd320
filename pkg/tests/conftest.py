import random

import pytest
from hypothesis import strategies as st

CHAIN_A = "011111010000010011"
CHAIN_B = "11101011100000"


@st.composite
def balanced(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    bits = ["1"] * n + ["0"] * n
    order = draw(st.permutations(bits))
    return "".join(order)


def random_balanced(rng: random.Random, n: int) -> str:
    bits = ["1"] * n + ["0"] * n
    rng.shuffle(bits)
    return "".join(bits)


@pytest.fixture
def rng():
    return random.Random(20240611)
