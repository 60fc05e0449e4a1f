import math
import random

import pytest

from mlm_service.backends import MockBigramBackend


def make_transitions(rng: random.Random, symbols) -> dict[str, dict[str, float]]:
    table = {}
    for prev in ["<s>", *symbols]:
        weights = [rng.uniform(0.05, 1.0) for _ in symbols]
        total = math.fsum(weights)
        table[prev] = {s: w / total for s, w in zip(symbols, weights)}
    return table


@pytest.fixture
def mock_backend():
    rng = random.Random(42)
    return MockBigramBackend(make_transitions(rng, ["a", "b", "c", "d"]))
