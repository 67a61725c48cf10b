from __future__ import annotations

import pytest

from linsched import GenSpec, PhysicalParams, random_euclidean


@pytest.fixture
def params():
    return PhysicalParams(alpha=3.0, beta=2.0)


def make_random_instance(seed: int, n: int = 8, box: float = 20.0, params=None):
    params = params or PhysicalParams(alpha=3.0, beta=2.0)
    return random_euclidean(GenSpec(n=n, params=params, box=box, seed=seed))
