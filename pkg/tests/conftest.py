import json

import numpy as np
import pytest

from core.normspace import NormSpec


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def euclid2():
    return NormSpec.euclidean(2)


@pytest.fixture
def linf2():
    return NormSpec.linf(2)


@pytest.fixture
def write_config(tmp_path):
    """Write a norm config dict (or raw text) and return its path."""

    def _write(config, name="norm.json"):
        path = tmp_path / name
        path.write_text(config if isinstance(config, str) else json.dumps(config))
        return str(path)

    return _write


def random_spd(rng, dim):
    m = rng.standard_normal((dim, dim))
    return m @ m.T + dim * np.eye(dim)
