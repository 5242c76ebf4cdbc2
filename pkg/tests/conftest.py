"""Shared sampling helpers: random valid X states by rejection sampling of
Bloch parameters uniform in [-1, 1]^5."""

import numpy as np
import pytest

from laqc.states import XStateParams, x_state_eigenvalues


def sample_x_params(rng, symmetry=None, max_tries=10000):
    """Draw one PSD XStateParams; symmetry in {None, 'sym', 'anti', 'bell'}."""
    for _ in range(max_tries):
        vals = rng.uniform(-1.0, 1.0, size=5)
        if symmetry == "sym":
            vals[1] = vals[0]
        elif symmetry == "anti":
            vals[1] = -vals[0]
        elif symmetry == "bell":
            vals[0] = vals[1] = 0.0
        p = XStateParams(*vals)
        if x_state_eigenvalues(p).min() >= 0.0:
            return p
    raise RuntimeError("rejection sampling failed to find a PSD state")


def sample_many(rng, n, symmetry=None):
    return [sample_x_params(rng, symmetry) for _ in range(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
