import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260816)


@pytest.fixture
def unit_points(rng) -> list[complex]:
    """Ten generic points on the unit circle, away from the degenerate d=0."""
    points = []
    while len(points) < 10:
        theta = rng.uniform(0.05, np.pi / 2 - 0.05)
        a = complex(np.exp(1j * theta))
        if abs(a**2 + a**-2) > 0.1:
            points.append(a)
    return points
