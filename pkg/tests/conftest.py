import random

import pytest
from hypothesis import settings

from sphladder.verify import random_smooth_function

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture
def smooth(rng):
    """A handful of seeded smooth functions built from harmonics with l <= 4."""
    return [random_smooth_function(rng, 4) for _ in range(6)]
