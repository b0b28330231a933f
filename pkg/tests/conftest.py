import math

import numpy as np
import pytest

from beamsplitter_entanglement.fock import BeamSplitter
from beamsplitter_entanglement.gaussian import (
    beam_split,
    local_squeeze,
    rotate,
    rotate_local,
    squeezed_thermal,
    tensor,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def balanced():
    return BeamSplitter.balanced(0.0)


@pytest.fixture
def balanced_quarter():
    return BeamSplitter.balanced(math.pi / 2)


def random_splitter(rng):
    return BeamSplitter(rng.uniform(0.0, math.pi), rng.uniform(0.0, 2 * math.pi))


def random_two_mode_state(rng):
    """Squeezed thermal inputs, a random splitter, then random local squeezers and rotations"""
    inputs = tensor(
        rotate(squeezed_thermal(rng.uniform(0.0, 1.5), rng.uniform(-1.0, 1.0)), rng.uniform(0, 2 * math.pi)),
        rotate(squeezed_thermal(rng.uniform(0.0, 1.5), rng.uniform(-1.0, 1.0)), rng.uniform(0, 2 * math.pi)),
    )
    state = beam_split(inputs, random_splitter(rng))
    state = local_squeeze(state, rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
    return rotate_local(state, rng.uniform(0, 2 * math.pi), rng.uniform(0, 2 * math.pi))
