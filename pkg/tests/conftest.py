from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from simil import instances
from simil.dist.joint import product
from simil.dist.space import SignalSpace

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'

@pytest.fixture
def fixtures_dir()->Path:
    return FIXTURES

@pytest.fixture
def rng()->np.random.Generator:
    return np.random.default_rng(20240917)

@pytest.fixture
def binary_space()->SignalSpace:
    return instances.binary_space()

@pytest.fixture
def four_values()->SignalSpace:
    return SignalSpace.from_values([1, 2, 3, 4])

@pytest.fixture
def uniform_pair_dist(four_values):
    """ Two independent uniform draws from {1, 2, 3, 4} """
    return product([Fraction(1, 4)] * 4, 2, four_values)

@pytest.fixture
def supermodular_gap():
    return instances.supermodular_gap_pair()

@pytest.fixture
def contour_shift():
    return instances.contour_shift_pair()

@pytest.fixture
def puzzle_families():
    return instances.correlation_puzzle_families()
