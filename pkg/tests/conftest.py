# Copyright (c) 2026 QGEM Sim Team
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Shared fixtures for QGEM Sim tests."""

import math

import numpy as np
import pytest

from qgemsim.models.quantum import Physical_Params, Setup_Kind
from qgemsim.physics.setups import validate_geometry


@pytest.fixture
def default_params():
    """Default experiment: m = 1e-14 kg, d_min = 35 um, l = 10 um, tau = 2.5 s."""
    return Physical_Params()


@pytest.fixture
def rng():
    """Seeded generator so random draws are reproducible."""
    return np.random.default_rng(20260417)


@pytest.fixture
def random_params(rng):
    """Factory for random physically admissible parameter sets."""

    def draw(setup: Setup_Kind) -> Physical_Params:
        while True:
            params = Physical_Params(mass=10 ** rng.uniform(-15, -13.5),
                                     d_min=rng.uniform(10e-6, 80e-6),
                                     l=rng.uniform(1e-6, 60e-6),
                                     tau=rng.uniform(0.1, 5.0))
            if not validate_geometry(setup, params):
                return params

    return draw


@pytest.fixture
def random_deltas(rng):
    """Factory for random phase differences in [0, 2 pi)."""

    def draw(count: int):
        return tuple(float(value) for value in rng.uniform(0.0, 2 * math.pi, count))

    return draw
