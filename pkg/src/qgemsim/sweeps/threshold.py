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

"""Bisection for the largest decoherence rate at which detection still works."""

import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidParameterError, NoDetectionAtZeroError, NonMonotonePredicateError
from ..models.quantum import Physical_Params, Setup_Kind
from ..models.sweep import Measure_Kind, Predicate_Kind, Threshold_Result
from .pipeline import measure_phases, prepare_phases


logger = logging.getLogger(__name__)

#: Witness expectations above this do not count as a detection.
WITNESS_CUTOFF = -1e-12

#: Tripartite negativities at or below this do not count as a detection.
TRINEG_CUTOFF = 1e-9

_MEASURE_OF = {
    Predicate_Kind.WITNESS: Measure_Kind.WITNESS,
    Predicate_Kind.TRINEG: Measure_Kind.TRINEG,
}


def predicate_holds(predicate: Predicate_Kind, value: float) -> bool:
    if predicate is Predicate_Kind.WITNESS:
        return value < WITNESS_CUTOFF
    return value > TRINEG_CUTOFF


class Threshold_Finder:
    """Locates gamma* such that the predicate holds on [0, gamma*] and fails above it."""

    def __init__(self, sample_count: int = 16, tolerance: float = 1e-6,
                 max_iterations: int = 60):
        """
        Initialize threshold finder.

        Args:
            sample_count: Points of the monotonicity pre-check over [0, gamma_hi]
            tolerance: Absolute bracket width (Hz) at which bisection stops
            max_iterations: Bisection step limit
        """
        self.sample_count = sample_count
        self.tolerance = tolerance
        self.max_iterations = max_iterations

    def find(self, setup: Setup_Kind, params: Physical_Params,
             predicate: Predicate_Kind = Predicate_Kind.WITNESS, gamma_hi: float = 1.0,
             phase_override: Optional[Sequence[float]] = None) -> Threshold_Result:
        """
        Find the detection threshold of one configuration (params.gamma is ignored).

        Raises:
            NoDetectionAtZeroError: predicate fails already at gamma = 0
            NonMonotonePredicateError: predicate switches back on inside [0, gamma_hi]
        """
        if not math.isfinite(gamma_hi) or gamma_hi <= 0:
            raise InvalidParameterError("Upper decoherence bracket must be positive",
                                        field="gamma_hi", value=gamma_hi)
        phases = prepare_phases(setup, params, phase_override)

        def value_at(gamma: float) -> float:
            return measure_phases(phases, gamma, params.tau, (_MEASURE_OF[predicate],))[0]

        at_zero = value_at(0.0)
        if not predicate_holds(predicate, at_zero):
            raise NoDetectionAtZeroError(
                f"The {predicate.value} predicate does not hold without decoherence",
                setup=setup.value, predicate=predicate.value, value=at_zero)

        samples = self._presample(predicate, value_at, gamma_hi)
        if samples[-1][1]:
            logger.info("%s predicate still holds at gamma_hi = %g Hz", predicate.value, gamma_hi)
            return Threshold_Result(setup=setup, predicate=predicate, gamma_star=gamma_hi,
                                    iterations=0, samples=tuple(samples), saturated=True)

        last_true = max(index for index, (_, holds) in enumerate(samples) if holds)
        lo, hi = samples[last_true][0], samples[last_true + 1][0]
        iterations = 0
        while hi - lo > self.tolerance and iterations < self.max_iterations:
            mid = 0.5 * (lo + hi)
            if predicate_holds(predicate, value_at(mid)):
                lo = mid
            else:
                hi = mid
            iterations += 1
            logger.debug("Bisection step %d: [%.9g, %.9g]", iterations, lo, hi)

        logger.info("Threshold for %s (%s): %.6g Hz after %d steps",
                    setup.value, predicate.value, lo, iterations)
        return Threshold_Result(setup=setup, predicate=predicate, gamma_star=lo,
                                iterations=iterations, samples=tuple(samples))

    def _presample(self, predicate: Predicate_Kind, value_at: Callable[[float], float],
                   gamma_hi: float) -> List[Tuple[float, bool]]:
        grid = np.linspace(0.0, gamma_hi, self.sample_count)
        samples = [(float(gamma), predicate_holds(predicate, value_at(float(gamma))))
                   for gamma in grid]
        seen_failure = False
        for _, holds in samples:
            if holds and seen_failure:
                raise NonMonotonePredicateError(
                    f"The {predicate.value} predicate turns back on inside [0, {gamma_hi}] Hz",
                    samples=samples)
            seen_failure = seen_failure or not holds
        return samples

    def scan(self, setup: Setup_Kind, params: Physical_Params, field: str,
             values: Sequence[float], predicate: Predicate_Kind = Predicate_Kind.WITNESS,
             gamma_hi: float = 1.0) -> List[Tuple[float, Threshold_Result]]:
        """Thresholds for several values of one physical parameter (e.g. mass)."""
        return [(float(value),
                 self.find(setup, params.with_changes(**{field: float(value)}), predicate, gamma_hi))
                for value in values]
