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

"""Witness maps of all three setups on a common l-gamma grid."""

import itertools
import logging

import numpy as np

from ..models.quantum import Physical_Params, Setup_Kind
from ..models.sweep import Axis, Measure_Kind, Setup_Comparison, Sweep_Mode, Sweep_Spec
from .sweep_runner import Sweep_Runner


logger = logging.getLogger(__name__)

#: Setups count as nearly equivalent when they differ by less than this share of the range.
EQUIVALENCE_FRACTION = 0.1


def compare_setups(params: Physical_Params, l_axis: Axis, gamma_axis: Axis,
                   runner: Sweep_Runner) -> Setup_Comparison:
    """
    Evaluate the witness of every setup on the same grid and report how far apart they are.

    Cells a setup cannot evaluate are NaN and ignored in the statistics. The
    near-equivalence flag is informational.
    """
    witness = {}
    for setup in Setup_Kind:
        spec = Sweep_Spec(mode=Sweep_Mode.LGAMMA_MAP, setups=(setup,),
                          measures=(Measure_Kind.WITNESS,), params=params,
                          axes=(l_axis, gamma_axis))
        witness[setup] = runner.run(spec).grid(Measure_Kind.WITNESS.value)

    differences = {}
    for first, second in itertools.combinations(Setup_Kind, 2):
        gap = np.abs(witness[first] - witness[second])
        differences[f"{first.value}-{second.value}"] = (
            float(np.nanmax(gap)) if np.any(np.isfinite(gap)) else float("nan"))

    stacked = np.stack(list(witness.values()))
    finite = stacked[np.isfinite(stacked)]
    dynamic_range = float(finite.max() - finite.min()) if finite.size else 0.0
    largest = max((value for value in differences.values() if np.isfinite(value)), default=0.0)
    near_equivalent = largest < EQUIVALENCE_FRACTION * dynamic_range

    logger.info("Setup comparison: largest pairwise gap %.3g over a range of %.3g (%s)",
                largest, dynamic_range, "nearly equivalent" if near_equivalent else "distinct")
    return Setup_Comparison(l_values=l_axis.values(), gamma_values=gamma_axis.values(),
                            witness=witness, pairwise_max_difference=differences,
                            dynamic_range=dynamic_range, near_equivalent=near_equivalent)
