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

"""
Symbolic entanglement classes of the evolved parallel and linear states.

Angles are compared by shortest circular distance, so every condition is
periodic in 2 pi.
"""

import math
from typing import Optional

from ..exceptions import InvalidParameterError, InvalidToleranceError
from ..models.quantum import Classification, Phase_Set, Setup_Kind, State_Class


DEFAULT_EPS = 1e-9


def _check_eps(eps: float) -> None:
    if not math.isfinite(eps) or eps <= 0:
        raise InvalidToleranceError("Classification tolerance must be positive", eps=eps)


def _near(angle: float, target: float, eps: float, period: float = 2 * math.pi) -> bool:
    """Whether ``angle`` is within ``eps`` of ``target`` modulo ``period``."""
    return abs(math.remainder(angle - target, period)) <= eps


def _shared_verdict(dphi3: float, separable: bool, eps: float,
                    separable_condition: str) -> Classification:
    if _near(dphi3, 0.0, eps):
        if separable:
            return Classification(State_Class.FULLY_SEPARABLE, separable_condition)
        return Classification(State_Class.BISEPARABLE, "dphi3 = 0 (mod 2pi)")
    if _near(dphi3, math.pi, eps):
        return Classification(State_Class.GHZ, "dphi3 = pi (mod 2pi)")
    return Classification(State_Class.GHZ_TYPE, "generic phases")


def classify_parallel(dphi2: float, dphi3: float, eps: float = DEFAULT_EPS) -> Classification:
    """Class of the parallel-setup state with phase differences (dphi2, dphi3)."""
    _check_eps(eps)
    return _shared_verdict(dphi3, _near(dphi2, 0.0, eps, period=math.pi), eps,
                           "dphi3 = 0 (mod 2pi) and dphi2 = 0 (mod pi)")


def classify_linear(dphi2: float, dphi3: float, dphi4: float,
                    eps: float = DEFAULT_EPS) -> Classification:
    """Class of the linear-setup state; with dphi3 = 0 qubit 2 factors out."""
    _check_eps(eps)
    return _shared_verdict(dphi3, _near(dphi2 + dphi4, 0.0, eps), eps,
                           "dphi3 = 0 (mod 2pi) and dphi2 + dphi4 = 0 (mod 2pi)")


def classify_phases(phases: Phase_Set, eps: Optional[float] = None) -> Classification:
    """Dispatch on the phase set's setup; the star geometry has no classifier."""
    eps = DEFAULT_EPS if eps is None else eps
    deltas = phases.delta_phases
    if phases.setup is Setup_Kind.PARALLEL:
        return classify_parallel(deltas[0], deltas[1], eps)
    if phases.setup is Setup_Kind.LINEAR:
        return classify_linear(deltas[0], deltas[1], deltas[2], eps)
    raise InvalidParameterError("No symbolic classification exists for the star setup",
                                field="setup", value=phases.setup.value)
