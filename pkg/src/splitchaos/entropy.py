"""Shannon entropy and its two hyperbolic-valued generalizations.

All entropies use natural logarithms and the 0*log(0) = 0 convention,
applied per component.  The weak form replaces each weight's log argument
by its accumulated real probability; the strong form takes the
componentwise log of the hyperbolic weight itself, so for a FULL
distribution its parts are the Shannon entropies of the two component
marginals.
"""

import math
from dataclasses import dataclass

from .numbers import Hyperbolic, embed
from .probability import (
    Mode,
    NotFullMode,
    accumulated,
    pair_distribution,
    pair_hyperbolic_distribution,
)

# Added to the right-hand side of the inequality checks so equality cases
# computed in floating point are not reported as violations.
INEQ_SLACK = 1e-12


def shannon(d):
    """Shannon entropy (nats) of a RealDistribution."""
    total = 0.0
    for p in d.probs:
        if p != 0.0:
            total -= p * math.log(p)
    return total


def weak_entropy(d):
    """Sum of -rho * log~(accumulated(rho)) over the distribution.

    Terms whose accumulated probability is zero carry no mass and
    contribute nothing.
    """
    result = Hyperbolic(0.0, 0.0)
    for rho in d:
        p = accumulated(rho)
        if p != 0.0:
            result = result + (-rho) * embed(math.log(p))
    return result


def strong_entropy(d):
    """Sum of -rho * Log(rho) with the zero convention per component.

    Works in any mode: a dead component contributes 0 through the
    convention.
    """
    e1 = 0.0
    e2 = 0.0
    for rho in d:
        if rho.e1 != 0.0:
            e1 -= rho.e1 * math.log(rho.e1)
        if rho.e2 != 0.0:
            e2 -= rho.e2 * math.log(rho.e2)
    return Hyperbolic(e1, e2)


@dataclass(frozen=True)
class EntropyReport:
    """Entropies of a FULL distribution and of its two pair distributions.

    h_q is the Shannon entropy of the real pair-product distribution;
    h_k the strong entropy of the hyperbolic pair distribution.  The
    flags record whether the strong entropy is componentwise bounded by
    each of them.
    """

    h_strong: Hyperbolic
    h_weak: Hyperbolic
    h_q: float
    h_k: Hyperbolic
    ineq_q: bool
    ineq_k: bool


def verify_inequalities(d):
    """Compute the entropy report for a FULL-mode distribution."""
    if d.mode is not Mode.FULL:
        raise NotFullMode(f"entropy report requires FULL mode, got {d.mode.value}")
    h_strong = strong_entropy(d)
    h_weak = weak_entropy(d)
    h_q = shannon(pair_distribution(d))
    h_k = strong_entropy(pair_hyperbolic_distribution(d))
    ineq_q = h_strong <= embed(h_q + INEQ_SLACK)
    ineq_k = h_strong <= h_k + embed(INEQ_SLACK)
    return EntropyReport(h_strong, h_weak, h_q, h_k, ineq_q, ineq_k)
