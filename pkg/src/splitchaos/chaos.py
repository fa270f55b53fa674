"""The three chaos-game variants over a hyperbolic IFS.

Each run is a deterministic function of (ifs, config): the seed drives a
splitmix64-seeded xoshiro256++ stream, map selection inverts the
cumulative probabilities with right-open bins (first index whose
cumulative sum strictly exceeds the draw, last index as a guard against
rounding), and the orbit is iterated componentwise.

The classical and hyperbolic variants select one whole map per step from
the real selection probabilities of the weight list.  The split variant
draws the e1-component map and the e2-component map independently, one
draw each in that order, from the two component marginals, so its e1
orbit is exactly the one-dimensional chaos game of the e1 components and
likewise for e2.

Selection counts are tallied from the first iteration on, including the
burn-in prefix, while recorded points start after it.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .numbers import ZERO, Hyperbolic
from .probability import Mode, NotFullMode, accumulated_distribution, marginals
from .rng import Xoshiro256PP


class Variant(Enum):
    CLASSICAL = "classical"
    HYPERBOLIC = "hyperbolic"
    D_CHAOS = "d-chaos"


@dataclass(frozen=True)
class RunConfig:
    variant: Variant
    seed: int
    iterations: int
    burn_in: int = 100
    start: Hyperbolic = ZERO

    def __post_init__(self):
        if self.iterations <= 0:
            raise ValueError("iterations must be positive")
        if self.burn_in < 0:
            raise ValueError("burn_in must be non-negative")
        if self.iterations <= self.burn_in:
            raise ValueError(
                f"iterations ({self.iterations}) must exceed burn_in ({self.burn_in})"
            )


@dataclass(eq=False)
class PointCloud:
    """Recorded orbit of one run: coordinate arrays plus selection tallies.

    e1/e2 hold the idempotent coordinates of the points recorded after
    burn-in, in order.  selection_counts has one tally per map, or one
    per (s, t) pair in row-major order for the split variant, summing to
    the total iteration count.
    """

    e1: np.ndarray
    e2: np.ndarray
    config: RunConfig
    selection_counts: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.e1)

    def point(self, i):
        return Hyperbolic(float(self.e1[i]), float(self.e2[i]))

    def __iter__(self):
        for a, b in zip(self.e1, self.e2):
            yield Hyperbolic(float(a), float(b))

    def __eq__(self, other):
        if not isinstance(other, PointCloud):
            return NotImplemented
        return (
            self.config == other.config
            and np.array_equal(self.e1, other.e1)
            and np.array_equal(self.e2, other.e2)
            and np.array_equal(self.selection_counts, other.selection_counts)
        )


def cumulative(probs):
    """Running left-to-right sums of a probability list."""
    cum = []
    total = 0.0
    for p in probs:
        total += p
        cum.append(total)
    return cum


def select_index(cum, u):
    """First index whose cumulative sum exceeds u; right-open bins.

    Zero-width bins are skipped and draws at or beyond the final sum
    (possible through rounding) fall into the last bin.
    """
    for i, c in enumerate(cum):
        if u < c:
            return i
    return len(cum) - 1


def _require_variant(cfg, variant):
    if cfg.variant is not variant:
        raise ValueError(f"config variant is {cfg.variant.value}, expected {variant.value}")


def _run_single_selection(ifs, cfg):
    probs = accumulated_distribution(ifs.dist).probs
    cum = cumulative(probs)
    coeffs = [(f.kappa.e1, f.kappa.e2, f.beta.e1, f.beta.e2) for f in ifs.maps]
    counts = [0] * len(coeffs)
    rng = Xoshiro256PP(cfg.seed)
    next_float = rng.next_float
    burn_in = cfg.burn_in
    x1 = cfg.start.e1
    x2 = cfg.start.e2
    out1 = []
    out2 = []
    push1 = out1.append
    push2 = out2.append
    for i in range(cfg.iterations):
        u = next_float()
        j = 0
        for c in cum:
            if u < c:
                break
            j += 1
        if j == len(cum):
            j -= 1
        counts[j] += 1
        c1, c2, b1, b2 = coeffs[j]
        x1 = c1 * x1 + b1
        x2 = c2 * x2 + b2
        if i >= burn_in:
            push1(x1)
            push2(x2)
    return PointCloud(
        np.asarray(out1, dtype=np.float64),
        np.asarray(out2, dtype=np.float64),
        cfg,
        np.asarray(counts, dtype=np.int64),
    )


def run_classical(ifs, cfg):
    """Whole-map chaos game; selection via the real selection probabilities."""
    _require_variant(cfg, Variant.CLASSICAL)
    return _run_single_selection(ifs, cfg)


def run_hyperbolic(ifs, cfg):
    """Chaos game on the hyperbolic plane; same control flow, hyperbolic weights."""
    _require_variant(cfg, Variant.HYPERBOLIC)
    return _run_single_selection(ifs, cfg)


def run_d_chaos(ifs, cfg):
    """Split chaos game: independent component-map draws per step.

    Requires FULL mode.  Each step consumes two draws, the e1 selection s
    first and the e2 selection t second, and tallies the flat pair index
    s*n + t.
    """
    _require_variant(cfg, Variant.D_CHAOS)
    if ifs.dist.mode is not Mode.FULL:
        raise NotFullMode("the split chaos game needs a FULL-mode distribution")
    m1, m2 = marginals(ifs.dist)
    cum1 = cumulative(m1.probs)
    cum2 = cumulative(m2.probs)
    n = len(ifs.maps)
    coeffs1 = [(f.kappa.e1, f.beta.e1) for f in ifs.maps]
    coeffs2 = [(f.kappa.e2, f.beta.e2) for f in ifs.maps]
    counts = [0] * (n * n)
    rng = Xoshiro256PP(cfg.seed)
    next_float = rng.next_float
    burn_in = cfg.burn_in
    x1 = cfg.start.e1
    x2 = cfg.start.e2
    out1 = []
    out2 = []
    push1 = out1.append
    push2 = out2.append
    for i in range(cfg.iterations):
        u = next_float()
        s = 0
        for c in cum1:
            if u < c:
                break
            s += 1
        if s == n:
            s -= 1
        u = next_float()
        t = 0
        for c in cum2:
            if u < c:
                break
            t += 1
        if t == n:
            t -= 1
        counts[s * n + t] += 1
        c1, b1 = coeffs1[s]
        c2, b2 = coeffs2[t]
        x1 = c1 * x1 + b1
        x2 = c2 * x2 + b2
        if i >= burn_in:
            push1(x1)
            push2(x2)
    return PointCloud(
        np.asarray(out1, dtype=np.float64),
        np.asarray(out2, dtype=np.float64),
        cfg,
        np.asarray(counts, dtype=np.int64),
    )


_RUNNERS = {
    Variant.CLASSICAL: run_classical,
    Variant.HYPERBOLIC: run_hyperbolic,
    Variant.D_CHAOS: run_d_chaos,
}


def run(ifs, cfg):
    """Dispatch to the runner matching cfg.variant."""
    return _RUNNERS[cfg.variant](ifs, cfg)
