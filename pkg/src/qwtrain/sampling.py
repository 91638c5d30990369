"""Measurement simulation: roulette-wheel selection over basis-state
probabilities, then a uniform draw of a concrete grid label from the
measured class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lackadaisical import CLASSES, ReducedState
from .search_space import MarkedSet, Window


@dataclass(frozen=True)
class WheelOutcome:
    index: int
    probability: float


def roulette_select(weights, rng: np.random.Generator) -> WheelOutcome:
    """Pick index i with probability weights[i] / sum(weights).

    Uses cumulative-sum inversion of a single uniform draw; zero-weight
    outcomes can never be selected.
    """
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a non-empty 1-D sequence")
    if np.any(w < 0.0):
        raise ValueError("weights must be non-negative")
    total = float(w.sum())
    if not total > 0.0:
        raise ValueError("weights must not all be zero")
    cumulative = np.cumsum(w)
    u = rng.random() * total
    index = int(np.searchsorted(cumulative, u, side="right"))
    index = min(index, w.size - 1)
    return WheelOutcome(index=index, probability=float(w[index]) / total)


def _draw_unmarked(window: Window, marked: MarkedSet, rng: np.random.Generator):
    # Rejection sampling; the marked set is tiny compared to the window,
    # so the expected number of draws is barely above one.
    xs = window.x_values()
    ys = window.y_values()
    while True:
        label = (
            int(xs[rng.integers(xs.size)]),
            int(ys[rng.integers(ys.size)]),
        )
        if label not in marked:
            return label


def measure_cascade(
    state: ReducedState,
    marked: MarkedSet,
    window: Window,
    rng: np.random.Generator,
) -> tuple[str, tuple[int, int]]:
    """Measure the class register, then resolve a concrete grid label.

    The first roulette draw selects one of the four classes by its
    probability; because each class state weights its vertices equally,
    the second draw picks a label uniformly from the marked set (classes
    aa/ab) or its complement (ba/bb).
    """
    if marked.k != state.params.k:
        raise ValueError(
            f"marked set size {marked.k} does not match graph k={state.params.k}"
        )
    if window.n != state.params.n:
        raise ValueError(
            f"window has {window.n} vertices but graph has n={state.params.n}"
        )
    outcome = roulette_select(state.probabilities(), rng)
    klass = CLASSES[outcome.index]
    if klass in ("aa", "ab"):
        label = marked.positions[int(rng.integers(marked.k))]
    else:
        label = _draw_unmarked(window, marked, rng)
    return klass, label
