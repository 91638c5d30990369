"""The 2-2-1 perceptron for XOR with logistic-sigmoid activations.

Nine weights in total: six in the hidden layer (four weights, two biases)
plus the output bias stay fixed; the two output-neuron input weights are
the searched pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

XOR_INPUTS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))
XOR_TARGETS: tuple[float, ...] = (0.0, 1.0, 1.0, 0.0)

_PATTERNS = np.array(XOR_INPUTS, dtype=float)
_TARGETS = np.array(XOR_TARGETS)


def sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


@dataclass(frozen=True, eq=False)
class FixedWeights:
    """The seven values held constant during the search."""

    hidden: np.ndarray  # (2, 2), hidden[j, i] connects input i to hidden unit j
    hidden_bias: np.ndarray  # (2,)
    out_b: float

    def with_output(self, w1: float, w2: float) -> "MlpWeights":
        return MlpWeights(
            hidden=self.hidden,
            hidden_bias=self.hidden_bias,
            out_w=np.array([w1, w2], dtype=float),
            out_b=self.out_b,
        )


@dataclass(frozen=True, eq=False)
class MlpWeights:
    """All nine synaptic weights of the network."""

    hidden: np.ndarray  # (2, 2)
    hidden_bias: np.ndarray  # (2,)
    out_w: np.ndarray  # (2,)
    out_b: float

    def values(self) -> np.ndarray:
        return np.concatenate(
            [self.hidden.ravel(), self.hidden_bias, self.out_w, [self.out_b]]
        )

    def to_json_dict(self) -> dict:
        return {
            "hidden": [[float(v) for v in row] for row in self.hidden],
            "hidden_bias": [float(v) for v in self.hidden_bias],
            "out_w": [float(v) for v in self.out_w],
            "out_b": float(self.out_b),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "MlpWeights":
        return MlpWeights(
            hidden=np.array(data["hidden"], dtype=float),
            hidden_bias=np.array(data["hidden_bias"], dtype=float),
            out_w=np.array(data["out_w"], dtype=float),
            out_b=float(data["out_b"]),
        )


@dataclass(frozen=True)
class TrainReport:
    epochs: int
    final_error: float
    converged: bool


def pattern_activations(fixed: FixedWeights) -> np.ndarray:
    """Hidden-layer outputs for the four input patterns, shape (4, 2)."""
    return sigmoid(_PATTERNS @ fixed.hidden.T + fixed.hidden_bias)


def forward(weights: MlpWeights, inp: tuple[int, int]) -> float:
    """Network output for one input pair."""
    if not np.all(np.isfinite(weights.values())):
        raise ValueError("weights must be finite")
    x = np.asarray(inp, dtype=float)
    h = sigmoid(weights.hidden @ x + weights.hidden_bias)
    return float(sigmoid(weights.out_b + weights.out_w @ h))


def _forward_all(weights: MlpWeights):
    h = sigmoid(_PATTERNS @ weights.hidden.T + weights.hidden_bias)
    out = sigmoid(h @ weights.out_w + weights.out_b)
    return h, out


def is_solution(weights: MlpWeights, margin: float = 0.5) -> bool:
    """True iff every pattern's output is strictly within `margin` of its
    target; this is the predicate the search oracle marks vertices with.
    """
    if not 0.0 < margin <= 0.5:
        raise ValueError("margin must lie in (0, 0.5]")
    _, out = _forward_all(weights)
    return bool(np.all(np.abs(out - _TARGETS) < margin))


def generate_fixed_weights(
    seed: int, weight_range: tuple[float, float] = (-1.0, 1.0)
) -> FixedWeights:
    """Draw the seven fixed values i.i.d. uniform over `weight_range`.

    The draw order is hidden[0,0], hidden[0,1], hidden[1,0], hidden[1,1],
    the two hidden biases, then the output bias; a fixed seed reproduces
    the same network exactly.
    """
    lo, hi = weight_range
    if not lo < hi:
        raise ValueError(f"degenerate weight range [{lo}, {hi}]")
    values = np.random.default_rng(seed).uniform(lo, hi, size=7)
    return FixedWeights(
        hidden=values[:4].reshape(2, 2),
        hidden_bias=values[4:6].copy(),
        out_b=float(values[6]),
    )


def mse(weights: MlpWeights) -> float:
    """Mean squared error over the four patterns."""
    _, out = _forward_all(weights)
    return float(np.mean((out - _TARGETS) ** 2))


def gradients(weights: MlpWeights) -> MlpWeights:
    """Analytic gradient of the mean squared error, one entry per weight."""
    h, out = _forward_all(weights)
    d_out = 2.0 / len(_TARGETS) * (out - _TARGETS) * out * (1.0 - out)  # (4,)
    g_out_w = h.T @ d_out
    g_out_b = float(d_out.sum())
    d_hidden = np.outer(d_out, weights.out_w) * h * (1.0 - h)  # (4, 2)
    g_hidden = d_hidden.T @ _PATTERNS
    g_hidden_bias = d_hidden.sum(axis=0)
    return MlpWeights(
        hidden=g_hidden, hidden_bias=g_hidden_bias, out_w=g_out_w, out_b=g_out_b
    )


def train_backprop(
    weights: MlpWeights,
    rate: float = 0.5,
    max_epochs: int = 10000,
    margin: float = 0.5,
) -> TrainReport:
    """Full-batch gradient descent on the mean squared error.

    Each epoch first checks the solution predicate, so a network that
    already classifies all four patterns reports one epoch with no update.
    """
    if rate <= 0.0:
        raise ValueError("learning rate must be positive")
    if max_epochs < 0:
        raise ValueError("epoch budget must be non-negative")
    w = weights
    for epoch in range(1, max_epochs + 1):
        if is_solution(w, margin):
            return TrainReport(epochs=epoch, final_error=mse(w), converged=True)
        g = gradients(w)
        w = MlpWeights(
            hidden=w.hidden - rate * g.hidden,
            hidden_bias=w.hidden_bias - rate * g.hidden_bias,
            out_w=w.out_w - rate * g.out_w,
            out_b=w.out_b - rate * g.out_b,
        )
    return TrainReport(
        epochs=max_epochs, final_error=mse(w), converged=is_solution(w, margin)
    )
