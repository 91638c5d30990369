"""Pure numpy implementations of the hot kernels.

Drop-in twin of the compiled ``_kernels`` extension; ``_backend`` picks
whichever is available.  The walk kernels keep the exact same operation
order as the compiled ones (adds first, one real scaling last) so both
backends produce bit-identical amplitudes.
"""

from __future__ import annotations

import math

import numpy as np

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def walk1d_evolve(amps: np.ndarray, steps: int) -> None:
    """Advance a line-walk state in place by `steps` applications of
    coin-then-shift.

    amps: (2, L) complex128.  Coin 0 amplitudes move one slot up, coin 1
    one slot down; the caller must pad the array so no amplitude reaches
    the boundary.
    """
    a0 = amps[0]
    a1 = amps[1]
    for _ in range(steps):
        h0 = (a0 + a1) * _INV_SQRT2
        h1 = (a0 - a1) * _INV_SQRT2
        a0 = np.zeros_like(h0)
        a1 = np.zeros_like(h1)
        a0[1:] = h0[:-1]
        a1[:-1] = h1[1:]
    amps[0] = a0
    amps[1] = a1


def walk2d_evolve(amps: np.ndarray, steps: int) -> None:
    """Advance a lattice-walk state in place by `steps` steps.

    amps: (4, Lx, Ly) complex128, coin index c = 2*ix + iy.  The coin is
    the two-qubit Hadamard butterfly; component (ix, iy) then moves by
    (+1, +1), (+1, -1), (-1, +1) or (-1, -1).  Caller pads as in 1D.
    """
    a0, a1, a2, a3 = amps[0], amps[1], amps[2], amps[3]
    for _ in range(steps):
        b0 = (a0 + a1 + a2 + a3) * 0.5
        b1 = (a0 - a1 + a2 - a3) * 0.5
        b2 = (a0 + a1 - a2 - a3) * 0.5
        b3 = (a0 - a1 - a2 + a3) * 0.5
        a0 = np.zeros_like(b0)
        a1 = np.zeros_like(b1)
        a2 = np.zeros_like(b2)
        a3 = np.zeros_like(b3)
        a0[1:, 1:] = b0[:-1, :-1]
        a1[1:, :-1] = b1[:-1, 1:]
        a2[:-1, 1:] = b2[1:, :-1]
        a3[:-1, :-1] = b3[1:, 1:]
    amps[0] = a0
    amps[1] = a1
    amps[2] = a2
    amps[3] = a3


def xor_solution_mask(
    activations: np.ndarray,
    targets: np.ndarray,
    out_b: float,
    w1: np.ndarray,
    w2: np.ndarray,
    margin: float,
) -> np.ndarray:
    """Boolean grid of which output-weight pairs classify every pattern.

    activations: (4, 2) hidden-layer outputs per input pattern, targets:
    (4,) desired outputs, w1/w2: candidate weight values along each grid
    axis.  Returns a uint8 array of shape (len(w1), len(w2)).
    """
    ok = np.ones((w1.size, w2.size), dtype=bool)
    for p in range(targets.size):
        z = (out_b + activations[p, 0] * w1)[:, None] + (activations[p, 1] * w2)[None, :]
        out = 1.0 / (1.0 + np.exp(-z))
        ok &= np.abs(out - targets[p]) < margin
    return ok.astype(np.uint8)
