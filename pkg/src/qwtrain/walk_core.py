"""Discrete-time coined quantum walks on the integer line and square lattice.

States carry dense amplitude arrays whose index range covers the reachable
support; every operation returns a fresh state, so values can be shared
freely across threads.  The per-step inner loops live in the kernel backend
(compiled extension or numpy fallback).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def hadamard_coin() -> np.ndarray:
    """The 2x2 Hadamard coin, (1/sqrt 2) [[1, 1], [1, -1]]."""
    return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) * _INV_SQRT2


def check_unitary(matrix: np.ndarray, tol: float = 1e-12) -> bool:
    """True iff both M M† and M† M are the identity within `tol` (max norm).

    Raises ValueError for non-square input.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    eye = np.eye(m.shape[0])
    return bool(
        np.max(np.abs(m @ m.conj().T - eye)) <= tol
        and np.max(np.abs(m.conj().T @ m - eye)) <= tol
    )


@dataclass(frozen=True, eq=False)
class StateVector1D:
    """Coin ⊗ position amplitudes of a walker on the integer line.

    ``amps[c, i]`` is the amplitude of coin state ``c`` at position
    ``i - offset``; ``time`` counts applied steps.
    """

    amps: np.ndarray  # (2, L) complex128
    offset: int
    time: int

    def amplitude(self, coin: int, position: int) -> complex:
        i = position + self.offset
        if 0 <= i < self.amps.shape[1]:
            return complex(self.amps[coin, i])
        return 0j

    def positions(self) -> np.ndarray:
        """Integer positions covered by the amplitude array."""
        return np.arange(self.amps.shape[1]) - self.offset

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps) ** 2)))


@dataclass(frozen=True, eq=False)
class StateVector2D:
    """Two-coin ⊗ lattice-position amplitudes; coin index c = 2*ix + iy.

    ``amps[c, i, j]`` sits at position ``(i - offset_x, j - offset_y)``.
    """

    amps: np.ndarray  # (4, Lx, Ly) complex128
    offset_x: int
    offset_y: int
    time: int

    def amplitude(self, coin: tuple[int, int], position: tuple[int, int]) -> complex:
        c = 2 * coin[0] + coin[1]
        i = position[0] + self.offset_x
        j = position[1] + self.offset_y
        if 0 <= i < self.amps.shape[1] and 0 <= j < self.amps.shape[2]:
            return complex(self.amps[c, i, j])
        return 0j

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps) ** 2)))


@dataclass(frozen=True, eq=False)
class Distribution:
    """Measurement probabilities keyed by position (int or (x, y) pair)."""

    entries: dict

    def total(self) -> float:
        return float(sum(self.entries.values()))


def symmetric_initial_1d() -> StateVector1D:
    """Walker at the origin with coin (|0> - i|1>)/sqrt(2).

    This coin choice makes the evolved distribution exactly mirror
    symmetric about the origin.
    """
    amps = np.array([[_INV_SQRT2], [-1j * _INV_SQRT2]], dtype=np.complex128)
    return StateVector1D(amps=amps, offset=0, time=0)


def symmetric_initial_2d() -> StateVector2D:
    """Walker at the origin with the symmetric coin in both coin qubits."""
    coin = np.array([_INV_SQRT2, -1j * _INV_SQRT2], dtype=np.complex128)
    amps = np.kron(coin, coin).reshape(4, 1, 1).astype(np.complex128)
    return StateVector2D(amps=amps, offset_x=0, offset_y=0, time=0)


def evolve(state, steps: int):
    """Apply `steps` walk steps to a 1D or 2D state; evolve(s, 0) is s."""
    if steps < 0:
        raise ValueError("step count must be non-negative")
    if steps == 0:
        return state
    if isinstance(state, StateVector1D):
        L = state.amps.shape[1]
        amps = np.zeros((2, L + 2 * steps), dtype=np.complex128)
        amps[:, steps : steps + L] = state.amps
        kernels.walk1d_evolve(amps, steps)
        return StateVector1D(amps=amps, offset=state.offset + steps, time=state.time + steps)
    if isinstance(state, StateVector2D):
        _, Lx, Ly = state.amps.shape
        amps = np.zeros((4, Lx + 2 * steps, Ly + 2 * steps), dtype=np.complex128)
        amps[:, steps : steps + Lx, steps : steps + Ly] = state.amps
        kernels.walk2d_evolve(amps, steps)
        return StateVector2D(
            amps=amps,
            offset_x=state.offset_x + steps,
            offset_y=state.offset_y + steps,
            time=state.time + steps,
        )
    raise TypeError(f"cannot evolve {type(state).__name__}")


def step_1d(state: StateVector1D) -> StateVector1D:
    """One coin-then-shift step: coin 0 moves n -> n+1, coin 1 moves n -> n-1."""
    return evolve(state, 1)


def step_2d(state: StateVector2D) -> StateVector2D:
    """One step of the lattice walk with the two-qubit Hadamard coin."""
    return evolve(state, 1)


def distribution(state) -> Distribution:
    """Born-rule position distribution: sum of |amplitude|² over the coin."""
    if isinstance(state, StateVector1D):
        probs = np.sum(np.abs(state.amps) ** 2, axis=0)
        positions = state.positions()
        return Distribution(
            entries={int(n): float(p) for n, p in zip(positions, probs) if p > 0.0}
        )
    if isinstance(state, StateVector2D):
        probs = np.sum(np.abs(state.amps) ** 2, axis=0)
        xs = np.arange(probs.shape[0]) - state.offset_x
        ys = np.arange(probs.shape[1]) - state.offset_y
        ii, jj = np.nonzero(probs)
        return Distribution(
            entries={
                (int(xs[i]), int(ys[j])): float(probs[i, j]) for i, j in zip(ii, jj)
            }
        )
    raise TypeError(f"cannot take distribution of {type(state).__name__}")


def marginal_x(dist: Distribution) -> Distribution:
    """Collapse a lattice distribution onto its first coordinate."""
    out: dict[int, float] = {}
    for (x, _y), p in dist.entries.items():
        out[x] = out.get(x, 0.0) + p
    return Distribution(entries=out)


def position_stddev(dist: Distribution) -> float:
    """Standard deviation of an integer-position distribution."""
    if not dist.entries:
        raise ValueError("empty distribution")
    positions = np.array(list(dist.entries.keys()), dtype=float)
    probs = np.array(list(dist.entries.values()))
    mean = float(np.sum(positions * probs))
    second = float(np.sum(positions**2 * probs))
    return math.sqrt(max(second - mean * mean, 0.0))


def classical_walk_baseline(steps: int, trials: int, seed: int) -> Distribution:
    """Monte-Carlo distribution of the fair ±1 random walk after `steps` steps.

    Each trial's endpoint is drawn as 2*Binomial(steps, 1/2) - steps, which
    is the exact law of a sum of `steps` independent ±1 increments.
    """
    if steps < 0:
        raise ValueError("step count must be non-negative")
    if trials < 1:
        raise ValueError("at least one trial is required")
    rng = np.random.default_rng(seed)
    if steps == 0:
        return Distribution(entries={0: 1.0})
    positions = 2 * rng.binomial(steps, 0.5, size=trials) - steps
    values, counts = np.unique(positions, return_counts=True)
    return Distribution(
        entries={int(v): float(c) / trials for v, c in zip(values, counts)}
    )


def write_distribution_csv(dist: Distribution, path) -> None:
    """Write `position,probability` (1D keys) or `x,y,probability` (2D keys)."""
    keys = list(dist.entries.keys())
    two_d = bool(keys) and isinstance(keys[0], tuple)
    with open(path, "w", encoding="utf-8") as fh:
        if two_d:
            fh.write("x,y,probability\n")
            for (x, y) in sorted(dist.entries):
                fh.write(f"{x},{y},{dist.entries[(x, y)]:.17g}\n")
        else:
            fh.write("position,probability\n")
            for n in sorted(dist.entries):
                fh.write(f"{n},{dist.entries[n]:.17g}\n")
