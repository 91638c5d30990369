"""Mapping between graph vertices, grid positions, and weight pairs.

A window is a centered integer grid; each grid point is one vertex of the
complete search graph and induces the output-weight pair (dp*x, dp*y).
Counting the marked vertices is done by exhaustive evaluation of the
solution predicate over the whole grid (the classical stand-in for a
counting subroutine), with the scan running in the kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .mlp import XOR_TARGETS, FixedWeights, pattern_activations


@dataclass(frozen=True)
class Window:
    """Centered grid of width x height candidate points with scale dp.

    For an even extent W the coordinate range is [-W/2, W/2 - 1], so the
    grid holds exactly W integers per axis.
    """

    width: int
    height: int
    dp: float

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("window extents must be positive")
        if not self.dp > 0.0:
            raise ValueError("dp must be positive")

    @property
    def n(self) -> int:
        """Vertex count of the induced complete graph."""
        return self.width * self.height

    def x_values(self) -> np.ndarray:
        lo = -(self.width // 2)
        return np.arange(lo, lo + self.width)

    def y_values(self) -> np.ndarray:
        lo = -(self.height // 2)
        return np.arange(lo, lo + self.height)

    def contains(self, label: tuple[int, int]) -> bool:
        x, y = label
        xlo = -(self.width // 2)
        ylo = -(self.height // 2)
        return xlo <= x < xlo + self.width and ylo <= y < ylo + self.height


def square_window(extent: int, dp: float) -> Window:
    return Window(width=extent, height=extent, dp=dp)


@dataclass(frozen=True, eq=False)
class MarkedSet:
    """The grid positions whose induced weights solve the task."""

    positions: tuple[tuple[int, int], ...]
    _members: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.positions))

    @property
    def k(self) -> int:
        return len(self.positions)

    def __contains__(self, label: tuple[int, int]) -> bool:
        return label in self._members


def vertex_to_weights(window: Window, label: tuple[int, int]) -> tuple[float, float]:
    """Weight pair (dp*x, dp*y) for a grid label inside the window."""
    if not window.contains(label):
        raise ValueError(f"label {label} outside window {window.width}x{window.height}")
    return (window.dp * label[0], window.dp * label[1])


def label_to_index(window: Window, label: tuple[int, int]) -> int:
    """Row-major vertex index of a grid label; inverse of `index_to_label`."""
    if not window.contains(label):
        raise ValueError(f"label {label} outside window {window.width}x{window.height}")
    x, y = label
    return (x + window.width // 2) * window.height + (y + window.height // 2)


def index_to_label(window: Window, index: int) -> tuple[int, int]:
    if not 0 <= index < window.n:
        raise ValueError(f"vertex index {index} outside [0, {window.n})")
    i, j = divmod(index, window.height)
    return (i - window.width // 2, j - window.height // 2)


def solution_mask(window: Window, fixed: FixedWeights, margin: float) -> np.ndarray:
    """uint8 grid over (x, y) marking labels whose weights solve the task."""
    activations = np.ascontiguousarray(pattern_activations(fixed), dtype=float)
    targets = np.array(XOR_TARGETS)
    w1 = window.dp * window.x_values().astype(float)
    w2 = window.dp * window.y_values().astype(float)
    return kernels.xor_solution_mask(
        activations, targets, float(fixed.out_b), w1, w2, float(margin)
    )


def enumerate_marked(window: Window, fixed: FixedWeights, margin: float) -> MarkedSet:
    """Exhaustively scan the window and return all marked labels, sorted."""
    mask = solution_mask(window, fixed, margin)
    xs = window.x_values()
    ys = window.y_values()
    ii, jj = np.nonzero(mask)
    positions = tuple(
        sorted((int(xs[i]), int(ys[j])) for i, j in zip(ii, jj))
    )
    return MarkedSet(positions=positions)


def solution_count_table(
    extents, dps, fixed: FixedWeights, margin: float
) -> list[tuple[float, int, int]]:
    """Marked-vertex counts for every (dp, square window extent) cell."""
    rows = []
    for dp in dps:
        for extent in extents:
            window = square_window(extent, dp)
            rows.append((float(dp), int(extent), enumerate_marked(window, fixed, margin).k))
    return rows


def write_marked_csv(marked: MarkedSet, path) -> None:
    """Write the marked labels as `x,y`, sorted lexicographically."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,y\n")
        for x, y in marked.positions:
            fh.write(f"{x},{y}\n")


def write_counts_csv(rows, path) -> None:
    """Write count-table rows as `dp,window,count`."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("dp,window,count\n")
        for dp, extent, count in rows:
            fh.write(f"{dp:.17g},{extent},{count}\n")
