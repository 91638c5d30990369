"""Search walk on the complete graph with one self-loop per vertex.

Every vertex is connected to all others and to itself, so each of the N
vertices has N outgoing directed edges.  One step applies the Grover
diffusion coin over each vertex's outgoing edges — negated at marked
vertices — followed by the flip-flop shift that reverses every directed
edge.

That step never mixes amplitude between the four edge classes
(marked/unmarked source × marked/unmarked target) and acts identically on
all edges within a class, so states that are uniform per class stay so.
The production path (`ReducedState`) therefore evolves just four
coefficients, one per class; the `EdgeState` simulator materializes all N²
edge amplitudes and is the validation oracle at small N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .walk_core import check_unitary

#: Edge-class labels: source marked/unmarked (a/b) × target marked/unmarked.
CLASSES = ("aa", "ab", "ba", "bb")


@dataclass(frozen=True)
class GraphParams:
    """Complete-graph search instance: n vertices, k marked, one self-loop."""

    n: int
    k: int
    loops: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 vertices, got n={self.n}")
        if not 1 <= self.k < self.n:
            raise ValueError(f"marked count must satisfy 1 <= k < n, got k={self.k}, n={self.n}")
        if self.loops != 1:
            raise ValueError("only a single self-loop per vertex is supported")


@dataclass(frozen=True, eq=False)
class ReducedState:
    """Four coefficients on the class basis (aa, ab, ba, bb)."""

    amps: np.ndarray  # (4,) complex128
    params: GraphParams
    time: int

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps) ** 2)))


def _class_sizes(n: int, k: int) -> np.ndarray:
    return np.array([k * k, k * (n - k), k * (n - k), (n - k) * (n - k)], dtype=float)


def initial_reduced_state(params: GraphParams) -> ReducedState:
    """Uniform superposition over all n² directed edges, written per class:
    coefficients (k, sqrt(k(n-k)), sqrt(k(n-k)), n-k) / n.
    """
    n, k = params.n, params.k
    amps = np.array(
        [
            k / n,
            math.sqrt(k * (n - k)) / n,
            math.sqrt(k * (n - k)) / n,
            (n - k) / n,
        ],
        dtype=np.complex128,
    )
    return ReducedState(amps=amps, params=params, time=0)


def _coin_on_classes(alpha: np.ndarray, n: int, k: int) -> np.ndarray:
    """Apply the per-vertex coin to per-edge amplitudes that are constant on
    each class.

    At a vertex the Grover diffusion maps the amplitude profile x over its n
    targets to (2*mean(x)) - x; marked vertices apply the negation of that.
    For class-constant profiles the mean depends only on the source class.
    """
    sig_marked = k * alpha[0] + (n - k) * alpha[1]
    sig_unmarked = k * alpha[2] + (n - k) * alpha[3]
    return np.array(
        [
            alpha[0] - 2.0 * sig_marked / n,
            alpha[1] - 2.0 * sig_marked / n,
            2.0 * sig_unmarked / n - alpha[2],
            2.0 * sig_unmarked / n - alpha[3],
        ]
    )


def reduced_step_matrix(params: GraphParams) -> np.ndarray:
    """The 4x4 matrix of one walk step on the class basis.

    Each column is obtained by pushing the corresponding basis state
    through the two stages of the full-space step, using closed-form sums
    over edge classes: the coin stage above, then the flip-flop shift,
    which transposes every edge and therefore swaps the ab and ba classes.
    The result is real and orthogonal.
    """
    n, k = params.n, params.k
    root = np.sqrt(_class_sizes(n, k))
    columns = []
    for j in range(4):
        alpha = np.zeros(4)
        alpha[j] = 1.0 / root[j]  # basis state j as a per-edge amplitude
        after_coin = _coin_on_classes(alpha, n, k)
        after_shift = after_coin[[0, 2, 1, 3]]
        columns.append(after_shift * root)
    return np.stack(columns, axis=1)


def optimal_steps(params: GraphParams) -> int:
    """Walk length that lands on the first success-probability peak.

    The peak sits at pi*sqrt(n)/sqrt(2(2k+l-1)) steps, which is not an
    integer; running the loop up to that bound executes its floor.
    """
    n, k, l = params.n, params.k, params.loops
    bound = math.pi / math.sqrt(2.0 * (2 * k + l - 1)) * math.sqrt(n)
    return int(math.floor(bound))


def evolve_reduced(state: ReducedState, steps: int) -> ReducedState:
    """Apply the reduced step matrix `steps` times."""
    if steps < 0:
        raise ValueError("step count must be non-negative")
    if steps == 0:
        return state
    u = reduced_step_matrix(state.params)
    amps = state.amps.copy()
    for _ in range(steps):
        amps = u @ amps
    return ReducedState(amps=amps, params=state.params, time=state.time + steps)


def success_probability(state: ReducedState) -> float:
    """Probability of measuring a marked-source class (aa or ab)."""
    return float(np.abs(state.amps[0]) ** 2 + np.abs(state.amps[1]) ** 2)


def success_trajectory(params: GraphParams, t_max: int):
    """Per-step class probabilities from the uniform initial state.

    Returns a list of (step, p_aa, p_ab, p_ba, p_bb) rows for steps
    0 .. t_max inclusive.
    """
    if t_max < 0:
        raise ValueError("step count must be non-negative")
    u = reduced_step_matrix(params)
    amps = initial_reduced_state(params).amps
    rows = []
    for step in range(t_max + 1):
        p = np.abs(amps) ** 2
        rows.append((step, float(p[0]), float(p[1]), float(p[2]), float(p[3])))
        if step < t_max:
            amps = u @ amps
    return rows


def write_trajectory_csv(rows, path) -> None:
    """Write trajectory rows as `step,p_aa,p_ab,p_ba,p_bb,p_success`."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("step,p_aa,p_ab,p_ba,p_bb,p_success\n")
        for step, paa, pab, pba, pbb in rows:
            fh.write(
                f"{step},{paa:.17g},{pab:.17g},{pba:.17g},{pbb:.17g},{paa + pab:.17g}\n"
            )


# ---------------------------------------------------------------------------
# Full edge-space simulator (validation oracle for small n)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EdgeState:
    """All n² directed-edge amplitudes; ``amps[v, w]`` sits on edge v→w."""

    amps: np.ndarray  # (n, n) complex128
    marked: np.ndarray  # (n,) bool

    @property
    def n(self) -> int:
        return self.amps.shape[0]

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amps) ** 2)))


def make_marked_mask(n: int, marked_indices) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    for v in marked_indices:
        if not 0 <= v < n:
            raise ValueError(f"marked vertex {v} outside [0, {n})")
        mask[v] = True
    return mask


def initial_edge_state(n: int, marked: np.ndarray) -> EdgeState:
    """Uniform amplitude 1/n on every directed edge (self-loops included)."""
    amps = np.full((n, n), 1.0 / n, dtype=np.complex128)
    return EdgeState(amps=amps, marked=np.asarray(marked, dtype=bool).copy())


def full_space_step(state: EdgeState) -> EdgeState:
    """One walk step on the materialized edge space.

    Rows are per-source coin blocks: unmarked rows get the Grover
    diffusion (2*mean - x), marked rows its negation.  The flip-flop shift
    then transposes the amplitude matrix (self-loops stay put).
    """
    n = state.n
    amps = state.amps
    row_mean = amps.mean(axis=1, keepdims=True)
    coined = 2.0 * row_mean - amps
    coined[state.marked] = amps[state.marked] - 2.0 * row_mean[state.marked]
    return EdgeState(amps=coined.T.copy(), marked=state.marked)


def evolve_full(state: EdgeState, steps: int) -> EdgeState:
    for _ in range(steps):
        state = full_space_step(state)
    return state


def _class_blocks(state: EdgeState):
    m = state.marked
    u = ~m
    a = state.amps
    return (a[np.ix_(m, m)], a[np.ix_(m, u)], a[np.ix_(u, m)], a[np.ix_(u, u)])


def class_probabilities(state: EdgeState) -> np.ndarray:
    """Total probability in each of the four edge classes."""
    return np.array([float(np.sum(np.abs(b) ** 2)) for b in _class_blocks(state)])


def project_to_classes(state: EdgeState) -> np.ndarray:
    """Coefficients of the state on the four class-uniform basis vectors."""
    n = state.n
    k = int(state.marked.sum())
    sums = np.array([b.sum() for b in _class_blocks(state)])
    return sums / np.sqrt(_class_sizes(n, k))


def subspace_residual(state: EdgeState) -> float:
    """Norm of the component outside the span of the four class states.

    Computed by subtracting the projection edge by edge (each class state
    is constant on its class), which avoids cancellation in the norm.
    """
    n = state.n
    k = int(state.marked.sum())
    sizes = _class_sizes(n, k)
    m = state.marked
    u = ~m
    residual = state.amps.copy()
    for block_idx, (rows, cols) in enumerate([(m, m), (m, u), (u, m), (u, u)]):
        block = residual[np.ix_(rows, cols)]
        block -= block.sum() / sizes[block_idx]
        residual[np.ix_(rows, cols)] = block
    return float(np.sqrt(np.sum(np.abs(residual) ** 2)))


def edge_state_from_reduced(state: ReducedState, marked: np.ndarray) -> EdgeState:
    """Materialize a class-basis state on the full edge space."""
    marked = np.asarray(marked, dtype=bool)
    n = state.params.n
    k = int(marked.sum())
    if n != marked.size or k != state.params.k:
        raise ValueError("marked mask does not match the graph parameters")
    per_edge = state.amps / np.sqrt(_class_sizes(n, k))
    amps = np.empty((n, n), dtype=np.complex128)
    m = marked
    u = ~m
    amps[np.ix_(m, m)] = per_edge[0]
    amps[np.ix_(m, u)] = per_edge[1]
    amps[np.ix_(u, m)] = per_edge[2]
    amps[np.ix_(u, u)] = per_edge[3]
    return EdgeState(amps=amps, marked=marked.copy())


def assert_reduced_matrix_valid(params: GraphParams, tol: float = 1e-12) -> None:
    """Sanity check used by callers before trusting the 4x4 path."""
    if not check_unitary(reduced_step_matrix(params), tol):
        raise AssertionError(f"reduced step matrix failed unitarity for {params}")
