"""Training a small XOR network by walk search on a complete graph.

Subpackages by concern: `walk_core` (line/lattice coined walks),
`lackadaisical` (the complete-graph search walk, reduced and full-space),
`mlp` (the 2-2-1 network), `search_space` (grid/weight mapping and marked
counting), `sampling` (measurement simulation), `trainer` (the end-to-end
procedure), `cli` (command line).
"""

from ._backend import BACKEND

__all__ = ["BACKEND", "__version__"]
__version__ = "0.1.0"
