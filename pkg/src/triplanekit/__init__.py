"""triplanekit: Fox 3-colored tri-plane diagrams in plat form.

Exact combinatorics for three-tangle diagrams of (possibly singular) surfaces
in the 4-sphere and the invariants of the irregular 3-fold dihedral covers
they encode: coloring counts, trisection parameters, Euler characteristics,
branch-surface data, plus a coloring-preserving rewriting engine with
replayable unlink certificates.
"""

from ._kernel import BACKEND as kernel_backend
from .model import (
    BraidWord,
    Coloring,
    Matching,
    PatchKind,
    Perm3,
    Tangle,
    TriPlaneDiagram,
    TriState,
    TrisectionParams,
    as_transposition,
    compose,
    induced_matching,
    standard_matching,
)

__all__ = [
    "BraidWord",
    "Coloring",
    "Matching",
    "PatchKind",
    "Perm3",
    "Tangle",
    "TriPlaneDiagram",
    "TriState",
    "TrisectionParams",
    "as_transposition",
    "compose",
    "induced_matching",
    "standard_matching",
    "kernel_backend",
]

__version__ = "0.1.0"
