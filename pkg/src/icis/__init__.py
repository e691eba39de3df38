"""Classification of unimodular isolated complete-intersection surface
singularities ⟨f, g⟩ in Q[[x, y, z, w]] via 2-jet primary structure,
Milnor/Tjurina numbers, and blow-up germ lists."""

from .classify import ClassificationResult, classify, random_linear_change
from .catalogue import acceptance_grid, normal_form
from .invariants import invariants_icis, milnor_icis, tjurina_icis
from .types import SingularityType

__all__ = [
    "ClassificationResult", "SingularityType", "acceptance_grid",
    "classify", "invariants_icis", "milnor_icis", "normal_form",
    "random_linear_change", "tjurina_icis",
]
