"""Square-tiled surfaces, the quaternion origami W and its algebraic models."""

from .core import (
    Origami, Quat, canonical_form, genus, horizontal_cylinders, is_isomorphic, make_origami,
    quaternion_origami, singularity_profile, stratum, torus_grid, vertical_cylinders,
)
from .veech import SL2Word, act, cusp_count, veech_group, veech_index

__version__ = "0.1.0"

__all__ = [
    "Origami", "Quat", "SL2Word", "act", "canonical_form", "cusp_count", "genus",
    "horizontal_cylinders", "is_isomorphic", "make_origami", "quaternion_origami",
    "singularity_profile", "stratum", "torus_grid", "veech_group", "veech_index",
    "vertical_cylinders",
]
