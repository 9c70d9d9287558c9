"""Exact convex-geometry toolkit for extended Okounkov bodies on toric
varieties and blow-ups of the projective plane, with the derived
local-positivity invariants (Seshadri, Nakayama, inverted-slice-simplex
constants, slice-volume identities, and arithmetic certificates)."""

from .numbers import RadVal, format_rat, parse_rat
from .polytope import (
    Polytope,
    SliceSpec,
    affine_image,
    cone_base,
    contains,
    hull,
    intersect_subspace,
    inverted_slice_simplex,
    minkowski_sum,
    volume,
)
from .surface import PicClass, SurfaceModel, ZariskiDecomp
from .toric import Fan, ToricDivisor, ToricFlagSpec

__version__ = "0.1.0"

__all__ = [
    "RadVal", "format_rat", "parse_rat",
    "Polytope", "SliceSpec", "hull", "cone_base", "affine_image",
    "minkowski_sum", "contains", "intersect_subspace", "volume",
    "inverted_slice_simplex",
    "Fan", "ToricDivisor", "ToricFlagSpec",
    "PicClass", "SurfaceModel", "ZariskiDecomp",
    "__version__",
]
