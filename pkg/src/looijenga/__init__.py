"""Exact log, local, open, BPS and quiver DT invariants of three families of
orbifold Looijenga pairs, and checks of the correspondences between them."""

from .geometry import CurveClass, Family, Kind, boundary_degrees, class_of_winding, winding_of
from .qkernel import QExact, QRatio, eval_at_one, q_binomial, q_num

__all__ = [
    "CurveClass",
    "Family",
    "Kind",
    "QExact",
    "QRatio",
    "boundary_degrees",
    "class_of_winding",
    "eval_at_one",
    "q_binomial",
    "q_num",
    "winding_of",
]
