from .collapse import collapse, collapses_to, is_circle, is_point
from .homology import (
    INTEGERS,
    Z2,
    BettiVector,
    SimplicialComplex,
    homology,
    is_sphere_homology,
    order_complex,
    poset_homology,
)
from .poset import FacePoset, euler_characteristic, labeled_isomorphic

__all__ = [
    "BettiVector",
    "FacePoset",
    "INTEGERS",
    "SimplicialComplex",
    "Z2",
    "collapse",
    "collapses_to",
    "euler_characteristic",
    "homology",
    "is_circle",
    "is_point",
    "is_sphere_homology",
    "labeled_isomorphic",
    "order_complex",
    "poset_homology",
]
