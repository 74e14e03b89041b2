"""Exact cell structures of complex and phase-tropical pairs-of-pants."""

from .errors import InvariantViolation, ResourceLimitError
from .partitions import CyclicPartition, divides, enumerate_cyclic_partitions, is_coarsening
from .chords import (
    AnglePoint,
    Net,
    alcove_contains,
    alcove_dim,
    alcove_relations,
    classify_point,
    enumerate_nets,
    is_net,
    net_face,
)
from .complex import BettiVector, FacePoset, collapse, homology, is_circle, order_complex
from .pants import (
    L_complex,
    Piece,
    assemble_phase_tropical,
    classify_codim1_pieces,
    enumerate_pants_cells,
    membership,
    ober_cell_2x2,
    pieces_of_cell,
    star_complement,
)
from .simplex import RationalPoint

__version__ = "0.1.0"

__all__ = [
    "AnglePoint",
    "BettiVector",
    "FacePoset",
    "L_complex",
    "Piece",
    "RationalPoint",
    "assemble_phase_tropical",
    "classify_codim1_pieces",
    "collapse",
    "enumerate_pants_cells",
    "homology",
    "is_circle",
    "membership",
    "ober_cell_2x2",
    "order_complex",
    "pieces_of_cell",
    "star_complement",
    "CyclicPartition",
    "InvariantViolation",
    "Net",
    "ResourceLimitError",
    "alcove_contains",
    "alcove_dim",
    "alcove_relations",
    "classify_point",
    "divides",
    "enumerate_cyclic_partitions",
    "enumerate_nets",
    "is_coarsening",
    "is_net",
    "net_face",
]
