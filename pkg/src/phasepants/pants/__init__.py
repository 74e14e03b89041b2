from .cells import PantsCellLabel, StratumLabel, enumerate_pants_cells
from .facets import TYPE_1, TYPE_2, FacetReport, classify_codim1_pieces, top_piece_type
from .lemma import L_complex, check_complement, star_complement
from .membership import PieceIndex, membership, piece_membership, sample_pair
from .ober import compare_ober_phase, ober_cell_2x2
from .pieces import Piece, PhaseTropical, assemble_phase_tropical, max_piece_dims, pieces_of_cell

__all__ = [
    "L_complex",
    "PantsCellLabel",
    "PhaseTropical",
    "Piece",
    "PieceIndex",
    "StratumLabel",
    "TYPE_1",
    "TYPE_2",
    "FacetReport",
    "assemble_phase_tropical",
    "check_complement",
    "classify_codim1_pieces",
    "compare_ober_phase",
    "enumerate_pants_cells",
    "max_piece_dims",
    "membership",
    "ober_cell_2x2",
    "piece_membership",
    "pieces_of_cell",
    "sample_pair",
    "star_complement",
    "top_piece_type",
]
