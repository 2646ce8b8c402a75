"""Well-formed separator sequences of triangulated disks."""

from .blocks import cycle_pairs, cycle_vertices, extend_block_sequence
from .build import block_threshold, build_wfss, length_bound
from .nice import (
    Base,
    NotTriangular,
    SeparationExhausted,
    base_of,
    initial_separation,
    next_nice_separation,
    sweep,
)
from .regions import blocks_of, count_blocks, largest_inner_block, potential
from .small import SeqClassification, Segment, build_small_sepseq, classify_sequence, length_target
from .types import CYCLE, PATH, NiceSeparation, SeparatorTriple, WfsSequence, order_path, sequence_from_json
from .validate import PROPERTIES, ValidationReport, validate_wfss

__all__ = [
    "Base", "CYCLE", "NiceSeparation", "NotTriangular", "PATH", "PROPERTIES", "SeparationExhausted",
    "SeparatorTriple", "SeqClassification", "Segment", "ValidationReport", "WfsSequence",
    "base_of", "block_threshold", "blocks_of", "build_small_sepseq", "build_wfss", "classify_sequence",
    "count_blocks", "cycle_pairs", "cycle_vertices", "extend_block_sequence", "initial_separation",
    "largest_inner_block", "length_bound", "length_target", "next_nice_separation", "order_path",
    "potential", "sequence_from_json", "sweep", "validate_wfss",
]
