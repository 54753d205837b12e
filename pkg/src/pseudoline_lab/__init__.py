"""Exact tools for allowable sequences of permutations and pseudoline
arrangements."""

from .arrangement import credit_report, extension_report, rich_report, stats, vertices
from .constructions import deltoid, deltoid_sequence, single_long_line_sequence
from .seqcore import (
    AllowableSequence,
    Block,
    LocalSequence,
    Move,
    infer_move,
    is_nontrivial,
    is_simple,
    local_sequences,
    parse_sequence,
    random_sequence,
    simple_switch_count,
)
from .sweep import PointSet, circular_sequence, near_pencil, point_stats

__version__ = "0.1.0"
