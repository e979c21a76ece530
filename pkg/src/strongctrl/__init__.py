"""Strong structural controllability and observability from nonzero patterns."""

from .analysis import Query, Report, analyze, analyze_controllability, analyze_observability, dualize
from .conditions import (
    Verdict,
    brute_check,
    check,
    check_G1,
    check_G2,
    check_G3,
    check_G4,
    reduce,
    seeded_pick,
    smallest_index,
    violates,
)
from .pattern import (
    Pattern,
    PatternParseError,
    PatternShapeError,
    build_K,
    hstack,
    load_pattern,
    or_add,
    parse_pattern,
    render_pattern,
    transpose,
    with_identity,
)
from .sgraph import SystemGraph, graph_of, post_set, pre_set

__version__ = "0.1.0"
