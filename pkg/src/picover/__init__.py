"""Cover (quasiperiod) structures of regular and indeterminate strings.

The package computes prefix tables, cover arrays of regular strings, and
rooted-cover sets of indeterminate strings, all driven by prefix tables;
brute-force oracles recompute everything from the string definitions for
differential testing, and a benchmark harness measures the scans'
instrumented operation counts.  Hot loops run on a compiled extension when
available and fall back to pure Python otherwise.
"""

from ._backend import active_backend, available_backends
from .bench import (
    BenchConfig,
    BenchReport,
    BenchRow,
    SplitMix64,
    emit_csv,
    mix64,
    random_feasible_array,
    run_benchmark,
    string_like_feasible_array,
    trial_rng,
    unary_prefix_table,
)
from .covers import (
    CoverScanStats,
    Range,
    RangeSnapshot,
    cover_array,
    cover_array_instrumented,
    cover_array_oracle,
    cover_array_trace,
    covers_of_prefix,
    ranges,
    ranges_connected,
)
from .prefix import (
    border_array_from_prefix_table,
    prefix_table_indet,
    prefix_table_regular,
    validate_feasible,
    whole_string_borders,
)
from .rooted import (
    RootedTraceRow,
    rooted_cover_check,
    rooted_covers,
    rooted_covers_instrumented,
    rooted_covers_oracle,
    rooted_covers_trace,
    sliding_cover_check,
)
from .strings import (
    IndeterminateString,
    ParseError,
    RegularString,
    parse_indeterminate,
    parse_regular,
    strings_match,
    symbols_match,
)

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "CoverScanStats",
    "IndeterminateString",
    "ParseError",
    "Range",
    "RangeSnapshot",
    "RegularString",
    "RootedTraceRow",
    "SplitMix64",
    "active_backend",
    "available_backends",
    "border_array_from_prefix_table",
    "cover_array",
    "cover_array_instrumented",
    "cover_array_oracle",
    "cover_array_trace",
    "covers_of_prefix",
    "emit_csv",
    "mix64",
    "parse_indeterminate",
    "parse_regular",
    "prefix_table_indet",
    "prefix_table_regular",
    "random_feasible_array",
    "ranges",
    "ranges_connected",
    "rooted_cover_check",
    "rooted_covers",
    "rooted_covers_instrumented",
    "rooted_covers_oracle",
    "rooted_covers_trace",
    "run_benchmark",
    "sliding_cover_check",
    "string_like_feasible_array",
    "strings_match",
    "symbols_match",
    "trial_rng",
    "unary_prefix_table",
    "validate_feasible",
    "whole_string_borders",
]
