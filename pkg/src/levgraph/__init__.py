"""Levenshtein graphs: edit-distance kernels, resolving sets and symmetries."""

from .distance import (
    TwoRunPattern,
    dist_one_run,
    dist_to_run_pattern,
    dist_two_run_linear,
    dist_two_run_minform,
    edit_distance,
    edit_distance_banded,
    edit_distance_dp,
    edit_distance_table,
    hamming_distance,
)
from .errors import ResourceLimitError
from .graph import (
    LevGraph,
    build_graph,
    degree_formula,
    diameter,
    geodesic_bfs,
    geodesic_closed_form,
)
from .resolving import (
    ResolvingSet,
    build_Rka,
    build_resolving_set,
    check_dimension_bounds,
    embed,
    exact_metric_dimension,
    is_resolving,
    shift_chars,
)
from .strings import (
    Alphabet,
    GraphSpec,
    count_symbol,
    enumerate_strings,
    format_string,
    parse_string,
    prefix,
    rank,
    run_count,
    suffix,
    unrank,
)
from .symmetry import (
    Automorphism,
    apply_automorphism,
    build_determining_set,
    construct_theorem_group,
    enumerate_automorphisms,
    exact_determining_number,
    is_determining,
    match_groups,
)

__version__ = "0.1.0"
