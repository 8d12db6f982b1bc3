"""Lexicographic earliest/latest source-sink paths in binary-state networks.

Arc ``i`` (1-based) of a network is weighted ``2**(i-1)`` (earliest) or
``2**(m-i)`` (latest) and Dijkstra runs over exact integer distances.  The
package also enumerates state vectors in BAT order and ships brute-force
oracles that audit the region claims built on top of the two paths.
"""

from lexpath.bat import (
    bat_enumerate,
    bat_next,
    find_xfc_correct,
    find_xfc_paper,
)
from lexpath.binweight import (
    EARLIEST,
    INFINITY,
    LATEST,
    LexWeight,
    WeightScheme,
    bat_precedes,
    lex_add,
    lex_cmp,
    vector_value,
    weight_of_arc,
)
from lexpath.graph import (
    Arc,
    Network,
    NetworkError,
    StateVector,
    format_network,
    is_st_connected,
    parse_network,
    read_network,
    validate_network,
)
from lexpath.oracle import (
    RegionReport,
    ReliabilityResult,
    enumerate_simple_paths,
    last_disconnected_greedy,
    oracle_extreme_path,
    oracle_first_connected,
    oracle_last_disconnected,
    region_census,
    reliability_exact,
)
from lexpath.pathfind import PathResult, binary_dijkstra, earliest_path, latest_path

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "EARLIEST",
    "INFINITY",
    "LATEST",
    "LexWeight",
    "Network",
    "NetworkError",
    "PathResult",
    "RegionReport",
    "ReliabilityResult",
    "StateVector",
    "WeightScheme",
    "bat_enumerate",
    "bat_next",
    "bat_precedes",
    "binary_dijkstra",
    "earliest_path",
    "enumerate_simple_paths",
    "find_xfc_correct",
    "find_xfc_paper",
    "format_network",
    "is_st_connected",
    "last_disconnected_greedy",
    "latest_path",
    "lex_add",
    "lex_cmp",
    "oracle_extreme_path",
    "oracle_first_connected",
    "oracle_last_disconnected",
    "parse_network",
    "read_network",
    "region_census",
    "reliability_exact",
    "validate_network",
    "vector_value",
    "weight_of_arc",
]
