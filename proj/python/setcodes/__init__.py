"""Error-correcting codes over unordered sets of fixed-length sequences.

Thin Python surface over the C++ core: construction handles (c1..c7),
single-sequence error balls and spheres, the (s, t, eps)_T set channel,
brute-force code certification, and GV / sphere-packing bound reports.
"""

from ._setcodes import (
    UNBOUNDED_EPS,
    Construction,
    EnumCapExceeded,
    bounds_json,
    enumerate_ball,
    enumerate_sphere,
    gv_arbitrary,
    gv_sub,
    indexing_redundancy,
    is_correcting_code,
    make_construction,
    sample_channel,
    simulate_json,
    sp_arbitrary,
    table2_text,
)

__all__ = [
    "UNBOUNDED_EPS",
    "Construction",
    "EnumCapExceeded",
    "bounds_json",
    "enumerate_ball",
    "enumerate_sphere",
    "gv_arbitrary",
    "gv_sub",
    "indexing_redundancy",
    "is_correcting_code",
    "make_construction",
    "sample_channel",
    "simulate_json",
    "sp_arbitrary",
    "table2_text",
]
