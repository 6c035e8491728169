"""Corner-free sets in [N]^2: digit-sphere construction, exact counting,
verification, the classical sphere baseline, and a small exact oracle."""

from ._core import (
    ParseError,
    ResourceError,
    behrend_best,
    behrend_report,
    behrend_set,
    best_r,
    c_empirical,
    c_target,
    choose_params,
    collect_a_r,
    count_by_r,
    density_report,
    find_corner,
    is_3ap_free,
    max_corner_free,
    member,
    window_pair_count,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "ResourceError",
    "behrend_best",
    "behrend_report",
    "behrend_set",
    "best_r",
    "c_empirical",
    "c_target",
    "choose_params",
    "collect_a_r",
    "count_by_r",
    "density_report",
    "find_corner",
    "is_3ap_free",
    "max_corner_free",
    "member",
    "window_pair_count",
]
