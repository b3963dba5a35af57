from ._core import (
    Error,
    IllegalPole,
    MultiplicativityViolation,
    ParseError,
    canonical_family,
    embed_search,
    fixed_points,
    gluing_ideal,
    glued_pole_bound,
    glues,
    mult_along_C2,
    node_count,
    pole_bound_s2,
    rees_report,
    restrict_cone,
    run_report,
)

__version__ = "0.1.0"
