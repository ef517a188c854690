"""Distinct power factors, Rauzy-graph circuits and extremal words.

Words are plain strings over [0-9a-zA-Z] ('0' is symbol 0, '1' symbol 1,
...); all heavy lifting happens in the compiled extension.
"""

from ._core import (
    ClassRecord,
    FalsificationError,
    FamilyReport,
    InjectionEntry,
    PowerFactor,
    PowersMaxResult,
    RauzyGraph,
    SearchResult,
    SmallCircuit,
    __version__,
    canonical_rotation,
    classes,
    count,
    exhaustive_max,
    exhaustive_powers_max,
    gen_fraenkel_simpson,
    gen_q,
    gen_r,
    injection,
    is_primitive,
    max_exponent,
    powers,
    primitive_root,
    rational_power,
    rauzy,
    rauzy_dot,
    small_circuits,
    small_circuits_structural,
    verify_family,
)

__all__ = [
    "ClassRecord",
    "FalsificationError",
    "FamilyReport",
    "InjectionEntry",
    "PowerFactor",
    "PowersMaxResult",
    "RauzyGraph",
    "SearchResult",
    "SmallCircuit",
    "__version__",
    "canonical_rotation",
    "classes",
    "count",
    "exhaustive_max",
    "exhaustive_powers_max",
    "gen_fraenkel_simpson",
    "gen_q",
    "gen_r",
    "injection",
    "is_primitive",
    "max_exponent",
    "powers",
    "primitive_root",
    "rational_power",
    "rauzy",
    "rauzy_dot",
    "small_circuits",
    "small_circuits_structural",
    "verify_family",
]
