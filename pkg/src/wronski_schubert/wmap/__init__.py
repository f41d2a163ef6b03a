"""The Wronski map on the projective line: ramification, flags, master function, preimages."""

from .critical import (
    PlaneSearchReport,
    critical_residual,
    find_planes_r1,
    find_planes_r1_report,
    planes_d3_oracle,
)
from .flag import (
    DegreeFormulaWarning,
    FlagData,
    NondegeneracyReport,
    RamificationConfig,
    TPolyData,
    intermediate_wronskians,
    master_function,
    nondegenerate,
    nondegenerate_t,
    reconstruct_basis_series,
    relative_discriminant,
    relative_resultant,
    relative_split,
    span_check,
    t_polys,
    z_polys,
)
from .system import (
    INFINITY,
    LinearSystemP1,
    RamificationDatum,
    RamificationProfile,
    annihilator_residual,
    base_locus,
    format_point,
    order_partition_at,
    parse_point,
    potow_values,
    ramification_profile,
    taylor_tuple,
    wronskian_of_system,
)

__all__ = [
    "INFINITY",
    "DegreeFormulaWarning",
    "FlagData",
    "LinearSystemP1",
    "NondegeneracyReport",
    "PlaneSearchReport",
    "RamificationConfig",
    "RamificationDatum",
    "RamificationProfile",
    "TPolyData",
    "annihilator_residual",
    "base_locus",
    "critical_residual",
    "find_planes_r1",
    "find_planes_r1_report",
    "format_point",
    "intermediate_wronskians",
    "master_function",
    "nondegenerate",
    "nondegenerate_t",
    "order_partition_at",
    "parse_point",
    "planes_d3_oracle",
    "potow_values",
    "ramification_profile",
    "reconstruct_basis_series",
    "relative_discriminant",
    "relative_resultant",
    "relative_split",
    "span_check",
    "t_polys",
    "taylor_tuple",
    "wronskian_of_system",
    "z_polys",
]
