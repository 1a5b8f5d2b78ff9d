"""Yagi-Uda design, thin-wire moment-method simulation, gamma-match synthesis
and jamming-coverage analysis."""

__version__ = "0.1.0"

from .analysis import (
    BandwidthReport,
    PatternStats,
    PatternUnit,
    RadiationPatternData,
    RangeEstimate,
    RangeModel,
    ReflectionReport,
    analysis_report,
    bandwidth,
    build_pattern,
    default_range_model,
    jamming_range,
    pattern_stats,
    range_ratio,
    reflection_coefficient,
    reflection_report,
    return_loss_db,
    vswr,
)
from .em_solver import (
    CurrentSolution,
    FarField,
    ImpedanceResult,
    WireGrid,
    dipole_grid,
    far_field,
    frequency_sweep,
    impedance_matrix,
    input_impedance,
    segment,
    solve_grid,
)
from .errors import (
    DiscretizationError,
    DomainError,
    GeometryError,
    ParseError,
    SolverError,
    YagilabError,
)
from .geometry import (
    DesignRule,
    ElementRole,
    ElementSpec,
    FrequencyPlan,
    YagiDesign,
    build_design,
    load_design,
    save_design,
    wavelength,
)
from .matching import (
    GammaMatchGeometry,
    GammaSolution,
    gamma_chain,
    gamma_input_impedance,
    tune_gamma,
)

__all__ = [
    "__version__",
    "BandwidthReport",
    "PatternStats",
    "PatternUnit",
    "RadiationPatternData",
    "RangeEstimate",
    "RangeModel",
    "ReflectionReport",
    "analysis_report",
    "bandwidth",
    "build_pattern",
    "default_range_model",
    "jamming_range",
    "pattern_stats",
    "range_ratio",
    "reflection_coefficient",
    "reflection_report",
    "return_loss_db",
    "vswr",
    "CurrentSolution",
    "FarField",
    "ImpedanceResult",
    "WireGrid",
    "dipole_grid",
    "far_field",
    "frequency_sweep",
    "impedance_matrix",
    "input_impedance",
    "segment",
    "solve_grid",
    "DiscretizationError",
    "DomainError",
    "GeometryError",
    "ParseError",
    "SolverError",
    "YagilabError",
    "DesignRule",
    "ElementRole",
    "ElementSpec",
    "FrequencyPlan",
    "YagiDesign",
    "build_design",
    "load_design",
    "save_design",
    "wavelength",
    "GammaMatchGeometry",
    "GammaSolution",
    "gamma_chain",
    "gamma_input_impedance",
    "tune_gamma",
]
