"""Exact Castelnuovo-Mumford regularity bounds from Hilbert polynomials."""

from .bounds import (
    BoundReport,
    bound_table,
    closed_form_bound,
    comparison_bounds,
    cubic_adjustment,
    machinery_bound,
    theorem_a_bound,
)
from .catalog import CATALOG, load_spec
from .ck import CkProfile, RankTable, rank_entry, rank_table, verify_coeff_identity
from .hilbert import HilbertPoly, gen_binom, hp_eval, hp_from_values, hp_hyperplane_section
from .poly import RationalPoly
from .projection import (
    GuaranteeStatus,
    VarietySpec,
    curve,
    m_zero,
    projection_status,
    pushforward_chi,
    scroll,
    surface,
    table_relation_check,
)
from .splitting import (
    SplittingType,
    component_range,
    enumerate_splittings,
    max_secant_length,
    secant_splitting,
)

__version__ = "0.1.0"
