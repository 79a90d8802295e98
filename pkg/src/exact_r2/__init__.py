"""Exact and discretized R2 indicators and 2-D hypervolume for bi-objective fronts."""

from exact_r2 import _backend
from exact_r2.core import (
    DegenerateInputError,
    DomainError,
    EmptyInputError,
    ExactR2Error,
    ObjectiveVector,
    WeightVector,
    shift_points,
    shift_to_utopian,
)
from exact_r2.hypervolume import hv2d
from exact_r2.pareto import Dominance, Front, dominates, nondominated_filter
from exact_r2.r2_discrete import WeightSet, r2_discrete, tchebycheff_utility, uniform_weights
from exact_r2.r2_exact import (
    PointContribution,
    WeightInterval,
    balance_weight,
    contribution_table,
    exclusive_contribution,
    point_partial,
    r2_exact,
    r2_exact_archive,
    r2_single,
    separating_weight,
)
from exact_r2.reference import (
    FrontShape,
    QuadratureResult,
    analytic_r2,
    generate_cloud,
    generate_front,
    quadrature_r2,
)

BACKEND = _backend.kernels.NAME

__version__ = "0.1.0"
