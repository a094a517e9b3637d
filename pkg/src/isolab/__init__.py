"""Finite-model laboratory for isometries between weighted uniform spaces."""

from isolab.errors import (
    AmbiguityError,
    LabError,
    NormalizationError,
    NotIsometryError,
    SpanError,
    TheoremViolation,
)
from isolab.scalars import GaussianRational, ScalarField
from isolab.space import (
    Family,
    FunctionVec,
    Subspace,
    WeightedSpace,
    delta,
    distinguishes,
    is_boundary,
    norm,
    placed_over,
    sim_equiv,
    suppmax,
)
from isolab.dual import (
    Functional,
    GeneratorSystem,
    dual_norm,
    in_absconv,
    is_extreme,
    sigma_check,
)
from isolab.choquet import boundary_meets_suppmax, ch_contains, choquet_report, m_set, prop63_set
from isolab.isometry import (
    CompositionForm,
    LinearMap,
    compose_forms,
    decompose,
    invert_form,
    property_alpha_beta,
    verify_into_isometry,
    verify_onto_isometry,
    weighted_composition_operator,
)

__all__ = [
    "AmbiguityError",
    "CompositionForm",
    "Family",
    "Functional",
    "FunctionVec",
    "GaussianRational",
    "GeneratorSystem",
    "LabError",
    "LinearMap",
    "NormalizationError",
    "NotIsometryError",
    "ScalarField",
    "SpanError",
    "Subspace",
    "TheoremViolation",
    "WeightedSpace",
    "boundary_meets_suppmax",
    "ch_contains",
    "choquet_report",
    "compose_forms",
    "decompose",
    "delta",
    "distinguishes",
    "dual_norm",
    "in_absconv",
    "invert_form",
    "is_boundary",
    "is_extreme",
    "m_set",
    "norm",
    "placed_over",
    "prop63_set",
    "property_alpha_beta",
    "sigma_check",
    "sim_equiv",
    "suppmax",
    "verify_into_isometry",
    "verify_onto_isometry",
    "weighted_composition_operator",
]
