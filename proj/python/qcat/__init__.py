"""Finite quantale-enriched categories, modules, collages and causal spaces."""

from ._qcat import (
    CarrierError,
    Category,
    CycleError,
    InputError,
    Module,
    Quantale,
    Value,
    adjoin_point,
    canonical_right_adjoint,
    causal_space_from_dag,
    causal_space_from_text,
    cauchy_witness,
    check_adjunction,
    collage,
    column_module,
    completeness_report,
    compose,
    corepresentable,
    default_grid,
    find_representing,
    identity_module,
    is_cauchy,
    longest_path,
    minkowski_interval,
    minkowski_sample,
    mixed_signature_check,
    representable,
    representing_objects,
    restrict,
    row_module,
    run_cli,
    unit_category,
)

__all__ = [name for name in dir() if not name.startswith("_")]
