"""Numerical ranges, joint numerical ranges and joint numerical shadows."""

from ._jnrange import (
    Channel,
    DimensionError,
    DomainError,
    HypothesisError,
    NumericalError,
    ParseError,
    ball_shadow_check,
    eigh,
    ellipse_2x2,
    factorize,
    gellmann_basis,
    haar_state,
    histogram,
    jnr_map,
    jnr_sample,
    jnr_support,
    moments,
    numerical_range,
    pauli_basis,
    pauli_extended,
    random_unital_channel,
    run_demo,
    support_value,
    traceless_basis,
    verify_affine_injectivity,
    verify_inclusion,
    verify_inclusion_tuple,
)

__all__ = [name for name in dir() if not name.startswith("_")]
