"""Exact ramification calculus: decomposition, structure and Herbrand functions.

Rationals cross the boundary as :class:`fractions.Fraction`.
"""

from ._core import (
    DomainError,
    Error,
    EndoClassProfile,
    GaloisDecomposition,
    HerbrandBundle,
    InconsistentDataError,
    NotInvertibleError,
    ParseError,
    PLFunction,
    TowerLevel,
    ValidationError,
    agree_from,
    ball_transfer_check,
    boundary_slopes_check,
    certify,
    compose,
    derivative_jumps,
    from_csv,
    herbrand_function,
    interpolate_psi,
    invert,
    minimal_profile,
    plot_svg,
    scale_conj,
    sigma_function,
    structure_function,
    tame_lift_herbrand,
    tame_lift_structure,
    to_csv,
    transfer_radius,
    validate_ultrametric,
)

__all__ = [name for name in dir() if not name.startswith("_")]
