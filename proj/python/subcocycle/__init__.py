"""Spectral cocycle analysis of substitutions."""

from ._core import (
    NumericalError,
    ParseError,
    Substitution,
    UndecidedError,
    __version__,
    char_poly,
    classify_number,
    cocycle_matrix,
    compose,
    entrywise_bound,
    evaluate_cocycle,
    example51_bound,
    family_bound_lemma52,
    family_zeta_m,
    family_zeta_n,
    inf_exponent,
    is_irreducible,
    mahler_jensen,
    mahler_quadrature,
    mc_exponent,
    perron_eigenvalue,
    pointwise_exponent,
    rauzy_loop,
    rauzy_move,
    roots,
    verdict,
)

__all__ = [name for name in dir() if not name.startswith("_")]
