"""Schur multiplier norms, bounded patterns and their certificates."""

from ._core import (
    SchurnormError,
    bignorm_bounds,
    commutant_norm,
    cyclic_example_norm,
    decompose,
    flat_sign_search,
    hankel_classify,
    johnson_adjacency,
    kneser_eigenvalues,
    kneser_schur_norm,
    lacunary_decompose,
    lower_bound_witness,
    mathias_norm,
    matrix_bound_interval,
    optimal_bound,
    orbit_count,
    schur_norm,
    sign_matrix_norm,
    upper_bound_polar,
    verify_scheme,
)

__all__ = [name for name in dir() if not name.startswith("_")]
