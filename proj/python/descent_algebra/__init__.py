"""Descent algebra structure constants for S_n and B_n."""

from ._core import (
    UsageError,
    a_constants,
    b_constants,
    b_descent_set,
    c_constants,
    chi,
    comp_of_set,
    compute_table,
    d_table,
    dB_table,
    descent_set,
    domino_function,
    domino_shapes,
    fundamental,
    identities,
    kostka,
    kronecker_g,
    kronecker_gB,
    matrix_count,
    partitions,
    psi,
    schur,
    set_of_comp,
    standard_domino_tableaux,
    triple_a,
    triple_c,
    two_quotient,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
