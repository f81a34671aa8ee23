"""Refined BPS invariants of K3 surfaces.

Spin tables are dicts keyed by ``(2*j_L, 2*j_R)``; Laurent polynomials are
dicts keyed by ``(e_u, e_y)``. Coefficients are ``int`` or
``fractions.Fraction``.
"""

from ._k3bps import (
    DomainError,
    Falsification,
    WindowError,
    conjecture_c,
    conjecture_d,
    decompose,
    elliptic_k3,
    kkv,
    kkv_direct,
    ky_check,
    moonshine,
    refined_tables,
    spin_table_string,
    stu_betti,
    stu_nl_series,
    unrefine,
)

__all__ = [
    "DomainError",
    "Falsification",
    "WindowError",
    "conjecture_c",
    "conjecture_d",
    "decompose",
    "elliptic_k3",
    "kkv",
    "kkv_direct",
    "ky_check",
    "moonshine",
    "refined_tables",
    "spin_table_string",
    "stu_betti",
    "stu_nl_series",
    "unrefine",
]
