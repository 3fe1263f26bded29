"""Laplace and Jacobi spectra of round and Berger spheres."""

from fractions import Fraction

from . import _bergerspec as _core
from ._bergerspec import (
    PageTranscriptionError,
    StructuralError,
    adjunction_genus,
    berger_spectrum,
    complex_curve_index_nullity,
    cp2_index_nullity,
    cp2_lambda1,
    epsilon_lambda1,
    page_index_nullity,
    page_scalar_curvature,
    page_shifted_lambda1,
    page_transition_roots,
    sphere_multiplicity,
    sphere_spectrum,
    tanno_lambda1,
)

__all__ = [
    "PageTranscriptionError",
    "StructuralError",
    "adjunction_genus",
    "berger_spectrum",
    "branch_crossing",
    "complex_curve_index_nullity",
    "cp2_index_nullity",
    "cp2_lambda1",
    "cp2_lambda1_exact",
    "distinct_spectrum_at",
    "epsilon_lambda1",
    "kth_distinct_piecewise",
    "page_index_nullity",
    "page_scalar_curvature",
    "page_shifted_lambda1",
    "page_transition_roots",
    "sphere_multiplicity",
    "sphere_spectrum",
    "tanno_lambda1",
]


def _arg(value):
    return str(Fraction(value))


def distinct_spectrum_at(x, count):
    """[(coefficient, multiplicity, source)]; eigenvalues of g_B^t are t * coefficient."""
    return [(Fraction(c), m, s) for c, m, s in _core.distinct_spectrum_at(_arg(x), count)]


def branch_crossing(lhs, rhs):
    """x > 0 where A1 + B1 x = A2 + B2 x, or None."""
    out = _core.branch_crossing(_arg(lhs[0]), _arg(lhs[1]), _arg(rhs[0]), _arg(rhs[1]))
    return None if out is None else Fraction(out)


def kth_distinct_piecewise(i, x_max):
    """[(lo, hi, A, B)] partitioning (0, x_max]."""
    return [tuple(Fraction(v) for v in row) for row in _core.kth_distinct_piecewise(i, _arg(x_max))]


def cp2_lambda1_exact(r_squared):
    return Fraction(_core.cp2_lambda1_exact(_arg(r_squared)))
