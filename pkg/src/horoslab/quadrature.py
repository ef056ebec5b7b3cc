"""Adaptive quadrature wrapper with a hard error contract."""
from __future__ import annotations

import warnings

from scipy import integrate

from .errors import QuadratureError

DEFAULT_TOL = 1e-10
MAX_DEPTH = 40
# QUADPACK bisects the worst interval each step; 40 levels of refinement
# correspond to at most this many subintervals.
MAX_SUBINTERVALS = 400


def integrate_adaptive(f, lo, hi, tol=DEFAULT_TOL, points=None):
    """Integrate ``f`` over [lo, hi] to absolute error ``tol``.

    Raises QuadratureError when QUADPACK reports non-convergence or its
    error estimate exceeds ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if lo == hi:
        return 0.0
    sign = 1.0
    if hi < lo:
        lo, hi, sign = hi, lo, -1.0
    kw = {}
    if points:
        inner = sorted(p for p in points if lo < p < hi)
        if inner:
            kw["points"] = inner
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, info = integrate.quad(f, lo, hi, epsabs=tol, epsrel=0.0,
                                        limit=MAX_SUBINTERVALS, full_output=1, **kw)[:3]
    if err > tol and err > 1e-15 * max(1.0, abs(val)):
        raise QuadratureError(
            f"quadrature on [{lo}, {hi}] did not converge: estimate {err:.3e} > tol {tol:.1e}")
    return sign * val
