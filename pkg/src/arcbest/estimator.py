"""scikit-learn style front end for the best-fit solver."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted, check_scalar

from .error_analysis import ErrorKind, radial_from_simplified
from .exceptions import DomainError
from .families import DEGREES, control_points
from .geometry import make_arc, sample_curve
from .solver import SolverConfig, best_fit


class ArcApproximant(BaseEstimator):
    """Best polynomial G^(degree-2) approximant of a unit circular arc.

    Parameters
    ----------
    degree : int, default=2
        Polynomial degree, one of 2, 3, 4, 5.
    error : {"radial", "simplified"}, default="radial"
        Error that is minimised. The radial error induces the Hausdorff
        distance to the arc.
    epsilon : float, default=1e-12
        Tolerance on the imbalance of the alternating extrema.
    inner_tol : float, default=1e-14
        Relative tolerance of the inner parameter root search.
    max_outer, max_inner : int, default=200
        Iteration caps of the outer and inner bisections.

    Attributes
    ----------
    arc_ : ArcSpec
    result_ : SolverResult
    d_ : float
        Optimal family parameter.
    curve_ : BezierCurve2
    max_error_ : float
        Largest absolute error of the fitted curve under ``error``.

    Examples
    --------
    >>> import math
    >>> est = ArcApproximant(degree=2).fit(math.pi / 2)
    >>> round(est.d_, 5)
    2.21535
    """

    def __init__(self, degree=2, error="radial", epsilon=1e-12, inner_tol=1e-14, max_outer=200, max_inner=200):
        self.degree = degree
        self.error = error
        self.epsilon = epsilon
        self.inner_tol = inner_tol
        self.max_outer = max_outer
        self.max_inner = max_inner

    def _validate_params(self):
        if self.degree not in DEGREES:
            raise DomainError(f"degree must be one of {DEGREES}, got {self.degree!r}")
        check_scalar(self.epsilon, "epsilon", numbers.Real, min_val=0, include_boundaries="neither")
        check_scalar(self.inner_tol, "inner_tol", numbers.Real, min_val=0, include_boundaries="neither")
        check_scalar(self.max_outer, "max_outer", numbers.Integral, min_val=50)
        check_scalar(self.max_inner, "max_inner", numbers.Integral, min_val=50)
        return ErrorKind(self.error)

    def fit(self, X, y=None):
        """Fit to the arc with half-angle ``X`` (radians, a single number)."""
        kind = self._validate_params()
        values = np.asarray(X, dtype=float).ravel()
        if values.size != 1:
            raise ValueError(f"expected a single half-angle, got {values.size} values")
        self.arc_ = make_arc(values[0])
        cfg = SolverConfig(self.epsilon, self.inner_tol, self.max_outer, self.max_inner)
        self.result_ = best_fit(self.degree, self.arc_, kind, cfg)
        self.d_ = self.result_.d_star
        self.tau_ = self.result_.tau_star
        self.curve_ = control_points(self.degree, self.arc_, self.d_)
        self.max_error_ = self.result_.profile.max_abs
        return self

    def _parameters(self, X):
        ts = check_array(X, ensure_2d=False, dtype=float).ravel()
        if np.any(np.abs(ts) > 1.0):
            raise DomainError("curve parameters must lie in [-1, 1]")
        return ts

    def predict(self, X):
        """Points of the fitted curve at parameters ``X``, shape ``(n, 2)``."""
        check_is_fitted(self, "curve_")
        return sample_curve(self.curve_, self._parameters(X))

    def transform(self, X):
        """Radial and simplified errors at parameters ``X``, shape ``(n, 2)``."""
        pts = self.predict(X)
        simplified = np.einsum("ij,ij->i", pts, pts) - 1.0
        return np.column_stack([radial_from_simplified(simplified), simplified])

    def score(self, X=None, y=None):
        """Negated maximal error, so that larger is better."""
        check_is_fitted(self, "result_")
        return -self.max_error_
