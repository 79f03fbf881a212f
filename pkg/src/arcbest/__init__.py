"""Best polynomial G^(n-2) approximants of circular arcs in the Hausdorff sense."""

from .error_analysis import (
    ErrorKind,
    ErrorProfile,
    equioscillation_residual,
    extrema,
    phi,
    psi,
)
from .exceptions import (
    ArcBestError,
    BracketError,
    ConvergenceError,
    DegenerateQuadratic,
    DomainError,
    NoInteriorExtremum,
    NotAlternating,
    NumericalError,
)
from .families import (
    FamilyIntervals,
    QuadraticQ,
    admissible_interval,
    control_points,
    leading_coeff_q,
    q_coeffs,
)
from .geometry import (
    ArcSpec,
    BezierCurve2,
    Point2,
    bernstein,
    eval_curve,
    hausdorff_to_unit_circle_arc,
    make_arc,
    reflect_x,
)
from .solver import (
    SolverConfig,
    SolverResult,
    best_fit,
    brute_force_best,
    solve_parabolic_direct,
    solve_q_root,
)

__version__ = "0.1.0"
