"""Serializable fit reports and the number formats used by the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .families import control_points
from .solver import SolverResult

REPORT_FIELDS = (
    "degree",
    "half_angle_rad",
    "error_kind",
    "d_star",
    "tau_star",
    "max_error",
    "extrema",
    "control_points",
    "residual",
    "iterations",
)


@dataclass(frozen=True)
class FitReport:
    degree: int
    half_angle_rad: float
    error_kind: str
    d_star: float
    tau_star: float
    max_error: float
    extrema: list
    control_points: list
    residual: float
    iterations: int

    @classmethod
    def from_result(cls, result: SolverResult) -> "FitReport":
        curve = control_points(result.degree, result.arc, result.d_star)
        return cls(
            degree=result.degree,
            half_angle_rad=result.arc.half_angle,
            error_kind=result.error_kind.value,
            d_star=result.d_star,
            tau_star=result.tau_star,
            max_error=result.profile.max_abs,
            extrema=[[t, v] for t, v in result.profile.points()],
            control_points=[[p.x, p.y] for p in curve.control_points],
            residual=result.residual,
            iterations=result.outer_iterations,
        )

    def to_json(self) -> str:
        # float repr is the shortest string that round-trips (at most 17 digits).
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "FitReport":
        data = json.loads(text)
        names = {f.name for f in fields(cls)}
        if set(data) != names:
            raise ValueError(f"fit report fields {sorted(data)} do not match {sorted(names)}")
        return cls(**data)


def fmt_fixed(x: float) -> str:
    """Six significant digits, plain notation where it fits."""
    return f"{x:.6g}"


def fmt_sci(x: float) -> str:
    """Six significant digits in the compact form ``1.07676e-1``."""
    mantissa, exponent = f"{x:.5e}".split("e")
    return f"{mantissa}e{int(exponent)}"
