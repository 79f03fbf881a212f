"""Canonical unit arc, Bernstein basis over [-1, 1] and planar Bezier curves.

Every arc handled here is the unit arc centred at the origin and symmetric
about the x axis, running from angle ``-half_angle`` to ``+half_angle``.
Callers with a general arc apply the rigid motion themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .exceptions import DomainError

MIN_HALF_ANGLE = 1e-6


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class ArcSpec:
    """Unit arc with half-angle ``half_angle``; ``c``/``s`` are its cos/sin."""

    half_angle: float
    c: float
    s: float

    @property
    def start(self) -> Point2:
        return Point2(self.c, -self.s)

    @property
    def end(self) -> Point2:
        return Point2(self.c, self.s)


@dataclass(frozen=True)
class BezierCurve2:
    """Planar polynomial curve in Bernstein form over [-1, 1]."""

    control_points: tuple[Point2, ...]

    def __post_init__(self):
        pts = tuple(Point2(float(x), float(y)) for x, y in self.control_points)
        if len(pts) < 2:
            raise DomainError("a curve needs at least two control points")
        object.__setattr__(self, "control_points", pts)

    @property
    def degree(self) -> int:
        return len(self.control_points) - 1

    def as_array(self) -> np.ndarray:
        return np.array(self.control_points, dtype=float)


def make_arc(half_angle: float) -> ArcSpec:
    half_angle = float(half_angle)
    if not (MIN_HALF_ANGLE <= half_angle <= math.pi / 2):
        raise DomainError(
            f"half_angle must lie in [{MIN_HALF_ANGLE:g}, pi/2], got {half_angle!r}"
        )
    if half_angle == math.pi / 2:
        # cos(pi/2) rounds to 6e-17; the canonical semicircle has c == 0 exactly.
        return ArcSpec(half_angle, 0.0, 1.0)
    return ArcSpec(half_angle, math.cos(half_angle), math.sin(half_angle))


def bernstein(n: int, j: int, t: float) -> float:
    """Bernstein polynomial ``B_j^n`` reparameterized to [-1, 1]."""
    if j < 0 or j > n:
        raise IndexError(f"basis index {j} out of range for degree {n}")
    u = (1.0 + t) / 2.0
    return math.comb(n, j) * u**j * (1.0 - u) ** (n - j)


def bernstein_matrix(n: int, ts) -> np.ndarray:
    """Rows are the ``n + 1`` basis values at each parameter in ``ts``."""
    ts = np.asarray(ts, dtype=float)
    u = (1.0 + ts) / 2.0
    v = (1.0 - ts) / 2.0
    j = np.arange(n + 1)
    binom = np.array([math.comb(n, k) for k in j], dtype=float)
    return binom * u[:, None] ** j * v[:, None] ** (n - j)


def eval_curve(curve: BezierCurve2, t: float) -> Point2:
    """De Casteljau evaluation; exact at the endpoints ``t = -1`` and ``t = 1``."""
    u = (1.0 + t) / 2.0
    w = 1.0 - u
    xs = [p.x for p in curve.control_points]
    ys = [p.y for p in curve.control_points]
    for r in range(curve.degree, 0, -1):
        for i in range(r):
            xs[i] = w * xs[i] + u * xs[i + 1]
            ys[i] = w * ys[i] + u * ys[i + 1]
    return Point2(xs[0], ys[0])


def sample_curve(curve: BezierCurve2, ts) -> np.ndarray:
    """Vectorised de Casteljau; returns an ``(len(ts), 2)`` array."""
    ts = np.asarray(ts, dtype=float)
    u = ((1.0 + ts) / 2.0)[:, None]
    w = 1.0 - u
    pts = np.broadcast_to(curve.as_array(), (len(ts), curve.degree + 1, 2)).copy()
    for r in range(curve.degree, 0, -1):
        pts[:, :r] = w[:, None] * pts[:, :r] + u[:, None] * pts[:, 1 : r + 1]
    return pts[:, 0]


def reflect_x(p: Sequence[float]) -> Point2:
    """Mirror a point in the first coordinate axis."""
    return Point2(p[0], -p[1])


def distance_to_arc(points: np.ndarray, arc: ArcSpec) -> np.ndarray:
    """Exact Euclidean distance from each point to the arc."""
    points = np.atleast_2d(points)
    r = np.hypot(points[:, 0], points[:, 1])
    ang = np.arctan2(points[:, 1], points[:, 0])
    radial = np.abs(r - 1.0)
    to_start = np.hypot(points[:, 0] - arc.c, points[:, 1] + arc.s)
    to_end = np.hypot(points[:, 0] - arc.c, points[:, 1] - arc.s)
    inside = np.abs(ang) <= arc.half_angle
    return np.where(inside, radial, np.minimum(to_start, to_end))


def _distance_to_polyline(queries: np.ndarray, verts: np.ndarray) -> np.ndarray:
    # Nearest vertex via KD-tree, then the two segments meeting at it.
    _, idx = cKDTree(verts).query(queries)
    best = np.full(len(queries), np.inf)
    for lo in (idx - 1, idx):
        lo = np.clip(lo, 0, len(verts) - 2)
        a = verts[lo]
        ab = verts[lo + 1] - a
        denom = np.einsum("ij,ij->i", ab, ab)
        lam = np.einsum("ij,ij->i", queries - a, ab) / np.where(denom > 0, denom, 1.0)
        foot = a + np.clip(lam, 0.0, 1.0)[:, None] * ab
        best = np.minimum(best, np.hypot(*(queries - foot).T))
    return best


def hausdorff_to_unit_circle_arc(
    curve: BezierCurve2, arc: ArcSpec, samples: int = 10_000
) -> float:
    """Symmetric Hausdorff distance estimate between a curve and the arc.

    The curve is sampled at ``samples`` uniform parameters. Curve-to-arc
    distances are exact; arc-to-curve distances are taken from ``samples``
    arc points to the curve's sample polyline.
    """
    if samples < 100:
        raise DomainError(f"samples must be at least 100, got {samples}")
    ts = np.linspace(-1.0, 1.0, samples)
    verts = sample_curve(curve, ts)
    forward = distance_to_arc(verts, arc).max()
    angles = np.linspace(-arc.half_angle, arc.half_angle, samples)
    arc_pts = np.column_stack([np.cos(angles), np.sin(angles)])
    backward = _distance_to_polyline(arc_pts, verts).max()
    return float(max(forward, backward))
