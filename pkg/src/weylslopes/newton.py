"""Newton polygons of differential operators relative to x_{i0} = 0.

Each monomial x^a D^b contributes the plane point (|b|, b_{i0} - a_{i0});
the polygon is the staircase hull of these points (the convex hull swept
down and to the left).  The finite boundary edges with positive
horizontal extent and negative vertical drop carry the candidate slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .weyl import WeylPoly


@dataclass(frozen=True)
class NewtonPolygon:
    """Staircase hull given by its extreme points, f increasing."""

    vertices: tuple

    def __post_init__(self):
        vs = tuple((int(f), int(v)) for f, v in self.vertices)
        for (f1, v1), (f2, v2) in zip(vs, vs[1:]):
            if not (f1 < f2 and v1 > v2):
                raise ValueError("vertices must increase in f and decrease in v")
        object.__setattr__(self, "vertices", vs)

    def edge_slopes(self) -> List[Fraction]:
        return [
            Fraction(v2 - v1, f2 - f1)
            for (f1, v1), (f2, v2) in zip(self.vertices, self.vertices[1:])
        ]

    def contains(self, point: Tuple[int, int]) -> bool:
        """Membership in the hull region (hull plus the down-left quadrant)."""
        f, v = point
        if not self.vertices:
            return False
        if f > self.vertices[-1][0]:
            return False
        for (f1, v1), (f2, v2) in zip(self.vertices, self.vertices[1:]):
            if f1 <= f <= f2:
                bound = Fraction(v1) + Fraction(v2 - v1, f2 - f1) * (f - f1)
                return Fraction(v) <= bound
        return v <= self.vertices[0][1] if f <= self.vertices[0][0] else False


def monomial_point(mono: tuple, n: int, i0: int) -> Tuple[int, int]:
    beta = mono[n:]
    return (sum(beta), beta[i0 - 1] - mono[i0 - 1])


def newton_polygon(p: WeylPoly, i0: Optional[int] = None) -> NewtonPolygon:
    """Staircase hull of an operator's exponent points."""
    if p.is_zero():
        raise ValueError("the zero operator has no Newton polygon")
    n = p.n
    i0 = n if i0 is None else i0
    if not 1 <= i0 <= n:
        raise ValueError(f"distinguished index {i0} out of range 1..{n}")
    points = {monomial_point(m, n, i0) for m in p.terms}

    vmax = max(v for _, v in points)
    cur = (max(f for f, v in points if v == vmax), vmax)
    vertices = [cur]
    while True:
        best = None
        best_slope = None
        for f, v in points:
            if f <= cur[0]:
                continue
            slope = Fraction(v - cur[1], f - cur[0])
            if (
                best is None
                or slope > best_slope
                or (slope == best_slope and f > best[0])
            ):
                best = (f, v)
                best_slope = slope
        if best is None:
            break
        vertices.append(best)
        cur = best
    return NewtonPolygon(tuple(vertices))


def next_candidate(
    operators: Iterable[WeylPoly],
    previous: Optional[Fraction],
    i0: Optional[int] = None,
) -> Fraction:
    """Minimum of 0 and all polygon edge slopes above ``previous``
    (``previous`` None meaning minus infinity)."""
    best: Optional[Fraction] = None
    for p in operators:
        for r in newton_polygon(p, i0).edge_slopes():
            if previous is not None and r <= previous:
                continue
            if best is None or r < best:
                best = r
    if best is None or best >= 0:
        return Fraction(0)
    return best


def polygon_svg(polygons: Sequence[NewtonPolygon], width: int = 420, height: int = 320) -> str:
    """Minimal standalone SVG rendering of one or more polygons."""
    all_pts = [pt for poly in polygons for pt in poly.vertices]
    if not all_pts:
        return "<svg xmlns='http://www.w3.org/2000/svg'/>"
    fmax = max(f for f, _ in all_pts) + 1
    vmin = min(v for _, v in all_pts) - 1
    vmax = max(v for _, v in all_pts) + 1
    pad = 30

    def sx(f):
        return pad + f * (width - 2 * pad) / max(fmax, 1)

    def sy(v):
        span = max(vmax - vmin, 1)
        return height - pad - (v - vmin) * (height - 2 * pad) / span

    parts = [
        f"<svg xmlns='http://www.w3.org/2000/svg' width='{width}' height='{height}'>",
        f"<line x1='{sx(0)}' y1='{sy(vmin)}' x2='{sx(0)}' y2='{sy(vmax)}' stroke='gray'/>",
        f"<line x1='{sx(0)}' y1='{sy(0)}' x2='{sx(fmax)}' y2='{sy(0)}' stroke='gray'/>",
    ]
    for poly in polygons:
        pts = " ".join(f"{sx(f):.1f},{sy(v):.1f}" for f, v in poly.vertices)
        parts.append(
            f"<polyline points='{pts}' fill='none' stroke='black' stroke-width='1.5'/>"
        )
        for f, v in poly.vertices:
            parts.append(f"<circle cx='{sx(f):.1f}' cy='{sy(v):.1f}' r='3'/>")
    parts.append("</svg>")
    return "\n".join(parts)
