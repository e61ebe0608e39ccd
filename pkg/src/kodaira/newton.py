"""Newton polygons from coefficient valuations alone.

The input is a list of (index, valuation) pairs — not a polynomial — so the
same hull code serves Q, F_p(t), and truncated p-adic coefficients.  The
negated slopes, with their horizontal lengths, are the valuations of the
roots with multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class NewtonPolygon:
    # (slope, horizontal length), slopes strictly increasing
    segments: tuple

    def root_valuations(self):
        out = []
        for slope, length in self.segments:
            out.extend([-slope] * length)
        return tuple(out)

    def min_root_valuation(self):
        if not self.segments:
            raise ValueError("empty polygon")
        return -self.segments[-1][0]

    def render(self):
        return " ".join(f"(slope {s}, len {l})" for s, l in self.segments)


def newton_polygon(points) -> NewtonPolygon:
    """Lower convex hull of (index, valuation) points.

    Needs at least two finite points, one of which should be the leading
    index of the polynomial; infinite valuations (zero coefficients) are
    simply omitted by the caller.
    """
    pts = sorted((int(i), Fraction(v)) for i, v in points)
    if len(pts) < 2:
        raise ValueError("a Newton polygon needs at least two finite points")
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it is not strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        if hull and hull[-1][0] == pt[0]:
            if pt[1] < hull[-1][1]:
                hull[-1] = pt
            continue
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments))
