"""Exact secrecy-dof regions of the two-user MIMO-MAC wiretap channel.

All geometry is carried in :class:`fractions.Fraction`.  A region is kept in
a canonical form so that two regions are equal exactly when their
dataclasses compare equal:

* vertices start at the lexicographically smallest point and run
  counterclockwise, with duplicate and collinear points removed;
* half-spaces ``alpha*d1 + beta*d2 <= gamma`` are scaled to coprime
  integers (orientation preserved) and listed edge by edge from the first
  vertex.
"""
import csv
import enum
import io
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidDims


def pos(x):
    return max(x, 0)


@dataclass(frozen=True, order=True)
class DofPoint:
    d1: Fraction
    d2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d1", Fraction(self.d1))
        object.__setattr__(self, "d2", Fraction(self.d2))
        if self.d1 < 0 or self.d2 < 0:
            raise ValueError(f"dof coordinates must be nonnegative: {self}")

    def reflect(self):
        return DofPoint(self.d2, self.d1)

    def __iter__(self):
        yield self.d1
        yield self.d2


def normalize_halfspace(alpha, beta, gamma):
    """Scale ``(alpha, beta, gamma)`` to coprime integers, keeping direction."""
    coeffs = [Fraction(alpha), Fraction(beta), Fraction(gamma)]
    if coeffs[0] == 0 and coeffs[1] == 0:
        raise ValueError("half-space normal must be nonzero")
    lcm = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * lcm) for c in coeffs]
    g = math.gcd(*ints)
    return tuple(Fraction(v // g) for v in ints)


def _cross(o, a, b):
    return (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1)


def convex_hull(points):
    """Counterclockwise hull (monotone chain), collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _halfspaces_of(vertices):
    if len(vertices) == 1:
        x, y = vertices[0].d1, vertices[0].d2
        raw = [(1, 0, x), (-1, 0, -x), (0, 1, y), (0, -1, -y)]
    elif len(vertices) == 2:
        p, q = vertices
        ux, uy = q.d1 - p.d1, q.d2 - p.d2
        nx, ny = uy, -ux
        line = nx * p.d1 + ny * p.d2
        raw = [(nx, ny, line), (-nx, -ny, -line),
               (ux, uy, ux * q.d1 + uy * q.d2), (-ux, -uy, -(ux * p.d1 + uy * p.d2))]
    else:
        raw = []
        for p, q in zip(vertices, vertices[1:] + vertices[:1]):
            dx, dy = q.d1 - p.d1, q.d2 - p.d2
            raw.append((dy, -dx, dy * p.d1 - dx * p.d2))
    return tuple(normalize_halfspace(*h) for h in raw)


def _satisfies(h, p):
    return h[0] * p.d1 + h[1] * p.d2 <= h[2]


def _is_bounded(halfspaces):
    rays = []
    for a, b, _ in halfspaces:
        if a or b:
            rays += [(b, -a), (-b, a)]
    if not rays:
        return False
    return not any(all(a * rx + b * ry <= 0 for a, b, _ in halfspaces) for rx, ry in rays)


def vertices_of_halfspaces(halfspaces):
    """Vertex enumeration of a bounded 2-D polytope by pairwise intersection."""
    hs = [tuple(Fraction(c) for c in h) for h in halfspaces]
    for a, b, c in hs:
        if a == 0 and b == 0 and c < 0:
            raise ValueError("infeasible half-space 0 <= negative")
    hs = [h for h in hs if h[0] or h[1]]
    if not _is_bounded(hs):
        raise ValueError("half-spaces do not describe a bounded region")
    candidates = set()
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(hs, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = (c1 * b2 - c2 * b1) / det
        y = (a1 * c2 - a2 * c1) / det
        if x < 0 or y < 0:
            # outside the nonnegative quadrant every region here lives in
            if all(h[0] * x + h[1] * y <= h[2] for h in hs):
                raise ValueError("region leaves the nonnegative quadrant")
            continue
        pt = DofPoint(x, y)
        if all(_satisfies(h, pt) for h in hs):
            candidates.add(pt)
    if not candidates:
        raise ValueError("half-spaces describe an empty region")
    return convex_hull(candidates)


@dataclass(frozen=True)
class DofRegion:
    """Bounded convex region in canonical vertex and half-space form."""

    vertices: tuple
    halfspaces: tuple

    @classmethod
    def from_points(cls, points):
        hull = convex_hull([p if isinstance(p, DofPoint) else DofPoint(*p) for p in points])
        if not hull:
            raise ValueError("a region needs at least one point")
        return cls(tuple(hull), _halfspaces_of(hull))

    @classmethod
    def from_halfspaces(cls, halfspaces):
        return cls.from_points(vertices_of_halfspaces(halfspaces))

    def reflect(self):
        """Mirror image across the line d1 = d2."""
        return DofRegion.from_points([v.reflect() for v in self.vertices])

    def contains(self, p):
        return contains(self, p)

    def is_consistent(self):
        """Mutual containment of the two representations."""
        if not all(_satisfies(h, v) for h in self.halfspaces for v in self.vertices):
            return False
        return tuple(vertices_of_halfspaces(self.halfspaces)) == self.vertices

    def issubset(self, other):
        return all(contains(other, v) for v in self.vertices)

    def to_json(self):
        return {
            "vertices": [[[v.d1.numerator, v.d1.denominator],
                          [v.d2.numerator, v.d2.denominator]] for v in self.vertices],
            "halfspaces": [[x for c in h for x in (c.numerator, c.denominator)]
                           for h in self.halfspaces],
        }

    @classmethod
    def from_json(cls, obj):
        verts = [DofPoint(Fraction(*a), Fraction(*b)) for a, b in obj["vertices"]]
        region = cls.from_points(verts)
        hs = tuple(normalize_halfspace(Fraction(h[0], h[1]), Fraction(h[2], h[3]),
                                       Fraction(h[4], h[5])) for h in obj["halfspaces"])
        if hs != region.halfspaces:
            raise ValueError("half-spaces do not match the canonical form of the vertices")
        return region

    def vertices_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["d1", "d2"])
        for v in self.vertices:
            writer.writerow([format(float(v.d1), ".17g"), format(float(v.d2), ".17g")])
        return buf.getvalue()


def contains(region, p):
    """Boundary-inclusive exact membership test."""
    if not isinstance(p, DofPoint):
        p = DofPoint(*p)
    return all(_satisfies(h, p) for h in region.halfspaces)


class RegionCase(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    DEGENERATE = "Degenerate"


def validate_dims(r0, r1, r2, n_e):
    for name, v in (("r0", r0), ("r1", r1), ("r2", r2), ("n_e", n_e)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidDims(f"{name} must be an integer, got {v!r}")
        if v < 0:
            raise InvalidDims(f"{name} must be nonnegative, got {v}")
    if max(r1, r2) > r0:
        raise InvalidDims(f"max(r1, r2) <= r0 violated: max({r1}, {r2}) > {r0}")
    if r0 > r1 + r2:
        raise InvalidDims(f"r0 <= r1 + r2 violated: {r0} > {r1} + {r2}")


def sdof_vertices(r0, r1, r2, n_e):
    """The five corner points p0..p4 whose hull is the s.d.o.f. region."""
    validate_dims(r0, r1, r2, n_e)
    return [
        DofPoint(0, 0),
        DofPoint(pos(r1 - n_e), 0),
        DofPoint(0, pos(r2 - n_e)),
        DofPoint(pos(r1 - n_e), pos(r0 - r1 - n_e)),
        DofPoint(pos(r0 - r2 - n_e), pos(r2 - n_e)),
    ]


def sdof_region(r0, r1, r2, n_e):
    return DofRegion.from_points(sdof_vertices(r0, r1, r2, n_e))


def classify_case(r0, r1, r2, n_e):
    """Region shape by eavesdropper antenna count.

    Boundary ties resolve in the order A, C, B.  ``DEGENERATE`` covers the
    remaining configurations, where some user has ``r_k < N_E`` or
    ``N_E = min(r1, r2)`` exceeds both private-link counts; a user's dof
    is then identically zero.
    """
    validate_dims(r0, r1, r2, n_e)
    lo, hi = sorted((r0 - r1, r0 - r2))
    if n_e <= lo:
        return RegionCase.A
    if n_e >= hi and n_e < min(r1, r2):
        return RegionCase.C
    if lo <= n_e <= hi and n_e <= min(r1, r2):
        return RegionCase.B
    return RegionCase.DEGENERATE


def case_halfspaces(r0, r1, r2, n_e):
    """Closed-form boundary of the region for its shape class.

    Returns ``None`` for the degenerate class, which has no closed form
    beyond the vertex list.
    """
    case = classify_case(r0, r1, r2, n_e)
    nonneg = [(-1, 0, 0), (0, -1, 0)]
    if case is RegionCase.A:
        return nonneg + [(1, 0, r1 - n_e), (0, 1, r2 - n_e), (1, 1, r0 - 2 * n_e)]
    if case is RegionCase.C:
        f, g = r1 - n_e, r2 - n_e
        return nonneg + [(g, f, f * g)]
    if case is RegionCase.B:
        caps = [(1, 0, r1 - n_e), (0, 1, r2 - n_e)]
        if r1 < r2:
            return nonneg + caps + [case_b_line(r0, r1, r2, n_e)]
        b = case_b_line(r0, r2, r1, n_e)
        return nonneg + caps + [(b[1], b[0], b[2])]
    return None


def case_b_line(r0, r1, r2, n_e):
    """``(r1 + r2 - r0) d1 + (r1 - N_E) d2 <= (r1 - N_E)(r2 - N_E)`` for r1 < r2."""
    return (r1 + r2 - r0, r1 - n_e, (r1 - n_e) * (r2 - n_e))


def rectangle_hull(r0, r1, r2, n_e):
    """Hull of the rectangles ``[0, [t1-N_E]^+] x [0, [t2-N_E]^+]``.

    One rectangle per integer dimension split with ``t_k <= r_k`` and
    ``t1 + t2 <= r0``.
    """
    validate_dims(r0, r1, r2, n_e)
    corners = set()
    for t1 in range(r1 + 1):
        for t2 in range(min(r2, r0 - t1) + 1):
            x, y = pos(t1 - n_e), pos(t2 - n_e)
            corners.update({(0, 0), (x, 0), (0, y), (x, y)})
    return DofRegion.from_points([DofPoint(x, y) for x, y in corners])
