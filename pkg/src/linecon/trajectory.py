"""Foldings and trajectory diagrams.

The trajectory of a pair (theta, delta) plots x -> (min x/delta, min x/theta)
in an l x k rectangle, where k <= l are the two steps.  Geometry is exact:
every coordinate is stored doubled, so half-integers are plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .congruence import Congruence
from .errors import ContractViolation, DomainError

BOTTOM, TOP, LEFT, RIGHT = "bottom", "top", "left", "right"


@dataclass(frozen=True)
class Folding:
    n: int
    k: int
    heights: tuple

    def __post_init__(self):
        h = self.heights
        if len(h) != self.n + 1 or h[0] != 0 or h[-1] not in (0, self.k):
            raise DomainError(f"heights {h} do not describe a folding of L_{self.n}")
        for a, b in zip(h, h[1:]):
            if abs(a - b) > 1 or (a == b and a not in (0, self.k)):
                raise DomainError(f"heights {h} do not describe a folding of L_{self.n}")


def folding(c: Congruence) -> Folding:
    if c.is_total:
        raise DomainError("the total congruence has no folding")
    return Folding(c.n, c.step, c.heights())


@dataclass(frozen=True)
class Bounce:
    sides: tuple        # one side, or two at a corner
    point2: tuple       # doubled coordinates; a rest bounce sits at the rest midpoint
    is_rest: bool
    element: int        # x, or the left end r of the rest (r, r+1)

    @property
    def corner(self) -> bool:
        return len(self.sides) == 2

    def along2(self, side: str) -> int:
        """Doubled coordinate along the given side."""
        return self.point2[0] if side in (BOTTOM, TOP) else self.point2[1]


@dataclass(frozen=True)
class Crossing:
    point2: tuple
    segments: tuple     # pairs (i, j) of segment indices meeting here

    @property
    def integral(self) -> bool:
        return self.point2[0] % 2 == 0 and self.point2[1] % 2 == 0

    @property
    def point(self) -> tuple:
        return (Fraction(self.point2[0], 2), Fraction(self.point2[1], 2))


@dataclass(frozen=True)
class Overlap:
    segments: tuple
    start2: tuple
    end2: tuple


@dataclass(frozen=True)
class CrossingCounts:
    i: int
    h: int

    @property
    def total(self) -> int:
        return self.i + self.h


@dataclass(frozen=True)
class TrajectoryDiagram:
    n: int
    k: int              # height: step of theta
    l: int              # base: step of delta
    points: tuple       # P(0..n), integer coordinates
    bounces: tuple
    crossings: tuple
    overlaps: tuple

    @property
    def segments(self) -> tuple:
        return tuple(zip(self.points, self.points[1:]))

    def interior_bounces(self, side: str) -> list[Bounce]:
        return [b for b in self.bounces if not b.corner and b.sides == (side,)]


def _side_of(point, k, l, horizontal: bool):
    """Sides carrying this boundary point; horizontal picks top/bottom first."""
    x, y = point
    hs = [s for s, on in ((BOTTOM, y == 0), (TOP, y == 2 * k)) if on]
    vs = [s for s, on in ((LEFT, x == 0), (RIGHT, x == 2 * l)) if on]
    return tuple(hs + vs) if horizontal else tuple(vs + hs)


def _bounces(c: Congruence, points2, k, l, horizontal: bool):
    out = []
    x = 1
    while x < c.n:
        if c.height(x) in (0, c.step):
            if x in c.rests:
                a, b = points2[x], points2[x + 1]
                mid = ((a[0] + b[0]) // 2, (a[1] + b[1]) // 2)
                out.append(Bounce(_side_of(mid, k, l, horizontal), mid, True, x))
                x += 2
                continue
            out.append(Bounce(_side_of(points2[x], k, l, horizontal), points2[x], False, x))
        x += 1
    return out


def _intersect(p1, p2, q1, q2):
    """Intersection of two closed segments: None, a point, or an overlap (a, b)."""
    r = (p2[0] - p1[0], p2[1] - p1[1])
    s = (q2[0] - q1[0], q2[1] - q1[1])
    qp = (q1[0] - p1[0], q1[1] - p1[1])
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0:
        if qp[0] * r[1] - qp[1] * r[0] != 0:
            return None
        rr = r[0] * r[0] + r[1] * r[1]
        if rr == 0:
            return ("point", p1) if _on_segment(p1, q1, q2) else None
        t0 = Fraction(qp[0] * r[0] + qp[1] * r[1], rr)
        t1 = t0 + Fraction(s[0] * r[0] + s[1] * r[1], rr)
        lo, hi = max(min(t0, t1), 0), min(max(t0, t1), 1)
        if lo > hi:
            return None
        a = (p1[0] + lo * r[0], p1[1] + lo * r[1])
        if lo == hi:
            return ("point", a)
        b = (p1[0] + hi * r[0], p1[1] + hi * r[1])
        return ("overlap", (a, b))
    t = Fraction(qp[0] * s[1] - qp[1] * s[0], denom)
    u = Fraction(qp[0] * r[1] - qp[1] * r[0], denom)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return ("point", (p1[0] + t * r[0], p1[1] + t * r[1]))
    return None


def _on_segment(p, a, b):
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    return cross == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _as_int(pt):
    out = []
    for v in pt:
        v = Fraction(v)
        if v.denominator != 1:
            raise ContractViolation(f"intersection {pt} is off the half-unit grid")
        out.append(int(v))
    return tuple(out)


def build_trajectory(th: Congruence, dl: Congruence) -> TrajectoryDiagram:
    """Trajectory diagram of the pair; th must have the smaller step."""
    if th.n != dl.n:
        raise DomainError(f"congruences live on different lines: L_{th.n} and L_{dl.n}")
    if th.is_total or dl.is_total:
        raise DomainError("trajectory needs nontrivial congruences")
    if th.step > dl.step:
        raise DomainError(f"first congruence must have the smaller step ({th.step} > {dl.step})")
    n, k, l = th.n, th.step, dl.step
    points = tuple((dl.height(x), th.height(x)) for x in range(n + 1))
    p2 = [(2 * a, 2 * b) for a, b in points]

    bounces = _bounces(th, p2, k, l, True) + _bounces(dl, p2, k, l, False)
    bounces.sort(key=lambda b: (b.element, b.sides))

    segs = list(zip(p2, p2[1:]))
    hits: dict = {}
    overlaps = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            res = _intersect(*segs[i], *segs[j])
            if res is None:
                continue
            kind, val = res
            if kind == "overlap":
                overlaps.append(Overlap((i, j), _as_int(val[0]), _as_int(val[1])))
                continue
            q = _as_int(val)
            if not (0 < q[0] < 2 * l and 0 < q[1] < 2 * k):
                continue
            # the path itself passing through q between the two segments
            if all(p2[m] == q for m in range(i + 1, j + 1)):
                continue
            hits.setdefault(q, []).append((i, j))
    # a point on an overlap is not an isolated self-intersection
    isolated = [q for q in sorted(hits) if not any(_on_segment(q, o.start2, o.end2) for o in overlaps)]
    crossings = tuple(Crossing(q, tuple(hits[q])) for q in isolated)
    return TrajectoryDiagram(n, k, l, points, tuple(bounces), crossings, tuple(overlaps))


def crossing_counts(d: TrajectoryDiagram) -> CrossingCounts:
    i = sum(1 for c in d.crossings if c.integral)
    return CrossingCounts(i, len(d.crossings) - i)


def half_offset_violations(d: TrajectoryDiagram) -> list:
    """Pairs of features with one coordinate differing by exactly 1/2.

    Compares crossings with crossings coordinatewise, and crossings with
    interior bounce centres along the bounce's side.
    """
    bad = []
    cs = d.crossings
    for a in range(len(cs)):
        for b in range(a + 1, len(cs)):
            p, q = cs[a].point2, cs[b].point2
            if abs(p[0] - q[0]) == 1 or abs(p[1] - q[1]) == 1:
                bad.append((cs[a], cs[b]))
    for bn in d.bounces:
        if bn.corner:
            continue
        axis = 0 if bn.sides[0] in (BOTTOM, TOP) else 1
        for c in cs:
            if abs(c.point2[axis] - bn.point2[axis]) == 1:
                bad.append((bn, c))
    return bad
