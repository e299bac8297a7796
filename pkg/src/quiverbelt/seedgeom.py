"""Geometric rank-3 seeds and their mutation by partial reflections.

Affine case: a seed is an exact triangle or infinite region in the plane
(module coordinates over F_d, see planegeom) together with its exchange
matrix.  The reference point sits infinitely far along the belt line b, the
line through the altitude feet of the initial triangle's source and sink
sides; a side is positive when the belt direction points against its
outward normal.  A mutation at side k keeps side k's line, reflects across
it every other side whose matrix entry matches the positivity branch, and
rebuilds the region on the far side of k.

Spherical case (finite type): seeds are vector triples in a quadratic
space with a positive-definite quasi-Cartan Gram matrix; mutation is the
usual partial-reflection rule with positivity read off a fixed interior
reference point.

Vertex i is always opposite side i; side i of a triangle joins the other
two vertices.  An infinite region stores the two endpoints of its finite
side in the vertex slots opposite the parallel sides, None in the slot
opposite the finite side, and the unit ray direction of its parallel
sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from quiverbelt.cycfield import (
    FieldElem,
    cos_multiple,
    cos_value,
    level_context,
    sin_product,
)
from quiverbelt.exmatrix import ClassificationResult, ExchangeMatrix, classify, mutate
from quiverbelt.planegeom import (
    PlanarPoint,
    cross_q,
    dot,
    foot_of_perpendicular,
    length_along,
    line_intersect,
    midpoint,
    planar_zero,
    reflect_point,
    reflect_vector,
    unit_dir,
)


class UnsupportedClass(ValueError):
    """No geometric realisation for this mutation class."""


class NotAcyclic(ValueError):
    """Operation requires an acyclic (acute-angled) seed."""


class DegeneratePositivity(ValueError):
    """The mutated side pairs to zero against the reference point."""


class UnsupportedRegion(RuntimeError):
    """Mutation produced a region outside the triangle/strip zoo."""


@dataclass(frozen=True)
class BeltLine:
    """The belt line: base point, direction class, and the oriented unit
    direction towards the reference point."""

    base: PlanarPoint
    dir_class: int
    e: PlanarPoint

    def offset_sign(self, p: PlanarPoint) -> int:
        """Which side of the belt p lies on (0 on the line)."""
        return cross_q(self.e, p - self.base).sign()

    def contains(self, p: PlanarPoint) -> bool:
        return self.offset_sign(p) == 0


@dataclass(frozen=True)
class PlanarChart:
    """Ambient data shared by every seed of one realisation."""

    d: int
    n: int
    belt: BeltLine
    t0: FieldElem


@dataclass(frozen=True)
class PlanarSeed:
    chart: PlanarChart
    kind: str  # "triangle" | "region"
    vertices: tuple[Optional[PlanarPoint], ...]
    side_dirs: tuple[int, int, int]
    ray: Optional[PlanarPoint]
    B: ExchangeMatrix
    # parity of sign flips per side: the seed vector of side i is
    # (-1)^flips[i] times the outward normal of the drawn region.  Nonzero
    # only after a lazy mutation, which keeps the region and flips v_k.
    flips: tuple[int, int, int] = (0, 0, 0)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    # -- basic structure ---------------------------------------------------

    @property
    def d(self) -> int:
        return self.chart.d

    def finite_side_index(self) -> Optional[int]:
        if self.kind != "region":
            return None
        return next(i for i, v in enumerate(self.vertices) if v is None)

    def side_base(self, i: int) -> PlanarPoint:
        """A point on side i's line."""
        if self.kind == "triangle":
            return self.vertices[(i + 1) % 3]
        f = self.finite_side_index()
        if i == f:
            return next(v for v in self.vertices if v is not None)
        # parallel side i passes through the endpoint stored opposite the
        # other parallel side
        other = next(j for j in range(3) if j != i and j != f)
        return self.vertices[other]

    def interior_witness(self) -> PlanarPoint:
        w = self._cache.get("witness")
        if w is None:
            if self.kind == "triangle":
                a, b, c = self.vertices
                w = (a + b + c).scale(Fraction(1, 3))
            else:
                ends = [v for v in self.vertices if v is not None]
                w = midpoint(ends[0], ends[1]) + self.ray
            self._cache["witness"] = w
        return w

    def outward_sign(self, i: int) -> int:
        """Sign s with s*cross_q(u_m, x - base) < 0 for interior x."""
        w = self.interior_witness()
        val = cross_q(unit_dir(self.d, self.side_dirs[i]), w - self.side_base(i))
        s = val.sign()
        if s == 0:
            raise UnsupportedRegion("interior witness landed on a side")
        return -s

    def endpoints_of_side(self, i: int) -> tuple[PlanarPoint, PlanarPoint]:
        if self.kind == "triangle":
            return self.vertices[(i + 1) % 3], self.vertices[(i + 2) % 3]
        if i != self.finite_side_index():
            raise ValueError("side is infinite")
        ends = [v for v in self.vertices if v is not None]
        return ends[0], ends[1]

    def angle_multiple(self, i: int) -> int:
        """Interior angle at vertex i as a multiple of pi/d."""
        d = self.d
        if self.kind == "triangle":
            vi = self.vertices[i]
            vj = self.vertices[(i + 1) % 3]
            vk = self.vertices[(i + 2) % 3]
            return _angle_multiple_between(d, vj - vi, vk - vi)
        f = self.finite_side_index()
        if i == f:
            raise ValueError("no finite vertex opposite the finite side")
        # vertex i is the finite-side endpoint on the *other* parallel side
        other_end = self.vertices[next(j for j in range(3) if j != i and j != f)]
        this_end = self.vertices[i]
        return _angle_multiple_between(d, other_end - this_end, self.ray)

    def angle_triple(self) -> tuple[int, ...]:
        """Interior angle multiples by vertex slot; 0 marks the infinite
        slot of a region."""
        out = []
        for i in range(3):
            if self.kind == "region" and i == self.finite_side_index():
                out.append(0)
            else:
                out.append(self.angle_multiple(i))
        return tuple(out)

    def is_acute(self) -> bool:
        """Strictly acute triangle (every angle below pi/2)."""
        return self.kind == "triangle" and all(
            2 * a < self.d for a in self.angle_triple()
        )

    def is_obtuse(self) -> bool:
        return self.kind == "triangle" and any(
            2 * a > self.d for a in self.angle_triple()
        )

    # -- canonical form ------------------------------------------------------

    def canonical_key(self) -> str:
        key = self._cache.get("key")
        if key is None:
            perms = (
                (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)
            )
            key = min(
                ";".join(
                    [self.kind]
                    + [
                        "inf" if self.vertices[p[i]] is None else self.vertices[p[i]].key()
                        for i in range(3)
                    ]
                    + [str(self.side_dirs[p[i]]) for i in range(3)]
                    + [self.ray.key() if self.ray is not None else "-"]
                    + [
                        self.B[p[i], p[j]].key()
                        for i in range(3)
                        for j in range(3)
                        if i != j
                    ]
                )
                for p in perms
            )
            self._cache["key"] = key
        return key

    def __eq__(self, other):
        return (
            isinstance(other, PlanarSeed)
            and other.chart.d == self.chart.d
            and other.canonical_key() == self.canonical_key()
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def translate(self, w: PlanarPoint) -> "PlanarSeed":
        verts = tuple(v + w if v is not None else None for v in self.vertices)
        return PlanarSeed(
            self.chart, self.kind, verts, self.side_dirs, self.ray, self.B, self.flips
        )

    def to_json(self):
        return {
            "level": self.d,
            "kind": self.kind,
            "vertices": [v.to_json() if v is not None else None for v in self.vertices],
            "rays": None if self.ray is None else self.ray.to_json(),
            "side_dirs": list(self.side_dirs),
            "quiver": [
                [i, j]
                for i in range(3)
                for j in range(3)
                if i != j and self.B[i, j].sign() > 0
            ],
            "matrix": self.B.to_json(),
        }


def _angle_multiple_between(d: int, u: PlanarPoint, v: PlanarPoint) -> int:
    """Angle between two nonzero grid vectors as an integer multiple of
    pi/d."""
    mu = _class_of(d, u)
    mv = _class_of(d, v)
    delta = (mu - mv) % d
    lo, hi = min(delta, d - delta), max(delta, d - delta)
    sgn = dot(d, u, v).sign()
    if sgn > 0:
        return lo
    if sgn < 0:
        return hi
    if d % 2 != 0:
        raise ValueError("perpendicular grid vectors need an even level")
    return d // 2


def _class_of(d: int, v: PlanarPoint) -> int:
    for m in range(d):
        if cross_q(unit_dir(d, m), v).is_zero():
            return m
    raise ValueError("vector is not parallel to a grid direction")


# -- initial seeds --------------------------------------------------------------


def _source_sink_lists(B: ExchangeMatrix) -> tuple[list[int], list[int]]:
    signs = B.sign_pattern()
    sources = [
        i
        for i in range(B.rank)
        if all(signs[i][j] >= 0 for j in range(B.rank))
        and any(signs[i][j] > 0 for j in range(B.rank))
    ]
    sinks = [
        i
        for i in range(B.rank)
        if all(signs[i][j] <= 0 for j in range(B.rank))
        and any(signs[i][j] < 0 for j in range(B.rank))
    ]
    return sources, sinks


def _source_sink(B: ExchangeMatrix) -> tuple[Optional[int], Optional[int]]:
    sources, sinks = _source_sink_lists(B)
    source = sources[0] if len(sources) == 1 else None
    sink = sinks[0] if len(sinks) == 1 else None
    return source, sink


def initial_seed(d: int) -> PlanarSeed:
    """The initial triangle with unit d1 side, base on the x-axis, and the
    standard acyclic quiver; odd d gives the isosceles (a, na, na) triangle,
    even d the (a, (n-1)a, na) right triangle."""
    if d < 3:
        raise ValueError("d must be at least 3")
    one = FieldElem.one(d)
    zero = FieldElem.zero(d)
    p0 = planar_zero(d)
    p1 = PlanarPoint(one, zero)
    if d % 2 == 1:
        n = (d - 1) // 2
        apex = PlanarPoint(cos_value(d, 1), one)
        vertices = (p0, p1, apex)
        side_dirs = (((d + 1) // 2) % d, 1, 0)
        B = ExchangeMatrix.from_upper(
            cos_multiple(d, n), cos_multiple(d, n), cos_multiple(d, 1)
        )
    else:
        n = d // 2
        top = PlanarPoint(one, cos_value(d, 1).inv())
        vertices = (p0, top, p1)
        side_dirs = (n, 0, 1)
        B = ExchangeMatrix.from_upper(
            zero, cos_multiple(d, n - 1), -cos_multiple(d, 1)
        )
    t0 = sin_product(d, 1, n)
    chart = PlanarChart(d, n, _belt_for_initial(d, vertices, side_dirs, B), t0)
    return PlanarSeed(chart, "triangle", vertices, side_dirs, None, B)


def _triangle_feet(d, vertices, side_dirs, idx) -> PlanarPoint:
    base = vertices[(idx + 1) % 3]
    return foot_of_perpendicular(d, vertices[idx], base, side_dirs[idx])


def _belt_for_initial(d, vertices, side_dirs, B) -> BeltLine:
    source, sink = _source_sink(B)
    points = [
        _triangle_feet(d, vertices, side_dirs, source),
        _triangle_feet(d, vertices, side_dirs, sink),
    ]
    # A right-angled initial triangle (even d) has both feet on the
    # right-angle vertex; walk the belt by source reflections until a
    # second point on the line shows up.
    cur_v, cur_d, cur_B = list(vertices), list(side_dirs), B
    for _ in range(4):
        if any(p != points[0] for p in points):
            break
        src, snk = _source_sink(cur_B)
        if src is None:
            break
        base_pt = cur_v[(src + 1) % 3]
        mirror = cur_d[src]
        cur_v[src] = reflect_point(d, cur_v[src], base_pt, mirror)
        for i in range(3):
            if i != src:
                cur_d[i] = (2 * mirror - cur_d[i]) % d
        cur_B = mutate(cur_B, src)
        s2, k2 = _source_sink(cur_B)
        if s2 is not None:
            points.append(_triangle_feet(d, tuple(cur_v), tuple(cur_d), s2))
        if k2 is not None:
            points.append(_triangle_feet(d, tuple(cur_v), tuple(cur_d), k2))
    base = points[0]
    other = next(p for p in points if p != base)
    direction = other - base
    m = next(
        (m for m in range(d) if cross_q(unit_dir(d, m), direction).is_zero()), None
    )
    if m is None:
        raise RuntimeError("belt direction is not a grid direction")
    # orient e so that the source side is positive and the sink negative
    e = unit_dir(d, m)
    sign_needed = None
    centroid = (vertices[0] + vertices[1] + vertices[2]).scale(Fraction(1, 3))
    for candidate in (e, -e):
        src_out = _outward(d, vertices, side_dirs, source, centroid)
        snk_out = _outward(d, vertices, side_dirs, sink, centroid)
        src_val = (
            src_out * cross_q(unit_dir(d, side_dirs[source]), candidate)
        ).sign()
        snk_val = (
            snk_out * cross_q(unit_dir(d, side_dirs[sink]), candidate)
        ).sign()
        if src_val < 0 and snk_val > 0:
            sign_needed = candidate
            break
    if sign_needed is None:
        raise RuntimeError("belt orientation is inconsistent")
    return BeltLine(base, m, sign_needed)


def _outward(d, vertices, side_dirs, i, witness) -> int:
    base = vertices[(i + 1) % 3]
    val = cross_q(unit_dir(d, side_dirs[i]), witness - base)
    s = val.sign()
    if s == 0:
        raise UnsupportedRegion("degenerate witness")
    return -s


# -- positivity and mutation ------------------------------------------------


def positivity(s: PlanarSeed, k: int) -> int:
    """+1 if side k is positive (the reference point at infinity along the
    belt lies in its inner half-plane), -1 otherwise."""
    d = s.d
    sigma = s.outward_sign(k)
    if s.flips[k]:
        sigma = -sigma
    u = unit_dir(d, s.side_dirs[k])
    val = (sigma * cross_q(u, s.chart.belt.e)).sign()
    if val != 0:
        return -val
    # side parallel to the belt: compare against the belt's own offset
    off = (sigma * cross_q(u, s.chart.belt.base - s.side_base(k))).sign()
    if off == 0:
        raise DegeneratePositivity("side lies on the belt line")
    return -off


def planar_mutate(s: PlanarSeed, k: int) -> PlanarSeed:
    """Mutation at side k: an involution on (region, quiver) seeds."""
    d = s.d
    pos = positivity(s, k) > 0
    others = [i for i in range(3) if i != k]
    reflect_flags = {}
    for i in others:
        sb = s.B[i, k].sign()
        reflect_flags[i] = (sb < 0) if pos else (sb > 0)
    new_B = mutate(s.B, k)

    if not any(reflect_flags.values()):
        # lazy branch: sides unchanged, arrows flip, v_k changes sign
        new_flips = tuple(
            f ^ 1 if i == k else f for i, f in enumerate(s.flips)
        )
        return PlanarSeed(
            s.chart, s.kind, s.vertices, s.side_dirs, s.ray, new_B, new_flips
        )

    mk = s.side_dirs[k]
    base_k = s.side_base(k)
    w = s.interior_witness()
    lines = {}
    inner = {}
    for t in range(3):
        base_t = s.side_base(t)
        m_t = s.side_dirs[t]
        inner_t = cross_q(unit_dir(d, m_t), w - base_t).sign()
        if inner_t == 0:
            raise UnsupportedRegion("degenerate interior witness")
        if t == k:
            lines[t] = (base_t, m_t)
            inner[t] = -inner_t  # the region flips across the mutated side
        elif reflect_flags[t]:
            raw = 2 * mk - m_t
            m2 = raw % d
            # whether the class representative keeps the reflected direction
            eps = 1 if raw % (2 * d) == m2 else -1
            lines[t] = (reflect_point(d, base_t, base_k, mk), m2)
            inner[t] = -eps * inner_t  # reflections reverse cross products
        else:
            lines[t] = (base_t, m_t)
            inner[t] = inner_t
    return _rebuild(s.chart, lines, inner, new_B, s.flips)


def _rebuild(chart, lines, inner, B, flips) -> PlanarSeed:
    """Assemble the seed bounded by three oriented lines; the inner sign of
    line t is the cross_q sign of interior points relative to (base, m)."""
    d = chart.d
    dirs = tuple(lines[t][1] for t in range(3))
    parallel_pairs = [
        (i, j) for i in range(3) for j in range(i + 1, 3) if dirs[i] == dirs[j]
    ]
    if not parallel_pairs:
        verts = []
        for t in range(3):
            a, b = [x for x in range(3) if x != t]
            p = line_intersect(d, lines[a][0], lines[a][1], lines[b][0], lines[b][1])
            if p is None:
                raise UnsupportedRegion("unexpected parallel sides")
            verts.append(p)
        for t in range(3):
            side = cross_q(unit_dir(d, dirs[t]), verts[t] - lines[t][0]).sign()
            if side != inner[t]:
                raise UnsupportedRegion("half-planes bound an unbounded cell")
        return PlanarSeed(chart, "triangle", tuple(verts), dirs, None, B, flips)
    if len(parallel_pairs) > 1:
        raise UnsupportedRegion("degenerate line arrangement")
    p, q = parallel_pairs[0]
    f = next(t for t in range(3) if t not in (p, q))
    u_par = unit_dir(d, dirs[p])
    # strip consistency: each parallel line on the inner side of the other
    if cross_q(u_par, lines[q][0] - lines[p][0]).sign() != inner[p]:
        raise UnsupportedRegion("half-planes bound a wedge, not a strip")
    if cross_q(u_par, lines[p][0] - lines[q][0]).sign() != inner[q]:
        raise UnsupportedRegion("half-planes bound a wedge, not a strip")
    verts: list[Optional[PlanarPoint]] = [None, None, None]
    verts[p] = line_intersect(d, lines[f][0], lines[f][1], lines[q][0], lines[q][1])
    verts[q] = line_intersect(d, lines[f][0], lines[f][1], lines[p][0], lines[p][1])
    if verts[p] is None or verts[q] is None:
        raise UnsupportedRegion("finite side parallel to the strip")
    rho = inner[f] * cross_q(unit_dir(d, dirs[f]), u_par).sign()
    if rho == 0:
        raise UnsupportedRegion("ray direction degenerate")
    ray = u_par.scale(rho)
    return PlanarSeed(chart, "region", tuple(verts), dirs, ray, B, flips)


# -- invariants ----------------------------------------------------------------


def t_invariant(s: PlanarSeed) -> FieldElem:
    """The conserved quantity: finite side length times the sines of its two
    adjacent angles."""
    d = s.d
    if s.kind == "triangle":
        i = 0
        vj, vk = s.endpoints_of_side(i)
        length = length_along(d, vk - vj, s.side_dirs[i])
        aj = s.angle_multiple((i + 1) % 3)
        ak = s.angle_multiple((i + 2) % 3)
        return length * sin_product(d, aj, ak)
    f = s.finite_side_index()
    e1, e2 = s.endpoints_of_side(f)
    length = length_along(d, e2 - e1, s.side_dirs[f])
    k = s.angle_multiple(next(i for i in range(3) if i != f))
    return length * sin_product(d, k, k)


def side_length(s: PlanarSeed, k: int) -> FieldElem:
    """Exact Euclidean length of a finite side."""
    a, b = s.endpoints_of_side(k)
    return length_along(s.d, b - a, s.side_dirs[k])


def belt_line(s0: PlanarSeed) -> BeltLine:
    """The belt line of an acyclic seed: through the altitude feet of the
    source and sink sides, oriented towards the reference point."""
    source, sink = _source_sink(s0.B)
    if source is None or sink is None:
        raise NotAcyclic("belt line requires a seed with source and sink")
    return _belt_for_initial(s0.d, s0.vertices, s0.side_dirs, s0.B)


def designated_feet(s: PlanarSeed) -> list[PlanarPoint]:
    """The altitude feet that the belt is required to contain.

    Acyclic triangle: feet on the source and sink sides.  Obtuse triangle:
    feet on the two sides of the obtuse angle.  Region: the foot of the
    perpendicular from the acute endpoint onto the parallel side through
    the obtuse endpoint (the second designated foot recedes to infinity
    along the finite side's direction).
    """
    d = s.d
    if s.kind == "triangle":
        sources, sinks = _source_sink_lists(s.B)
        if sources or sinks:
            # acyclic: the source- and sink-side feet (a right angle makes
            # one of the lists ambiguous; all named feet lie on the belt)
            idxs = sorted(set(sources) | set(sinks))
        else:
            obtuse = next(i for i in range(3) if 2 * s.angle_multiple(i) > d)
            idxs = [i for i in range(3) if i != obtuse]
        return [
            foot_of_perpendicular(
                d, s.vertices[i], s.side_base(i), s.side_dirs[i]
            )
            for i in idxs
        ]
    f = s.finite_side_index()
    par = [i for i in range(3) if i != f]
    obtuse_end = next(i for i in par if 2 * s.angle_multiple(i) > d)
    acute_end = next(i for i in par if i != obtuse_end)
    # the endpoint stored at the obtuse slot lies on the parallel side whose
    # index is the acute slot: the finite designated foot drops onto it
    return [
        foot_of_perpendicular(
            d, s.vertices[acute_end], s.side_base(acute_end), s.side_dirs[acute_end]
        )
    ]


def feet_on_belt(s: PlanarSeed, belt: Optional[BeltLine] = None) -> bool:
    """Whether every designated altitude foot lies exactly on the belt; for
    regions the finite side must also be parallel to it."""
    if belt is None:
        belt = s.chart.belt
    d = s.d
    if s.kind == "region":
        f = s.finite_side_index()
        if (s.side_dirs[f] - belt.dir_class) % d != 0:
            return False
    return all(belt.contains(p) for p in designated_feet(s))


def translation_between(s1: PlanarSeed, s2: PlanarSeed) -> Optional[PlanarPoint]:
    """The unique w with s2 = w + s1 (up to relabelling), or None.  A found
    w is checked to be parallel to the belt."""
    if s1.kind != s2.kind or s1.chart.d != s2.chart.d:
        return None
    d = s1.chart.d
    perms = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    for p in perms:
        if any(
            (s1.vertices[p[i]] is None) != (s2.vertices[i] is None) for i in range(3)
        ):
            continue
        if any(s1.side_dirs[p[i]] != s2.side_dirs[i] for i in range(3)):
            continue
        if any(
            s1.B[p[i], p[j]] != s2.B[i, j]
            for i in range(3)
            for j in range(3)
            if i != j
        ):
            continue
        if s1.kind == "region" and s1.ray != s2.ray:
            continue
        diffs = [
            s2.vertices[i] - s1.vertices[p[i]]
            for i in range(3)
            if s1.vertices[p[i]] is not None
        ]
        if any(diff != diffs[0] for diff in diffs[1:]):
            continue
        w = diffs[0]
        if not w.is_zero() and not cross_q(s1.chart.belt.e, w).is_zero():
            raise RuntimeError("translation witness not parallel to the belt")
        return w
    return None


def reflect_across_belt(s: PlanarSeed) -> PlanarSeed:
    """The mirror seed across the belt line (same quiver data)."""
    belt = s.chart.belt
    d = s.d
    verts = tuple(
        None if v is None else reflect_point(d, v, belt.base, belt.dir_class)
        for v in s.vertices
    )
    dirs = tuple((2 * belt.dir_class - m) % d for m in s.side_dirs)
    ray = None if s.ray is None else reflect_vector(d, s.ray, belt.dir_class)
    return PlanarSeed(s.chart, s.kind, verts, dirs, ray, s.B)


def orientation_tag(s: PlanarSeed) -> int:
    """Which side of the belt the seed's distinguishing data lies on.

    Acyclic triangles are tagged by their middle side's midpoint, obtuse
    triangles by the centroid, regions by the finite side (falling back to
    a point pushed along the rays when the side lies on the belt)."""
    belt = s.chart.belt
    if s.kind == "triangle":
        source, sink = _source_sink(s.B)
        if source is not None and sink is not None and source != sink:
            middle = next(i for i in range(3) if i not in (source, sink))
            a, b = s.endpoints_of_side(middle)
            tag = belt.offset_sign(midpoint(a, b))
            if tag == 0:
                tag = belt.offset_sign(s.interior_witness())
        else:
            tag = belt.offset_sign(s.interior_witness())
    else:
        f = s.finite_side_index()
        a, b = s.endpoints_of_side(f)
        tag = belt.offset_sign(midpoint(a, b))
        if tag == 0:
            tag = belt.offset_sign(midpoint(a, b) + s.ray)
    if tag == 0:
        raise UnsupportedRegion("orientation tag degenerate")
    return tag


# -- quadratic-space (spherical) seeds ------------------------------------------


@dataclass(frozen=True)
class QuadSpace:
    """Symmetric bilinear form in the basis of the initial vectors."""

    gram: tuple[tuple[FieldElem, ...], ...]

    def pair(self, x, y) -> FieldElem:
        total = None
        for i in range(3):
            if x[i].is_zero():
                continue
            for j in range(3):
                if y[j].is_zero():
                    continue
                term = x[i] * self.gram[i][j] * y[j]
                total = term if total is None else total + term
        if total is None:
            return FieldElem.zero(self.gram[0][0].level)
        return total


@dataclass(frozen=True)
class SphericalSeed:
    space: QuadSpace
    vectors: tuple[tuple[FieldElem, ...], ...]
    B: ExchangeMatrix
    ref: tuple[Fraction, Fraction, Fraction]  # (v_i, u) = -ref_i at the start
    _key: list = field(default_factory=list, compare=False, repr=False)

    def pair_with_ref(self, v) -> FieldElem:
        """(v, u) for the fixed reference point u."""
        level = self.B.level
        total = FieldElem.zero(level)
        for i in range(3):
            if not v[i].is_zero():
                total = total + v[i] * (-self.ref[i])
        return total

    def canonical_key(self) -> str:
        if not self._key:
            perms = (
                (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)
            )
            best = None
            for p in perms:
                parts = []
                for i in range(3):
                    parts.extend(c.key() for c in self.vectors[p[i]])
                parts.extend(
                    self.B[p[i], p[j]].key()
                    for i in range(3)
                    for j in range(3)
                    if i != j
                )
                s = ";".join(parts)
                if best is None or s < best:
                    best = s
            self._key.append(best)
        return self._key[0]

    def __eq__(self, other):
        return (
            isinstance(other, SphericalSeed)
            and other.canonical_key() == self.canonical_key()
        )

    def __hash__(self):
        return hash(self.canonical_key())


def gram_invariants_ok(s: SphericalSeed) -> bool:
    """Def. of geometric realisations: unit diagonal pairings (value 2),
    matching absolute pairings, and the sign-parity condition."""
    g = s.space
    pairings = {}
    for i in range(3):
        if g.pair(s.vectors[i], s.vectors[i]) != 2:
            return False
        for j in range(i + 1, 3):
            pairings[(i, j)] = g.pair(s.vectors[i], s.vectors[j])
            lhs = pairings[(i, j)]
            rhs = s.B[i, j]
            if not (lhs * lhs - rhs * rhs).is_zero():
                return False
    if all(not p.is_zero() for p in pairings.values()):
        positives = sum(1 for p in pairings.values() if p.sign() > 0)
        from quiverbelt.exmatrix import is_acyclic

        if is_acyclic(s.B):
            if positives % 2 != 0:
                return False
        elif positives % 2 != 1:
            return False
    return True


def realize(B: ExchangeMatrix, reference=None):
    """Geometric realisation of a classified matrix: finite type gives a
    spherical seed, affine type the initial planar seed."""
    result = classify(B)
    return realize_classified(B, result, reference)


def realize_classified(
    B: ExchangeMatrix, result: ClassificationResult, reference=None
):
    if result.kind == "finite":
        return spherical_seed(B, reference)
    if result.kind == "affine":
        return initial_seed(result.level)
    raise UnsupportedClass(f"no geometric realisation for {result.kind}")


def spherical_seed(B: ExchangeMatrix, reference=None) -> SphericalSeed:
    """Quasi-Cartan realisation of a finite-type matrix with the canonical
    interior reference point (v_i, u) = -ref_i < 0."""
    if B.rank != 3:
        raise ValueError("spherical seeds have rank 3")
    level = B.level
    from quiverbelt.exmatrix import is_acyclic

    acyclic = is_acyclic(B)
    gram_rows = []
    nonzero_pairs = []
    for i in range(3):
        row = []
        for j in range(3):
            if i == j:
                row.append(FieldElem.from_rational(level, 2))
            else:
                entry = -B[i, j].abs()
                row.append(entry)
                if i < j and not entry.is_zero():
                    nonzero_pairs.append((i, j))
        gram_rows.append(row)
    if not acyclic and len(nonzero_pairs) == 3:
        # cyclic: flip one pairing so the positive count is odd
        i, j = nonzero_pairs[0]
        gram_rows[i][j] = -gram_rows[i][j]
        gram_rows[j][i] = -gram_rows[j][i]
    space = QuadSpace(tuple(tuple(r) for r in gram_rows))
    if reference is None:
        reference = (Fraction(1), Fraction(1), Fraction(1))
    ref = tuple(Fraction(x) for x in reference)
    if all(x == 0 for x in ref):
        raise ValueError("reference weights must not all vanish")
    basis = []
    for i in range(3):
        coords = [FieldElem.zero(level)] * 3
        coords[i] = FieldElem.one(level)
        basis.append(tuple(coords))
    return SphericalSeed(space, tuple(basis), B, ref)


def seed_mutate(s: SphericalSeed, k: int) -> SphericalSeed:
    """Partial-reflection mutation of a spherical seed."""
    pairing = s.pair_with_ref(s.vectors[k])
    sgn = pairing.sign()
    if sgn == 0:
        raise DegeneratePositivity("reference point orthogonal to the vector")
    positive = sgn < 0
    new_vectors = list(s.vectors)
    vk = s.vectors[k]
    new_vectors[k] = tuple(-c for c in vk)
    for i in range(3):
        if i == k:
            continue
        b_sign = s.B[i, k].sign()
        reflect = (b_sign < 0) if positive else (b_sign > 0)
        if reflect:
            factor = s.space.pair(s.vectors[i], vk)
            new_vectors[i] = tuple(
                s.vectors[i][t] - factor * vk[t] for t in range(3)
            )
    return SphericalSeed(s.space, tuple(new_vectors), mutate(s.B, k), s.ref)
