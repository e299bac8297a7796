"""Exchange-graph enumeration: BFS over seeds, growth tables, acyclic
belts, translation-lattice reports, quotient censuses, and exports.

The BFS works uniformly over planar seeds, spherical seeds, and bare
exchange matrices: anything with three mutation directions, a canonical
key, and a mutation callable.  Vertex order is the deterministic BFS
discovery order; edges are unordered key pairs labelled by the mutation
index.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, log
from typing import Callable, Optional

from quiverbelt.cycfield import FieldElem, rational_rank
from quiverbelt.intpoly import euler_totient
from quiverbelt.planegeom import PlanarPoint, cross_q, length_along, midpoint, unit_dir
from quiverbelt.seedgeom import (
    PlanarSeed,
    SphericalSeed,
    _source_sink_lists,
    designated_feet,
    feet_on_belt,
    initial_seed,
    orientation_tag,
    planar_mutate,
    positivity,
    reflect_across_belt,
    seed_mutate,
    t_invariant,
    translation_between,
)


class BudgetExceeded(RuntimeError):
    """Enumeration hit a limit; .partial carries the graph built so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotAcyclic(ValueError):
    pass


@dataclass
class ExchangeGraphData:
    vertices: dict  # key -> seed
    edges: dict  # frozenset({k1, k2}) -> mutation index
    depth: dict  # key -> BFS distance from the initial seed
    closed: bool
    initial_key: str

    def order(self) -> int:
        return len(self.vertices)

    def size(self) -> int:
        return len(self.edges)

    def neighbours(self, key: str):
        out = []
        for pair in self.edges:
            if key in pair:
                others = [k for k in pair if k != key]
                out.append(others[0] if others else key)
        return out

    def adjacency(self) -> dict:
        adj = {k: [] for k in self.vertices}
        for pair in self.edges:
            pair = tuple(pair)
            if len(pair) == 1:
                continue
            a, b = pair
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def to_json(self):
        keys = list(self.vertices)
        return {
            "vertices": keys,
            "edges": sorted(
                [sorted(pair) + [label] for pair, label in self.edges.items()]
            ),
            "depth": dict(sorted(self.depth.items())),
            "closed": self.closed,
        }


def _mutator_for(seed):
    if isinstance(seed, PlanarSeed):
        return planar_mutate
    if isinstance(seed, SphericalSeed):
        return seed_mutate
    from quiverbelt.exmatrix import mutate

    return mutate


def bfs(
    initial, depth_limit: Optional[int] = None, vertex_limit: Optional[int] = None
) -> ExchangeGraphData:
    """Breadth-first closure of the exchange graph from an initial seed.

    A limit of None means unbounded.  The result's `closed` flag records
    whether the frontier was exhausted before any limit."""
    mutator = _mutator_for(initial)
    rank = initial.B.rank if hasattr(initial, "B") else initial.rank
    key0 = initial.canonical_key()
    vertices = {key0: initial}
    depth = {key0: 0}
    edges: dict = {}
    closed = True
    frontier = []
    queue = deque([initial])
    while queue:
        seed = queue.popleft()
        key = seed.canonical_key()
        level = depth[key]
        if depth_limit is not None and level >= depth_limit:
            closed = False
            frontier.append(seed)
            continue
        for k in range(rank):
            nxt = mutator(seed, k)
            nkey = nxt.canonical_key()
            if nkey not in vertices:
                if vertex_limit is not None and len(vertices) >= vertex_limit:
                    raise BudgetExceeded(
                        f"vertex limit {vertex_limit} reached",
                        partial=ExchangeGraphData(vertices, edges, depth, False, key0),
                    )
                vertices[nkey] = nxt
                depth[nkey] = level + 1
                queue.append(nxt)
            if nkey != key:
                edges.setdefault(frozenset((key, nkey)), k)
    # close the window: record edges between frontier vertices so that
    # depth-limited graphs are honest induced subgraphs
    for seed in frontier:
        key = seed.canonical_key()
        for k in range(rank):
            nkey = mutator(seed, k).canonical_key()
            if nkey in vertices and nkey != key:
                edges.setdefault(frozenset((key, nkey)), k)
    return ExchangeGraphData(vertices, edges, depth, closed, key0)


@dataclass
class GrowthTable:
    entries: list[tuple[int, int]]

    def to_csv(self) -> str:
        lines = ["n,gr"]
        lines.extend(f"{n},{g}" for n, g in self.entries)
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_csv(text: str) -> "GrowthTable":
        rows = [line for line in text.strip().splitlines()[1:] if line]
        return GrowthTable([tuple(int(x) for x in r.split(",")) for r in rows])

    def loglog_slope(self, n_min: int, n_max: int) -> float:
        pts = [
            (log(n), log(g)) for n, g in self.entries if n_min <= n <= n_max and n > 0
        ]
        return _lsq_slope(pts)

    def degree_estimate(self, n_min: int, n_max: int) -> float:
        """Polynomial-degree estimate from the growth increments: the
        log-log slope of gr(n) - gr(n-1) plus one.  Differencing cancels
        the additive quasi-isometry constants that inflate the plain
        ball-count slope at small n."""
        values = dict(self.entries)
        pts = [
            (log(n), log(values[n] - values[n - 1]))
            for n in range(max(n_min, 1), n_max + 1)
            if n in values and n - 1 in values and values[n] > values[n - 1]
        ]
        return _lsq_slope(pts) + 1.0


def _lsq_slope(pts) -> float:
    if len(pts) < 2:
        raise ValueError("not enough growth points")
    mean_x = sum(x for x, _ in pts) / len(pts)
    mean_y = sum(y for _, y in pts) / len(pts)
    num = sum((x - mean_x) * (y - mean_y) for x, y in pts)
    den = sum((x - mean_x) ** 2 for x, _ in pts)
    return num / den


def growth(initial, n_max: int, vertex_limit: Optional[int] = None) -> GrowthTable:
    """gr(n) for n = 0..n_max via the BFS depth map."""
    graph = bfs(initial, depth_limit=n_max, vertex_limit=vertex_limit)
    counts = [0] * (n_max + 1)
    for level in graph.depth.values():
        if level <= n_max:
            counts[level] += 1
    running = 0
    table = []
    for n in range(n_max + 1):
        running += counts[n]
        table.append((n, running))
    return GrowthTable(table)


def acyclic_belt(initial: PlanarSeed, steps: int) -> list[PlanarSeed]:
    """The initial acyclic belt truncated to [-steps, steps]; entry `steps`
    is the initial seed, later entries follow source mutations, earlier
    ones sink mutations."""
    sources, sinks = _source_sink_lists(initial.B)
    if not sources or not sinks:
        raise NotAcyclic("belt requires an acyclic seed")

    def step(seed, forward: bool):
        srcs, snks = _source_sink_lists(seed.B)
        pool = srcs if forward else snks
        want = 1 if forward else -1
        picks = [i for i in sorted(pool) if positivity(seed, i) == want]
        if not picks:
            raise NotAcyclic("belt walk found no mutable source/sink")
        return planar_mutate(seed, picks[0])

    fwd = [initial]
    for _ in range(steps):
        fwd.append(step(fwd[-1], True))
    bwd = []
    cur = initial
    for _ in range(steps):
        cur = step(cur, False)
        bwd.append(cur)
    return list(reversed(bwd)) + fwd


@dataclass
class LatticeReport:
    level: int
    generator_lengths: list[FieldElem]  # the s_k lengths of R, witnessed
    observed_lengths: list[FieldElem]  # all translation lengths seen
    rank_r: int
    rank_observed: int
    predicted_rank_r: int
    predicted_l_ranks: tuple[int, ...]
    reflection_witness: bool
    common_denominator: Optional[int] = None

    def summary(self) -> str:
        return (
            f"d={self.level}: rank R = {self.rank_r} "
            f"(predicted {self.predicted_rank_r}), observed L-rank = "
            f"{self.rank_observed} (allowed {self.predicted_l_ranks})"
        )


def _shape_key(seed: PlanarSeed) -> str:
    """Canonical key of the seed translated so its anchor vertex sits at
    the origin: constant on translation classes.  The anchor is the
    coordinatewise-smallest vertex, which is translation-equivariant."""
    verts = [v for v in seed.vertices if v is not None]
    anchor = verts[0]
    for v in verts[1:]:
        s = (v.x - anchor.x).sign()
        if s < 0 or (s == 0 and (v.y - anchor.y).sign() < 0):
            anchor = v
    return seed.translate(-anchor).canonical_key()


def region_transversal_multiple(seed: PlanarSeed) -> Optional[int]:
    """For a region: the k with ray/finite-side angle k*pi/d, folded below
    d/2."""
    if seed.kind != "region":
        return None
    f = seed.finite_side_index()
    angles = [seed.angle_multiple(i) for i in range(3) if i != f]
    return min(angles)


def s_k_length(d: int, k: int) -> FieldElem:
    """The translation length contributed by an infinite region with
    transversal angle k*pi/d (unit d1)."""
    from quiverbelt.cycfield import inv_sin_sq, sin_product

    n = d // 2
    return sin_product(d, 1, n) * inv_sin_sq(d, k)


def lattice_report(graph: ExchangeGraphData, d: int) -> LatticeReport:
    """Collect translation witnesses among enumerated seeds, witness the
    infinite-region generators of R, and compute exact Q-ranks."""
    units = [k for k in range(1, d // 2 + 1) if gcd(k, d) == 1]
    seeds = list(graph.vertices.values())
    belt_e_class = seeds[0].chart.belt.dir_class if seeds else None

    # group by translation-invariant shape and collect pairwise witnesses
    groups: dict[str, list[PlanarSeed]] = {}
    for s in seeds:
        groups.setdefault(_shape_key(s), []).append(s)
    observed: list[FieldElem] = []
    seen = set()
    for members in groups.values():
        base = members[0]
        for other in members[1:]:
            w = translation_between(base, other)
            if w is None or w.is_zero():
                continue
            L = length_along(d, w, belt_e_class)
            if L.key() not in seen:
                seen.add(L.key())
                observed.append(L)

    # witness each s_k by an explicit infinite-region mutation
    generator_lengths = []
    for k in units:
        witness = _witness_region_translation(graph, d, k)
        expected = s_k_length(d, k)
        if witness is not None and witness != expected:
            raise RuntimeError("region translation does not match s_k")
        generator_lengths.append(expected)
        if expected.key() not in seen:
            seen.add(expected.key())
            observed.append(expected)

    reflection_witness = _has_reflection_witness(graph)

    rank_r = rational_rank(generator_lengths) if generator_lengths else 0
    rank_obs = rational_rank(observed) if observed else 0
    predicted_r = euler_totient(d) // 2
    predicted_l = (
        (predicted_r,) if d % 2 == 1 else (predicted_r, euler_totient(d))
    )
    return LatticeReport(
        level=d,
        generator_lengths=generator_lengths,
        observed_lengths=observed,
        rank_r=rank_r,
        rank_observed=rank_obs,
        predicted_rank_r=predicted_r,
        predicted_l_ranks=predicted_l,
        reflection_witness=reflection_witness,
        common_denominator=_common_denominator(observed),
    )


def _common_denominator(lengths) -> Optional[int]:
    if not lengths:
        return None
    den = 1
    for L in lengths:
        for c in L.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
    return den


def _witness_region_translation(
    graph: ExchangeGraphData, d: int, k: int
) -> Optional[FieldElem]:
    """Mutate an enumerated region with transversal angle k*pi/d at one of
    its parallel sides and return the exact translation length."""
    for seed in graph.vertices.values():
        if region_transversal_multiple(seed) != k:
            continue
        f = seed.finite_side_index()
        for side in range(3):
            if side == f:
                continue
            image = planar_mutate(seed, side)
            if image.kind != "region":
                continue
            w = translation_between(seed, image)
            if w is not None and not w.is_zero():
                return length_along(d, w, seed.chart.belt.dir_class)
    return None


def _has_reflection_witness(graph: ExchangeGraphData) -> bool:
    """Whether some enumerated seed's mirror across the belt is enumerated
    too, up to a lattice translation."""
    shapes = {_shape_key(s) for s in graph.vertices.values()}
    for seed in graph.vertices.values():
        if _shape_key(reflect_across_belt(seed)) in shapes:
            return True
    return False


@dataclass
class CensusClass:
    angles: tuple[int, ...]
    quiver: tuple
    tags: dict  # orientation tag -> number of translation classes


def quotient_census(graph: ExchangeGraphData, lattice_generators=None):
    """Group enumerated seeds into (angles, quiver) classes and count the
    congruence classes modulo translations inside each.

    Returns (census, angle_triples) where census maps the canonical
    (angles, quiver-sign) class to the number of translation-congruence
    classes per belt side, and angle_triples is the set of occurring
    unordered triples."""
    census: dict = {}
    triples = set()
    for seed in graph.vertices.values():
        if seed.kind != "triangle":
            continue
        perms = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
        angle = seed.angle_triple()
        signs = seed.B.sign_pattern()
        cls = min(
            (
                tuple(angle[p[i]] for i in range(3)),
                tuple(signs[p[i]][p[j]] for i in range(3) for j in range(3) if i != j),
            )
            for p in perms
        )
        triples.add(tuple(sorted(angle)))
        shape = _shape_key(seed)
        tag = orientation_tag(seed)
        bucket = census.setdefault(cls, {})
        bucket.setdefault(tag, set()).add(shape)
    result = {}
    for cls, tags in census.items():
        result[cls] = {tag: len(shapes) for tag, shapes in tags.items()}
    return result, triples


def gcd_one_triples(d: int) -> set:
    """Unordered positive triples summing to d with coprime entries."""
    out = set()
    for a in range(1, d - 1):
        for b in range(a, (d - a) // 2 + 1):
            c = d - a - b
            if c < b:
                continue
            if gcd(a, gcd(b, c)) == 1:
                out.add((a, b, c))
    return out


def belt_subgraph_check(graph: ExchangeGraphData, w: PlanarPoint, steps: int = 8) -> bool:
    """Whether the w-translate of the initial acyclic belt sits in the
    enumerated window as a full subgraph: translated belt seeds present
    with consecutive edges and no chords."""
    initial = graph.vertices[graph.initial_key]
    belt = acyclic_belt(initial, steps)
    translated = [s.translate(w) for s in belt]
    keys = [s.canonical_key() for s in translated]
    present = [k for k in keys if k in graph.vertices]
    if not present:
        return False
    for a in range(len(keys) - 1):
        if keys[a] in graph.vertices and keys[a + 1] in graph.vertices:
            if frozenset((keys[a], keys[a + 1])) not in graph.edges:
                return False
    for a in range(len(keys)):
        for b in range(a + 2, len(keys)):
            if keys[a] == keys[b]:
                continue
            if keys[a] in graph.vertices and keys[b] in graph.vertices:
                if frozenset((keys[a], keys[b])) in graph.edges:
                    return False
    return True


# -- spherical enumeration with compatible reference points --------------------


def expected_short_period(entry: FieldElem) -> int:
    """Short alternating period for a rank-2 pair of the given weight."""
    from quiverbelt.exmatrix import entry_cosine_form

    if entry.is_zero():
        return 4
    a, b = entry_cosine_form(entry)
    return b + 2 * a


def alternating_period(seed: SphericalSeed, i: int, j: int, cap: int = 64):
    """Steps of the alternating mutation mu_i, mu_j, ... until the full seed
    returns, or None within the cap."""
    s = seed
    for n in range(1, cap + 1):
        s = seed_mutate(s, i if n % 2 == 1 else j)
        if s == seed:
            return n
    return None


def all_periods_short(graph: ExchangeGraphData) -> bool:
    """Compatibility check: every rank-2 subseed orbit of every seed closes
    at its short period."""
    for seed in graph.vertices.values():
        for i in range(3):
            for j in range(i + 1, 3):
                expect = expected_short_period(seed.B[i, j])
                if alternating_period(seed, i, j, cap=expect) != expect:
                    return False
    return True


def compatible_spherical_graph(
    B, rng, vertex_cap: int = 256, attempts: int = 64
):
    """Sample reference points until the exchange graph closes with every
    rank-2 orbit short; returns (seed, graph).

    Compatible reference points fill chamber interiors of the reflection
    arrangement, so rejection sampling over a rational box converges in a
    handful of draws."""
    from quiverbelt.seedgeom import DegeneratePositivity, spherical_seed

    last = None
    for _ in range(attempts):
        lam = tuple(
            Fraction(rng.randint(-40, 40), rng.randint(1, 7)) for _ in range(3)
        )
        if any(x == 0 for x in lam):
            continue
        try:
            seed = spherical_seed(B, lam)
            graph = bfs(seed, vertex_limit=vertex_cap)
        except (BudgetExceeded, DegeneratePositivity) as exc:
            last = exc
            continue
        if all_periods_short(graph):
            return seed, graph
    raise RuntimeError(f"no compatible reference point found: {last!r}")


# -- isomorphism (for reference-point independence checks) ---------------------


def graphs_isomorphic(g1: ExchangeGraphData, g2: ExchangeGraphData) -> bool:
    """Backtracking isomorphism test with distance-profile refinement and a
    connected search order; meant for the small 3-regular exchange graphs
    of finite type."""
    if g1.order() != g2.order() or g1.size() != g2.size():
        return False
    adj1 = {k: set(v) for k, v in g1.adjacency().items()}
    adj2 = {k: set(v) for k, v in g2.adjacency().items()}

    def profile(adj, start):
        dist = {start: 0}
        frontier = [start]
        order = []
        while frontier:
            order.append(len(frontier))
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return tuple(order)

    prof1 = {v: profile(adj1, v) for v in adj1}
    prof2 = {v: profile(adj2, v) for v in adj2}
    if sorted(prof1.values()) != sorted(prof2.values()):
        return False

    # BFS order: every node after the first has a previously-mapped
    # neighbour, so candidate images come from neighbour intersections
    start = min(adj1, key=lambda v: (prof1[v], v))
    nodes1 = [start]
    seen = {start}
    q = deque([start])
    while q:
        v = q.popleft()
        for w in sorted(adj1[v]):
            if w not in seen:
                seen.add(w)
                nodes1.append(w)
                q.append(w)

    mapping: dict = {}
    used = set()

    def backtrack(idx: int) -> bool:
        if idx == len(nodes1):
            return True
        v = nodes1[idx]
        mapped_nbrs = [mapping[u] for u in adj1[v] if u in mapping]
        if mapped_nbrs:
            candidates = set(adj2[mapped_nbrs[0]])
            for m in mapped_nbrs[1:]:
                candidates &= adj2[m]
        else:
            candidates = set(adj2)
        for w in sorted(candidates):
            if w in used or prof2[w] != prof1[v]:
                continue
            # adjacency counts must match both ways
            if sum(1 for x in adj2[w] if x in used) != len(mapped_nbrs):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(idx + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return backtrack(0)


# -- exports --------------------------------------------------------------------


def export_dot(graph: ExchangeGraphData) -> str:
    """Deterministic Graphviz DOT with seed keys as node ids and mutation
    indices as edge labels."""
    lines = ["graph exchange {"]
    ids = {key: f"s{i}" for i, key in enumerate(graph.vertices)}
    for key, node in ids.items():
        lines.append(f'  {node} [tooltip="{_dot_escape(key)}"];')
    for pair, label in sorted(
        graph.edges.items(), key=lambda kv: sorted(kv[0])
    ):
        pair = sorted(pair)
        if len(pair) == 1:
            continue
        a, b = pair
        lines.append(f'  {ids[a]} -- {ids[b]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace('"', "'")[:120]


def export_json(graph: ExchangeGraphData) -> str:
    return json.dumps(graph.to_json(), indent=1, sort_keys=True)


def export_csv(table: GrowthTable) -> str:
    return table.to_csv()


def export_svg(graph: ExchangeGraphData, width: int = 640, height: int = 640) -> str:
    """SVG render: planar seeds are drawn geometrically with the belt line;
    other seed types fall back to a circular graph layout."""
    seeds = list(graph.vertices.values())
    if seeds and isinstance(seeds[0], PlanarSeed):
        return _svg_planar(graph, width, height)
    return _svg_circle(graph, width, height)


def _svg_planar(graph: ExchangeGraphData, width: int, height: int) -> str:
    d = next(iter(graph.vertices.values())).chart.d
    shapes = []
    pts = []
    for seed in graph.vertices.values():
        if seed.kind == "triangle":
            coords = [v.to_floats(d) for v in seed.vertices]
            pts.extend(coords)
            shapes.append(("polygon", coords, seed.is_acute()))
        else:
            ends = [v.to_floats(d) for v in seed.vertices if v is not None]
            ray = seed.ray.to_floats(d)
            coords = [
                (ends[0][0] + ray[0], ends[0][1] + ray[1]),
                ends[0],
                ends[1],
                (ends[1][0] + ray[0], ends[1][1] + ray[1]),
            ]
            pts.extend(ends)
            shapes.append(("polyline", coords, False))
    if not pts:
        return _svg_document(width, height, [])
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    initial = graph.vertices[graph.initial_key]
    belt = initial.chart.belt
    b0 = belt.base.to_floats(d)
    e = belt.e.to_floats(d)
    span = max(xs) - min(xs) + max(ys) - min(ys) + 1.0
    pts_belt = [
        (b0[0] - 2 * span * e[0], b0[1] - 2 * span * e[1]),
        (b0[0] + 2 * span * e[0], b0[1] + 2 * span * e[1]),
    ]
    xs.extend(p[0] for p in pts_belt)
    ys.extend(p[1] for p in pts_belt)
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    pad = 0.05 * max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    lo_x, hi_x, lo_y, hi_y = lo_x - pad, hi_x + pad, lo_y - pad, hi_y + pad
    scale = min(width / (hi_x - lo_x), height / (hi_y - lo_y))

    def tx(p):
        return (
            round((p[0] - lo_x) * scale, 2),
            round(height - (p[1] - lo_y) * scale, 2),
        )

    elements = []
    for kind, coords, acute in shapes:
        path = " ".join(f"{tx(c)[0]},{tx(c)[1]}" for c in coords)
        colour = "#3b6ea5" if acute else "#a0a0a0"
        if kind == "polygon":
            elements.append(
                f'<polygon points="{path}" fill="none" stroke="{colour}" stroke-width="1"/>'
            )
        else:
            elements.append(
                f'<polyline points="{path}" fill="none" stroke="{colour}" stroke-width="1"/>'
            )
    b1, b2 = tx(pts_belt[0]), tx(pts_belt[1])
    elements.append(
        f'<line x1="{b1[0]}" y1="{b1[1]}" x2="{b2[0]}" y2="{b2[1]}" '
        'stroke="#c0392b" stroke-width="1.5" stroke-dasharray="6,3"/>'
    )
    return _svg_document(width, height, elements)


def _svg_circle(graph: ExchangeGraphData, width: int, height: int) -> str:
    from math import cos, pi, sin

    keys = list(graph.vertices)
    n = len(keys)
    cx, cy, r = width / 2, height / 2, min(width, height) / 2 - 20
    pos = {
        key: (
            round(cx + r * cos(2 * pi * i / max(n, 1)), 2),
            round(cy + r * sin(2 * pi * i / max(n, 1)), 2),
        )
        for i, key in enumerate(keys)
    }
    elements = []
    for pair in sorted(graph.edges, key=lambda p: sorted(p)):
        pair = sorted(pair)
        if len(pair) == 1:
            continue
        a, b = pair
        elements.append(
            f'<line x1="{pos[a][0]}" y1="{pos[a][1]}" x2="{pos[b][0]}" '
            f'y2="{pos[b][1]}" stroke="#888" stroke-width="0.7"/>'
        )
    for key in keys:
        elements.append(
            f'<circle cx="{pos[key][0]}" cy="{pos[key][1]}" r="3" fill="#3b6ea5"/>'
        )
    return _svg_document(width, height, elements)


def _svg_document(width: int, height: int, elements) -> str:
    body = "\n".join(f"  {e}" for e in elements)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n{body}\n</svg>\n'
    )
