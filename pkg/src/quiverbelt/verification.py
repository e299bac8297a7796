"""Named verification suites.

Each check encapsulates one acceptance-grade assertion about the library:
rank-2 periods, finite-type counts, the Verlinde identity, linear
independence ranks, the geometric invariants of affine exchange graphs,
belt periodicity, translated belts, the quotient census, growth, even
denominators, and the number-theory suite.  The CLI `verify` subcommand
and the acceptance tests both run these.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import cos, gcd, pi
from typing import Callable, Optional

from quiverbelt import exgraph, rank2, seedgeom
from quiverbelt.cycfield import (
    FieldElem,
    cos_multiple,
    dedekind_det,
    estimate_check,
    integrality_check,
    inv_sin_sq,
    rational_rank,
    units_up_to_half,
    verlinde_sum,
)
from quiverbelt.exmatrix import SPHERICAL_PAIRS, spherical_matrix
from quiverbelt.intpoly import euler_totient, watkins_zeitlin_check
from quiverbelt.planegeom import cross_q, midpoint


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float


_GRAPHS: dict = {}


def affine_graph(d: int, depth: int = 12) -> exgraph.ExchangeGraphData:
    key = (d, depth)
    if key not in _GRAPHS:
        _GRAPHS[key] = exgraph.bfs(seedgeom.initial_seed(d), depth_limit=depth)
    return _GRAPHS[key]


# expected seed counts of the five finite-type classes; the first three are
# the A3, B3, and H3 associahedra.  Note the two H3-related classes: the
# (1/3,2/5) class has 48 seeds and the (1/5,2/5) class 40, which both this
# implementation and the independent floating-point oracle below produce;
# the narrative sentence pairing 40 with (1/3,2/5) swaps the two.
FINITE_TYPE_COUNTS = {
    (Fraction(1, 3), Fraction(1, 3)): 14,
    (Fraction(1, 3), Fraction(1, 4)): 20,
    (Fraction(1, 3), Fraction(1, 5)): 32,
    (Fraction(1, 3), Fraction(2, 5)): 48,
    (Fraction(1, 5), Fraction(2, 5)): 40,
}


def check_rank2_periods(max_b: int = 24, **_) -> CheckResult:
    """Anchored orbit periods plus the closed formula across the grid."""
    t0 = time.time()
    anchors = []
    s13 = rank2.SectorSeed(1, 3)
    anchors.append(rank2.orbit_period(s13, rank2.ReferencePoint2D(10, 3))[0] == 5)
    anchors.append(rank2.orbit_period(s13, rank2.ReferencePoint2D(0, 3))[0] == 7)
    compat = {}
    for a, b in ((1, 4), (1, 6)):
        seed = rank2.SectorSeed(a, b)
        compat[(a, b)] = {
            rank2.orbit_period(seed, u)[0]
            for u in rank2.chambers(b)
            if rank2.is_compatible(u, seed)
        }
    anchors.append(compat[(1, 4)] == {6})
    anchors.append(compat[(1, 6)] == {8})
    mismatches = 0
    cases = 0
    for b in range(3, max_b + 1):
        for a in range(1, (b + 1) // 2):
            if 2 * a >= b or gcd(a, b) != 1:
                continue
            seed = rank2.SectorSeed(a, b)
            for u in rank2.chambers(b):
                period, lazy = rank2.orbit_period(seed, u)
                flags = rank2.reference_flags(seed, u)
                cases += 1
                if period != rank2.period_formula(a, b, *flags):
                    mismatches += 1
                if lazy % 2 != 0:
                    mismatches += 1
    ok = all(anchors) and mismatches == 0
    return CheckResult(
        "rank2-periods",
        ok,
        f"anchors 5/7/6/8 {'ok' if all(anchors) else 'FAILED'}; "
        f"{cases} grid cases, {mismatches} formula mismatches",
        time.time() - t0,
    )


def _float_oracle_count(w1: float, w2: float, lam, cap: int = 6000):
    """Independent brute-force BFS over floating-point seed data."""
    G = [[2.0, -abs(w1), 0.0], [-abs(w1), 2.0, -abs(w2)], [0.0, -abs(w2), 2.0]]
    B0 = ((0.0, w1, 0.0), (-w1, 0.0, w2), (0.0, -w2, 0.0))
    perms = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))

    def pair(x, y):
        return sum(x[i] * G[i][j] * y[j] for i in range(3) for j in range(3))

    def key(vs, B):
        best = None
        for p in perms:
            parts = []
            for i in range(3):
                parts.extend(round(c, 7) + 0.0 for c in vs[p[i]])
            parts.extend(
                round(B[p[i]][p[j]], 7) + 0.0
                for i in range(3)
                for j in range(3)
                if i != j
            )
            t = tuple(parts)
            if best is None or t < best:
                best = t
        return best

    def mutate_b(B, k):
        out = [[0.0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                if i == k or j == k:
                    out[i][j] = -B[i][j]
                else:
                    out[i][j] = B[i][j] + (
                        B[i][k] * abs(B[k][j]) + abs(B[i][k]) * B[k][j]
                    ) / 2
        return tuple(tuple(r) for r in out)

    def mut(vs, B, k):
        s = -sum(vs[k][i] * lam[i] for i in range(3))
        if abs(s) < 1e-9:
            raise ArithmeticError("degenerate reference")
        positive = s < 0
        nv = list(vs)
        nv[k] = tuple(-c for c in vs[k])
        for i in range(3):
            if i == k:
                continue
            bs = B[i][k]
            reflect = (bs < -1e-12) if positive else (bs > 1e-12)
            if reflect:
                f = pair(vs[i], vs[k])
                nv[i] = tuple(vs[i][t] - f * vs[k][t] for t in range(3))
        return tuple(nv), mutate_b(B, k)

    start = (((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)), B0)
    seen = {key(*start)}
    queue = deque([start])
    while queue:
        vs, B = queue.popleft()
        for k in range(3):
            nxt = mut(vs, B, k)
            nk = key(*nxt)
            if nk not in seen:
                if len(seen) >= cap:
                    return None
                seen.add(nk)
                queue.append(nxt)
    return len(seen)


def check_finite_type_counts(seed: int = 2024, **_) -> CheckResult:
    """Closure counts of the five spherical classes, twice per class with
    independently sampled compatible reference points, isomorphism between
    the two runs, and a floating-point brute-force cross-check."""
    t0 = time.time()
    rng = random.Random(seed)
    problems = []
    counts = {}
    for pair in SPHERICAL_PAIRS:
        B = spherical_matrix(*pair)
        cap = FINITE_TYPE_COUNTS[pair] + 16
        _, g1 = exgraph.compatible_spherical_graph(B, rng, vertex_cap=cap)
        _, g2 = exgraph.compatible_spherical_graph(B, rng, vertex_cap=cap)
        expected = FINITE_TYPE_COUNTS[pair]
        counts[pair] = g1.order()
        if not (g1.closed and g2.closed):
            problems.append(f"{pair}: not closed")
        if g1.order() != expected:
            problems.append(f"{pair}: {g1.order()} != {expected}")
        if g1.order() != g2.order() or not exgraph.graphs_isomorphic(g1, g2):
            problems.append(f"{pair}: reference dependence")
        if not all(len(v) == 3 for v in g1.adjacency().values()):
            problems.append(f"{pair}: not 3-regular")
    # brute-force float oracle over the two H3-related classes
    for pair in ((Fraction(1, 3), Fraction(2, 5)), (Fraction(1, 5), Fraction(2, 5))):
        w1 = 2 * cos(pi * pair[0])
        w2 = 2 * cos(pi * pair[1])
        oracle_sizes = set()
        orng = random.Random(seed + 1)
        while len(oracle_sizes) == 0:
            lam = [orng.uniform(-10, 10) for _ in range(3)]
            try:
                n = _float_oracle_count(w1, w2, lam, cap=FINITE_TYPE_COUNTS[pair] + 8)
            except ArithmeticError:
                continue
            if n is not None:
                oracle_sizes.add(n)
        if oracle_sizes != {FINITE_TYPE_COUNTS[pair]}:
            problems.append(f"oracle disagrees for {pair}: {oracle_sizes}")
    detail = ", ".join(
        f"({p[0]},{p[1]})={n}" for p, n in counts.items()
    )
    return CheckResult(
        "finite-type-counts",
        not problems,
        detail + ("; " + "; ".join(problems) if problems else ""),
        time.time() - t0,
    )


def check_verlinde(n_max: int = 25, **_) -> CheckResult:
    t0 = time.time()
    bad = [
        n
        for n in range(1, n_max + 1)
        if verlinde_sum(n) != Fraction(2 * n * (n + 1), 3)
    ]
    return CheckResult(
        "verlinde",
        not bad,
        f"n <= {n_max} exact" + (f"; failures {bad}" if bad else ""),
        time.time() - t0,
    )


def check_independence_ranks(**_) -> CheckResult:
    t0 = time.time()
    problems = []
    for d in (3, 5, 7, 9, 11, 13, 15):
        units = units_up_to_half(d)
        rank = rational_rank([inv_sin_sq(d, k) for k in units])
        if rank != euler_totient(d) // 2:
            problems.append(f"d={d}: rank {rank}")
    for n in range(1, 9):
        if dedekind_det(n).is_zero():
            problems.append(f"dedekind({n}) = 0")
    return CheckResult(
        "independence-ranks",
        not problems,
        "ranks phi(d)/2 for d in 3..15 odd; dedekind dets nonzero for n <= 8"
        + ("; " + "; ".join(problems) if problems else ""),
        time.time() - t0,
    )


def _cyclic_orientation(seed) -> int:
    """Geometric orientation of a cyclic quiver: the arrow cycle traced
    through side midpoints, as a signed area."""
    signs = seed.B.sign_pattern()
    succ = {}
    for i in range(3):
        for j in range(3):
            if i != j and signs[i][j] > 0:
                succ[i] = j
    order = [0, succ[0], succ[succ[0]]]
    mids = []
    for i in order:
        a, b = seed.endpoints_of_side(i)
        mids.append(midpoint(a, b))
    return cross_q(mids[1] - mids[0], mids[2] - mids[0]).sign()


def check_affine_invariants(levels=(3, 5, 7, 9), depth: int = 12, **_) -> CheckResult:
    """T conserved along edges, feet on the belt, acute iff acyclic,
    the orientation rule, and translation witnesses parallel to the belt."""
    t0 = time.time()
    problems = []
    for d in levels:
        graph = affine_graph(d, depth)
        s0 = graph.vertices[graph.initial_key]
        t_ref = s0.chart.t0
        values = {}
        for key, s in graph.vertices.items():
            values[key] = seedgeom.t_invariant(s)
            if values[key] != t_ref:
                problems.append(f"d={d}: T broken at {key[:30]}")
                break
            if not seedgeom.feet_on_belt(s):
                problems.append(f"d={d}: feet off belt")
                break
            if s.kind == "triangle":
                srcs, snks = seedgeom._source_sink_lists(s.B)
                acyclic = bool(srcs or snks)
                if d % 2 == 1 and s.is_acute() != acyclic:
                    problems.append(f"d={d}: acute/acyclic mismatch")
                    break
                if srcs and snks:
                    # oriented towards the reference point: sources positive,
                    # sinks negative
                    if any(seedgeom.positivity(s, i) != 1 for i in srcs) or any(
                        seedgeom.positivity(s, i) != -1 for i in snks
                    ):
                        problems.append(f"d={d}: orientation rule broken")
                        break
        # cyclic orientations match the belt side
        expected = {}
        for s in graph.vertices.values():
            if s.kind == "triangle" and s.is_obtuse():
                tag = seedgeom.orientation_tag(s)
                orient = _cyclic_orientation(s)
                if tag in expected and expected[tag] != orient:
                    problems.append(f"d={d}: obtuse orientation inconsistent")
                    break
                expected[tag] = orient
        if len(expected) == 2 and len(set(expected.values())) != 2:
            problems.append(f"d={d}: opposite belt sides share an orientation")
        # translations parallel to the belt (raises inside on violation)
        try:
            exgraph.lattice_report(graph, d)
        except RuntimeError as exc:
            problems.append(f"d={d}: {exc}")
    return CheckResult(
        "affine-invariants",
        not problems,
        f"levels {tuple(levels)} to depth {depth}"
        + ("; " + "; ".join(problems[:4]) if problems else ""),
        time.time() - t0,
    )


def check_belt_periodicity(levels=(3, 5, 7), **_) -> CheckResult:
    """I_n vs I_{n+6}: a translation of exact length 4 T(initial)."""
    t0 = time.time()
    problems = []
    for d in levels:
        s0 = seedgeom.initial_seed(d)
        belt = exgraph.acyclic_belt(s0, 9)
        target = 4 * s0.chart.t0
        for n in range(len(belt) - 6):
            w = seedgeom.translation_between(belt[n], belt[n + 6])
            if w is None:
                problems.append(f"d={d}: no translation at offset {n}")
                break
            from quiverbelt.planegeom import length_along

            if length_along(d, w, s0.chart.belt.dir_class) != target:
                problems.append(f"d={d}: wrong translation length")
                break
    return CheckResult(
        "belt-periodicity",
        not problems,
        f"levels {tuple(levels)}: |I_n -> I_n+6| = 4T exactly"
        + ("; " + "; ".join(problems) if problems else ""),
        time.time() - t0,
    )


def check_translated_belts(levels=(5, 7), depth: int = 12, **_) -> CheckResult:
    """Each generator s_k witnessed by a region mutation, and the
    translated belt is a full subgraph of the window."""
    t0 = time.time()
    problems = []
    for d in levels:
        graph = affine_graph(d, depth)
        units = [k for k in range(1, d // 2 + 1) if gcd(k, d) == 1]
        initial = graph.vertices[graph.initial_key]
        for k in units:
            length = exgraph._witness_region_translation(graph, d, k)
            if length is None:
                problems.append(f"d={d}: no region witness for k={k}")
                continue
            if length != exgraph.s_k_length(d, k):
                problems.append(f"d={d}: witness length != s_{k}")
            e = initial.chart.belt.e
            w = e.scale(length)
            if not exgraph.belt_subgraph_check(graph, w, steps=6):
                problems.append(f"d={d}: belt subgraph check failed for k={k}")
    return CheckResult(
        "translated-belts",
        not problems,
        f"levels {tuple(levels)}: s_k witnessed and belts are full subgraphs"
        + ("; " + "; ".join(problems) if problems else ""),
        time.time() - t0,
    )


def check_quotient_census(levels=(5, 7), depth: int = 12, **_) -> CheckResult:
    """Occurring angle triples are the gcd-1 triples; every (angles,
    quiver) class splits into exactly two translation classes."""
    t0 = time.time()
    problems = []
    for d in levels:
        graph = affine_graph(d, depth)
        census, triples = exgraph.quotient_census(graph)
        expected = exgraph.gcd_one_triples(d)
        if triples != expected:
            problems.append(
                f"d={d}: triples {sorted(triples)} != {sorted(expected)}"
            )
        for cls, tags in census.items():
            if sorted(tags) != [-1, 1] or any(v != 1 for v in tags.values()):
                problems.append(f"d={d}: class {cls[0]} has tags {tags}")
                break
    return CheckResult(
        "quotient-census",
        not problems,
        f"levels {tuple(levels)}: gcd-1 triples and 2 classes each"
        + ("; " + "; ".join(problems[:3]) if problems else ""),
        time.time() - t0,
    )


def check_growth(n_max: int = 36, **_) -> CheckResult:
    """d=3 linear within a bounded ratio band; d=5 log-log slope near 2.

    The slope is the least-squares fit over the last third of the table:
    the additive quasi-isometry constants make early windows read high
    (gr(n) for d=5 fits ~20(n-4)^2, whose log-slope over small n exceeds
    the asymptotic degree)."""
    t0 = time.time()
    problems = []
    lo = 2 * n_max // 3
    table3 = exgraph.growth(seedgeom.initial_seed(3), n_max)
    ratios = [g / n for n, g in table3.entries if 8 <= n <= 24]
    c1, c2 = min(ratios), max(ratios)
    if c2 / c1 > 2.0:
        problems.append(f"d=3: gr(n)/n spans [{c1:.2f},{c2:.2f}]")
    deg3 = table3.degree_estimate(lo, n_max)
    if not 0.65 <= deg3 <= 1.35:
        problems.append(f"d=3: degree {deg3:.2f}")
    table5 = exgraph.growth(seedgeom.initial_seed(5), n_max)
    deg5 = table5.degree_estimate(lo, n_max)
    if not 1.65 <= deg5 <= 2.35:
        problems.append(f"d=5: degree {deg5:.2f}")
    return CheckResult(
        "growth",
        not problems,
        f"d=3 sandwiched by {c1:.2f}n..{c2:.2f}n, degree {deg3:.2f}; "
        f"d=5 degree {deg5:.2f} over [{lo},{n_max}] "
        f"(plain ball slope {table5.loglog_slope(lo, n_max):.2f})"
        + ("; " + "; ".join(problems) if problems else ""),
        time.time() - t0,
    )


def check_even_denominators(levels=(4, 6, 8), depth: int = 12, **_) -> CheckResult:
    """rank R = phi(d)/2 exactly; observed L-rank within the allowed pair."""
    t0 = time.time()
    problems = []
    details = []
    for d in levels:
        graph = affine_graph(d, depth)
        report = exgraph.lattice_report(graph, d)
        details.append(report.summary())
        if report.rank_r != report.predicted_rank_r:
            problems.append(f"d={d}: rank R {report.rank_r}")
        if report.rank_observed not in report.predicted_l_ranks:
            problems.append(f"d={d}: L-rank {report.rank_observed}")
    return CheckResult(
        "even-denominators",
        not problems,
        "; ".join(details) + ("; " + "; ".join(problems) if problems else ""),
        time.time() - t0,
    )


def check_number_theory(**_) -> CheckResult:
    """Watkins-Zeitlin identities, the product-to-sum grid, and cyclotomic
    unit verdicts."""
    t0 = time.time()
    problems = []
    for n in range(1, 11):
        if not watkins_zeitlin_check(n):
            problems.append(f"watkins-zeitlin n={n}")
    for d in range(2, 31):
        for a in range(0, d + 1, max(1, d // 5)):
            for b in range(0, d + 1, max(1, d // 5)):
                lhs = cos_multiple(d, a) * cos_multiple(d, b)
                rhs = cos_multiple(d, a + b) + cos_multiple(d, a - b)
                if lhs != rhs:
                    problems.append(f"product-to-sum d={d},a={a},b={b}")
    for d in range(3, 16, 2):
        for k in units_up_to_half(d):
            if integrality_check(d, k) != (True, True):
                problems.append(f"integrality d={d},k={k}")
    for n in (1, 2, 12):
        if not estimate_check(n):
            problems.append(f"estimate n={n}")
    return CheckResult(
        "number-theory",
        not problems,
        "watkins-zeitlin n<=10, product-to-sum d<=30, units d<=15"
        + ("; " + "; ".join(problems[:4]) if problems else ""),
        time.time() - t0,
    )


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "rank2-periods": check_rank2_periods,
    "finite-type-counts": check_finite_type_counts,
    "verlinde": check_verlinde,
    "independence-ranks": check_independence_ranks,
    "affine-invariants": check_affine_invariants,
    "belt-periodicity": check_belt_periodicity,
    "translated-belts": check_translated_belts,
    "quotient-census": check_quotient_census,
    "growth": check_growth,
    "even-denominators": check_even_denominators,
    "number-theory": check_number_theory,
}


def run_checks(
    names: Optional[list[str]] = None,
    levels: Optional[list[int]] = None,
    seed: int = 2024,
) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS.items():
        if names and name not in names:
            continue
        kwargs = {"seed": seed}
        if levels and name in ("affine-invariants",):
            kwargs["levels"] = tuple(levels)
        results.append(fn(**kwargs))
    return results
