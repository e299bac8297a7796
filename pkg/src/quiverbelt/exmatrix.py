"""Skew-symmetric exchange matrices with cosine weights and their mutation.

Matrices store exact field elements lifted to a common level.  Mutation
resolves the absolute values in the exchange rule through certified signs,
classification searches the mutation class (up to simultaneous index
permutation) for an acyclic representative and compares the Markov
constant against 4.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional

from quiverbelt.cycfield import FieldElem, cos_multiple

_PERMS3 = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
_PERMS2 = ((0, 1), (1, 0))


class NotCosineForm(ValueError):
    """An entry is not of the form +-2cos(pi k / l)."""


class SearchBudgetExceeded(RuntimeError):
    """Mutation-class search ran out of budget; .partial holds progress."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ExchangeMatrix:
    """Immutable skew-symmetric matrix of FieldElems, rank 2 or 3."""

    __slots__ = ("rank", "level", "entries", "_key")

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        rank = len(rows)
        if rank not in (2, 3) or any(len(r) != rank for r in rows):
            raise ValueError("entries must form a 2x2 or 3x3 matrix")
        level = 1
        for r in rows:
            for e in r:
                if isinstance(e, FieldElem):
                    level = lcm(level, e.level)
        if level == 1:
            level = 2
        lifted = []
        for r in rows:
            out = []
            for e in r:
                if isinstance(e, FieldElem):
                    out.append(e.lift(level))
                else:
                    out.append(FieldElem.from_rational(level, e))
            lifted.append(tuple(out))
        for i in range(rank):
            if not lifted[i][i].is_zero():
                raise ValueError("diagonal entries must vanish")
            for j in range(i + 1, rank):
                if not (lifted[i][j] + lifted[j][i]).is_zero():
                    raise ValueError("matrix must be skew-symmetric")
        self.rank = rank
        self.level = level
        self.entries = tuple(lifted)
        self._key: Optional[str] = None

    @staticmethod
    def from_upper(b12, b13=None, b23=None) -> "ExchangeMatrix":
        """Build from upper-triangle entries: (b12,) for rank 2, else
        (b12, b13, b23)."""
        if b13 is None and b23 is None:
            z = 0
            return ExchangeMatrix([[z, b12], [_neg(b12), z]])
        return ExchangeMatrix(
            [
                [0, b12, b13],
                [_neg(b12), 0, b23],
                [_neg(b13), _neg(b23), 0],
            ]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, ExchangeMatrix)
            and other.rank == self.rank
            and other.level == self.level
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.level, self.entries))

    def __repr__(self):
        return f"ExchangeMatrix(rank={self.rank}, level={self.level})"

    def to_json(self):
        return {
            "rank": self.rank,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @staticmethod
    def from_json(data) -> "ExchangeMatrix":
        return ExchangeMatrix(
            [[FieldElem.from_json(e) for e in row] for row in data["entries"]]
        )

    def permuted(self, perm) -> "ExchangeMatrix":
        """Simultaneous row/column permutation: entry (i,j) of the result is
        entry (perm[i], perm[j])."""
        return ExchangeMatrix(
            [[self.entries[perm[i]][perm[j]] for j in range(self.rank)] for i in range(self.rank)]
        )

    def serialised(self) -> str:
        return ";".join(
            self.entries[i][j].key()
            for i in range(self.rank)
            for j in range(self.rank)
            if i != j
        )

    def canonical_key(self) -> str:
        """Lexicographically minimal serialisation over simultaneous
        permutations; identifies matrices up to reordering of indices."""
        if self._key is None:
            perms = _PERMS3 if self.rank == 3 else _PERMS2
            self._key = min(self.permuted(p).serialised() for p in perms)
        return self._key

    def sign_pattern(self):
        return tuple(
            tuple(e.sign() for e in row) for row in self.entries
        )

    def to_float(self):
        return [[e.to_float() for e in row] for row in self.entries]


def _neg(x):
    if isinstance(x, FieldElem):
        return -x
    return -Fraction(x)


def mutate(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at direction k (0-based); an involution."""
    r = B.rank
    if not 0 <= k < r:
        raise IndexError("mutation index out of range")
    e = B.entries
    half = Fraction(1, 2)
    new = [[e[i][j] for j in range(r)] for i in range(r)]
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            if i == k or j == k:
                new[i][j] = -e[i][j]
            else:
                bik, bkj = e[i][k], e[k][j]
                correction = (bik * bkj.abs() + bik.abs() * bkj) * half
                new[i][j] = e[i][j] + correction
    return ExchangeMatrix(new)


def is_acyclic(B: ExchangeMatrix) -> bool:
    """True iff the sign digraph (arrow i->j when b_ij > 0) has no oriented
    cycle; rank-2 matrices are always acyclic."""
    if B.rank == 2:
        return True
    s = B.sign_pattern()
    cycle_a = s[0][1] > 0 and s[1][2] > 0 and s[2][0] > 0
    cycle_b = s[0][1] < 0 and s[1][2] < 0 and s[2][0] < 0
    return not (cycle_a or cycle_b)


def markov_constant(B: ExchangeMatrix) -> FieldElem:
    """C(B): sum of squared off-diagonal entries, plus or minus the absolute
    triple product according to acyclicity."""
    if B.rank != 3:
        raise ValueError("the Markov constant is defined for rank 3")
    b12, b13, b23 = B[0, 1], B[0, 2], B[1, 2]
    squares = b12 * b12 + b13 * b13 + b23 * b23
    triple = (b12 * b23 * b13).abs()
    if is_acyclic(B):
        return squares + triple
    return squares - triple


def entry_cosine_form(e: FieldElem) -> tuple[int, int]:
    """Match |e| against 2cos(pi k / l); returns (k, l) in lowest terms or
    raises NotCosineForm.  Rational values are settled by Niven's theorem
    (2cos of a rational angle is rational only for 0, +-1, +-2); irrational
    ones are scanned over the angle denominators representable inside the
    entry's field."""
    return _cosine_form_cached(e.abs())


@lru_cache(maxsize=None)
def _cosine_form_cached(a: FieldElem) -> tuple[int, int]:
    if a.is_zero():
        return (1, 2)  # 0 = 2cos(pi/2)
    if a.is_rational():
        q = a.as_rational()
        if q == 1:
            return (1, 3)
        if q == 2:
            return (0, 1)
        raise NotCosineForm(f"rational entry {q} is not 2cos(pi k/l)")
    d = a.level
    for k in range(1, d + 1):
        if a == cos_multiple(d, k):
            g = gcd(k, d)
            return (k // g, d // g)
    # entries may live at a coarser angle denominator than the ambient level
    for l in range(3, 2 * d + 4):
        for k in range(1, (l + 1) // 2):
            if gcd(k, l) != 1:
                continue
            target_level = lcm(d, l)
            if a.lift(target_level) == cos_multiple(l, k).lift(target_level):
                return (k, l)
    raise NotCosineForm(f"entry {a!r} is not of the form 2cos(pi k/l)")


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of the finite-mutation-type trichotomy."""

    kind: str  # "finite" | "affine" | "markov" | "mutation_infinite"
    markov: Optional[FieldElem] = None
    pair: Optional[tuple[Fraction, Fraction]] = None  # finite type (t1, t2)
    level: Optional[int] = None  # affine: the common denominator d
    normal_form: Optional[ExchangeMatrix] = None
    class_size: Optional[int] = None
    closed: bool = False

    def __str__(self):
        if self.kind == "finite":
            return f"FiniteType(t1={self.pair[0]}, t2={self.pair[1]})"
        if self.kind == "affine":
            return f"Affine(d={self.level})"
        if self.kind == "markov":
            return "MarkovClass"
        return "MutationInfinite"


SPHERICAL_PAIRS = (
    (Fraction(1, 3), Fraction(1, 3)),
    (Fraction(1, 3), Fraction(1, 4)),
    (Fraction(1, 3), Fraction(1, 5)),
    (Fraction(1, 3), Fraction(2, 5)),
    (Fraction(1, 5), Fraction(2, 5)),
)


def spherical_matrix(t1: Fraction, t2: Fraction) -> ExchangeMatrix:
    """Path-quiver normal form with weights 2cos(pi t1), 2cos(pi t2)."""
    level = lcm(t1.denominator, t2.denominator)
    w1 = cos_multiple(level, t1.numerator * (level // t1.denominator))
    w2 = cos_multiple(level, t2.numerator * (level // t2.denominator))
    return ExchangeMatrix.from_upper(w1, FieldElem.zero(level), w2)


def markov_matrix() -> ExchangeMatrix:
    two = FieldElem.from_rational(2, 2)
    return ExchangeMatrix.from_upper(two, -two, two)


def affine_normal_form(d: int) -> ExchangeMatrix:
    """The cyclically-ordered affine representative: two parallel lines and a
    transversal meeting them at angle pi/d."""
    two = FieldElem.from_rational(d, 2)
    w = cos_multiple(d, 1)
    return ExchangeMatrix.from_upper(two, -w, w)


def mutation_class(B: ExchangeMatrix, budget: int = 512):
    """BFS closure of the mutation class up to simultaneous permutation.

    Returns (members, closed) where members maps canonical key to a
    representative, in deterministic BFS order.  Raises
    SearchBudgetExceeded (carrying the partial map) when the closure is not
    reached within `budget` matrices.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    start = B
    members: dict[str, ExchangeMatrix] = {start.canonical_key(): start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for k in range(current.rank):
            nxt = mutate(current, k)
            key = nxt.canonical_key()
            if key not in members:
                if len(members) >= budget:
                    raise SearchBudgetExceeded(
                        f"mutation class exceeded budget {budget}", partial=members
                    )
                members[key] = nxt
                queue.append(nxt)
    return members, True


def classify(B: ExchangeMatrix, budget: int = 512) -> ClassificationResult:
    """Finite-mutation-type trichotomy for rank-3 cosine matrices.

    Searches the mutation class for an acyclic representative.  A class
    that closes without one is the Markov class.  Otherwise the Markov
    constant C of the representative decides: C > 4 certifies infinite
    type, C = 4 is affine (with d the least common denominator of the
    entry angles), C < 4 closes onto one of the five spherical pairs.
    """
    if B.rank != 3:
        raise ValueError("classification applies to rank 3")
    for i in range(3):
        for j in range(i + 1, 3):
            entry_cosine_form(B[i, j])

    members: dict[str, ExchangeMatrix] = {B.canonical_key(): B}
    queue = deque([B])
    acyclic_rep: Optional[ExchangeMatrix] = None
    blowup = False
    closed = True
    if is_acyclic(B):
        acyclic_rep = B
    while queue:
        current = queue.popleft()
        for k in range(3):
            nxt = mutate(current, k)
            key = nxt.canonical_key()
            if key in members:
                continue
            if len(members) >= budget:
                closed = False
                queue.clear()
                break
            members[key] = nxt
            queue.append(nxt)
            if acyclic_rep is None and is_acyclic(nxt):
                acyclic_rep = nxt
            if any(
                (nxt[i, j] * nxt[i, j] - 4).sign() > 0
                for i in range(3)
                for j in range(i + 1, 3)
            ):
                # an entry beyond 2 in absolute value: hyperbolic blow-up
                blowup = True
                queue.clear()
                closed = False
                break

    if acyclic_rep is None:
        if closed:
            return ClassificationResult(
                kind="markov",
                markov=markov_constant(B),
                class_size=len(members),
                closed=True,
            )
        raise SearchBudgetExceeded(
            "no acyclic representative within budget", partial=members
        )

    c = markov_constant(acyclic_rep)
    four = FieldElem.from_rational(c.level, 4)
    comparison = (c - four).sign()
    if comparison > 0 or (blowup and comparison != 0):
        return ClassificationResult(
            kind="mutation_infinite",
            markov=c,
            class_size=len(members),
            closed=closed,
        )
    if comparison == 0:
        level = 1
        for i in range(3):
            for j in range(i + 1, 3):
                level = lcm(level, entry_cosine_form(B[i, j])[1])
        if level == 1:
            level = 3  # all entries in {0, +-2}: the equilateral class
        return ClassificationResult(
            kind="affine",
            markov=c,
            level=level,
            normal_form=acyclic_rep,
            class_size=len(members),
            closed=closed,
        )
    if not closed:
        raise SearchBudgetExceeded(
            "C < 4 but class not closed within budget", partial=members
        )
    for t1, t2 in SPHERICAL_PAIRS:
        candidate = spherical_matrix(t1, t2)
        if candidate.level % B.level == 0 or B.level % candidate.level == 0:
            target_level = lcm(candidate.level, B.level)
            cand_key = _lift_matrix(candidate, target_level).canonical_key()
            if any(
                _lift_matrix(m, target_level).canonical_key() == cand_key
                for m in members.values()
            ):
                return ClassificationResult(
                    kind="finite",
                    markov=c,
                    pair=(t1, t2),
                    normal_form=candidate,
                    class_size=len(members),
                    closed=True,
                )
    raise NotCosineForm(
        "closed class with C < 4 matches no spherical normal form"
    )


def _lift_matrix(B: ExchangeMatrix, level: int) -> ExchangeMatrix:
    if B.level == level:
        return B
    return ExchangeMatrix([[e.lift(level) for e in row] for row in B.entries])
