"""Functional dependence over finite relations of frames and span points.

The central object is a :class:`Relation`: a finite set of (frame, point,
coordinate values) triples.  A coordinate slot "does not depend on" the
other frame vectors exactly when its value factors through the projection
onto (slot vector, point): any two entries of the relation that agree on
that pair must carry the same value.  :func:`factor_check` decides this on
finite data and, when factorization fails, returns the first colliding
pair in a deterministic scan order, so reports and fixtures are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError, ShapeError, SpanMembershipError
from .inner_product import GramInnerProduct, gram_schmidt
from .linalg import (
    Coordinates,
    Frame,
    Vector,
    as_vector,
    derive_seed,
    sample_frame,
    sample_span_point,
    solve_coordinates,
    span_contains,
)


@dataclass(frozen=True)
class RelationPoint:
    """One relation entry: a frame, a point of its span, and slot values.

    The canonical constructor :func:`relation_point` fills ``values`` with
    the exact coordinates of the point over the frame.  Building instances
    with arbitrary values is allowed (oracle tests rely on it), but span
    membership is always enforced.
    """

    frame: Frame
    point: Vector
    values: Coordinates

    def __post_init__(self) -> None:
        object.__setattr__(self, "point", as_vector(self.point))
        object.__setattr__(self, "values", as_vector(self.values))
        if len(self.values) != self.frame.size:
            raise ShapeError(
                f"{len(self.values)} values for a frame of {self.frame.size} vectors"
            )
        if not span_contains(self.frame, self.point):
            raise SpanMembershipError(
                f"point {self.point} is outside the frame's span"
            )


def relation_point(frame: Frame, point: Vector) -> RelationPoint:
    """Canonical entry: values are the exact coordinates of the point."""
    point = as_vector(point)
    return RelationPoint(frame, point, solve_coordinates(frame, point))


@dataclass(frozen=True)
class Relation:
    """A finite sequence of relation points, deterministic insertion order.

    All points share one ambient dimension and frame size; duplicate
    (frame, point) pairs are rejected.  Use :meth:`from_points` to build
    from a stream that may repeat entries.
    """

    points: tuple[RelationPoint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        shapes = {(p.frame.dim, p.frame.size) for p in self.points}
        if len(shapes) > 1:
            raise ShapeError(f"mixed (dim, size) shapes in relation: {sorted(shapes)}")
        seen = set()
        for p in self.points:
            key = (p.frame, p.point)
            if key in seen:
                raise ValueError(f"duplicate (frame, point) pair: {key}")
            seen.add(key)

    @classmethod
    def from_points(cls, points: Iterable[RelationPoint]) -> "Relation":
        """Build a relation, keeping the first of any duplicated pair."""
        seen = set()
        kept = []
        for p in points:
            key = (p.frame, p.point)
            if key not in seen:
                seen.add(key)
                kept.append(p)
        return cls(tuple(kept))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def take(self, indices: Iterable[int]) -> "Relation":
        """The sub-relation at the given indices, in insertion order."""
        picked = sorted(set(indices))
        return Relation(tuple(self.points[i] for i in picked))

    def union(self, other: "Relation") -> "Relation":
        return Relation.from_points(self.points + other.points)

    @property
    def slot_count(self) -> int:
        """Frame size m shared by all points; 0 for the empty relation."""
        return self.points[0].frame.size if self.points else 0


@dataclass(frozen=True)
class ProjectionKey:
    """What a slot value is allowed to depend on: (slot index, a_i, x)."""

    index: int
    vector: Vector
    point: Vector


def project(p: RelationPoint, index: int) -> ProjectionKey:
    """Projection of a relation point onto slot ``index`` (1-based)."""
    if not 1 <= index <= p.frame.size:
        raise IndexError(f"slot index {index} out of range 1..{p.frame.size}")
    return ProjectionKey(index, p.frame[index - 1], p.point)


@dataclass(frozen=True)
class Counterexample:
    """Two relation points sharing a projection key but not its value."""

    index: int
    first: RelationPoint
    second: RelationPoint

    @property
    def values(self) -> tuple[Fraction, Fraction]:
        return (self.first.values[self.index - 1], self.second.values[self.index - 1])


@dataclass(frozen=True, eq=False)
class FactorizationOutcome:
    """Either per-slot factor tables or the first counterexample found."""

    tables: tuple[dict[ProjectionKey, Fraction], ...] | None
    counterexample: Counterexample | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _scan_slot(
    points: Sequence[RelationPoint], index: int
) -> tuple[dict[ProjectionKey, Fraction], Counterexample | None]:
    table: dict[ProjectionKey, Fraction] = {}
    holder: dict[ProjectionKey, RelationPoint] = {}
    for q in points:
        key = project(q, index)
        value = q.values[index - 1]
        known = table.get(key)
        if known is None:
            table[key] = value
            holder[key] = q
        elif known != value:
            return table, Counterexample(index, holder[key], q)
    return table, None


def factor_check_points(points: Sequence[RelationPoint]) -> FactorizationOutcome:
    """Factorization scan over a raw point sequence.

    Same contract as :func:`factor_check` but without the Relation
    no-duplicates invariant, which makes it usable for tentative
    extensions (does adding this point break factorization?).
    """
    if not points:
        return FactorizationOutcome(tables=(), counterexample=None)
    shapes = {(p.frame.dim, p.frame.size) for p in points}
    if len(shapes) > 1:
        raise ShapeError(f"mixed (dim, size) shapes: {sorted(shapes)}")
    m = points[0].frame.size
    tables = []
    for index in range(1, m + 1):
        table, collision = _scan_slot(points, index)
        if collision is not None:
            return FactorizationOutcome(tables=None, counterexample=collision)
        tables.append(table)
    return FactorizationOutcome(tables=tuple(tables), counterexample=None)


def factor_check(rel: Relation) -> FactorizationOutcome:
    """Decide whether every slot value factors through its projection.

    Passes iff any two points agreeing on (slot vector, point) also agree
    on the slot's value; the tables returned are exactly those quotient
    functions.  Fails with the first collision in deterministic scan
    order: ascending slot index, then insertion order.
    """
    return factor_check_points(rel.points)


@dataclass(frozen=True)
class ClauseReport:
    """Pass/fail for a single slot of a two-vector relation."""

    index: int
    passed: bool
    counterexample: Counterexample | None


@dataclass(frozen=True)
class PairFactorizationReport:
    """Per-slot factorization verdicts for relations of vector pairs."""

    lambda_clause: ClauseReport
    mu_clause: ClauseReport

    @property
    def passed(self) -> bool:
        return self.lambda_clause.passed and self.mu_clause.passed


def check_pair_factorization(rel: Relation) -> PairFactorizationReport:
    """Check each slot of an m=2 relation separately.

    Clause one: the first coordinate may depend only on (a, x).  Clause
    two: the second may depend only on (b, x).  The empty relation passes
    both; any other frame size raises ShapeError.
    """
    if rel.points and rel.slot_count != 2:
        raise ShapeError(f"pair check needs frames of 2 vectors, got {rel.slot_count}")
    clauses = []
    for index in (1, 2):
        _, collision = _scan_slot(rel.points, index) if rel.points else ({}, None)
        clauses.append(ClauseReport(index, collision is None, collision))
    return PairFactorizationReport(*clauses)


def is_orthogonal_via_factorization(
    frame: Frame,
    witness_pool: Relation,
    points_per_frame: int = 4,
    bound: int = 5,
    seed: int = 0,
) -> bool:
    """Inner-product-free orthogonality of a frame, relative to witnesses.

    Samples span points of the candidate frame, joins them with the
    supplied witness pool, and passes iff factorization holds on the
    union.  A frame alone can never collide with itself, so the pool
    carries the burden of rejection: with the pool built by
    ``maximality.canonical_witness_pool`` the predicate accepts exactly
    the frames orthogonal under the pool's inner product.
    """
    own = []
    for t in range(points_per_frame):
        x = sample_span_point(frame, bound, derive_seed(seed, t))
        own.append(relation_point(frame, x))
    rel = Relation.from_points(tuple(own) + witness_pool.points)
    return factor_check(rel).passed


def _build_relation(
    frames: Sequence[Frame], points_per_frame: int, bound: int, seed: int
) -> Relation:
    points = []
    for k, frame in enumerate(frames):
        for t in range(points_per_frame):
            x = sample_span_point(frame, bound, derive_seed(seed, k, t + 1))
            points.append(relation_point(frame, x))
    return Relation.from_points(points)


def build_orthogonal_relation(
    G: GramInnerProduct,
    frame_count: int,
    points_per_frame: int,
    bound: int,
    seed: int,
    m: int | None = None,
) -> Relation:
    """Sample a relation over frames orthogonalized under G.

    Frames are drawn with integer entries, made G-orthogonal by exact
    Gram-Schmidt, then paired with sampled span points carrying canonical
    values.  Because every value then equals ``<a_i, x> / <a_i, a_i>``, a
    function of the projection key alone, the result always passes
    :func:`factor_check`.  Deterministic for a fixed seed.
    """
    m = G.dim if m is None else m
    frames = [
        gram_schmidt(G, sample_frame(G.dim, m, bound, derive_seed(seed, k, 0)))
        for k in range(frame_count)
    ]
    return _build_relation(frames, points_per_frame, bound, seed)


def build_arbitrary_relation(
    dim: int,
    frame_count: int,
    points_per_frame: int,
    bound: int,
    seed: int,
    m: int | None = None,
) -> Relation:
    """Sample a relation over arbitrary independent frames (no orthogonalizing).

    Unlike :func:`build_orthogonal_relation` the output generally fails
    :func:`factor_check` once two frames share a slot vector and point but
    disagree on the coordinate value.
    """
    m = dim if m is None else m
    frames = [
        sample_frame(dim, m, bound, derive_seed(seed, k, 0))
        for k in range(frame_count)
    ]
    return _build_relation(frames, points_per_frame, bound, seed)


def recover_orthogonal_tuples(rel: Relation) -> tuple[Frame, ...]:
    """The distinct frames of a factorizable relation, insertion order.

    This is the frame-component image of the relation; it requires the
    relation to pass :func:`factor_check` (PreconditionError otherwise).
    """
    if not factor_check(rel).passed:
        raise PreconditionError("relation does not factor; no tuple set to recover")
    seen: dict[Frame, None] = {}
    for p in rel.points:
        seen.setdefault(p.frame, None)
    return tuple(seen)
