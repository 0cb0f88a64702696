"""Exact rational vectors, frames, and linear solving.

Everything here computes over `fractions.Fraction`: results are exact and
runs are bit-reproducible.  Vectors are plain tuples of Fractions; a
:class:`Frame` is a validated tuple of linearly independent vectors.  The
elimination kernel is fraction-free (single-step Bareiss) and always picks
the first row with a nonzero entry as the pivot, so identical inputs give
identical eliminations, down to which counterexample a downstream check
ends up reporting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import GenerationError, ShapeError, SpanMembershipError

Rational = Fraction
RationalLike = Fraction | int | str
Vector = tuple[Fraction, ...]
Coordinates = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]

#: Rejection-sampling attempts before giving up.  Degenerate parameters
#: (bound=0 can never yield an independent frame) fail loudly instead of
#: spinning forever.
SAMPLING_CAP = 10_000

_MASK64 = (1 << 64) - 1


# ---------------------------------------------------------------------------
# vectors


def as_vector(entries: Iterable[RationalLike]) -> Vector:
    """Coerce an iterable of ints, fraction strings, or Fractions."""
    return tuple(Fraction(e) for e in entries)


def vec(*entries: RationalLike) -> Vector:
    """Shorthand: ``vec(3, "1/2")`` builds an exact vector."""
    return as_vector(entries)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def is_zero(v: Vector) -> bool:
    return all(e == 0 for e in v)


def _check_same_dim(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise ShapeError(f"dimension mismatch: {len(x)} vs {len(y)}")


def vector_add(x: Vector, y: Vector) -> Vector:
    _check_same_dim(x, y)
    return tuple(a + b for a, b in zip(x, y))


def vector_sub(x: Vector, y: Vector) -> Vector:
    _check_same_dim(x, y)
    return tuple(a - b for a, b in zip(x, y))


def vector_scale(s: RationalLike, x: Vector) -> Vector:
    s = Fraction(s)
    return tuple(s * a for a in x)


def linear_combination(
    vectors: Sequence[Vector], coeffs: Sequence[RationalLike]
) -> Vector:
    """Return ``sum(c_k * v_k)``, exactly."""
    if len(vectors) != len(coeffs):
        raise ShapeError(
            f"{len(coeffs)} coefficients for {len(vectors)} vectors"
        )
    if not vectors:
        raise ShapeError("empty combination has no dimension")
    out = zero_vector(len(vectors[0]))
    for c, v in zip(coeffs, vectors):
        out = vector_add(out, vector_scale(c, v))
    return out


# ---------------------------------------------------------------------------
# elimination kernel


def _echelon(
    rows: list[list[Fraction]], pivot_limit: int | None = None
) -> tuple[list[int], int]:
    """Fraction-free forward elimination, in place.

    Pivot selection is nonzero-first: the lowest row index with a nonzero
    entry in the current column wins.  Columns at ``pivot_limit`` and
    beyond are updated but never become pivots (used for augmented
    solves).  Returns ``(pivot_columns, swap_count)``.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    limit = n_cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    swaps = 0
    prev = Fraction(1)
    r = 0
    for c in range(limit):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            swaps += 1
        pivot = rows[r][c]
        for i in range(r + 1, n_rows):
            factor = rows[i][c]
            # With a zero factor the update scales the row by pivot/prev;
            # skipping is sound only when that ratio is 1.
            if factor == 0 and pivot == prev:
                continue
            for j in range(c + 1, n_cols):
                rows[i][j] = (pivot * rows[i][j] - factor * rows[r][j]) / prev
            rows[i][c] = Fraction(0)
        prev = pivot
        pivots.append(c)
        r += 1
    return pivots, swaps


def _as_rows(vectors: Sequence[Sequence[RationalLike]]) -> list[list[Fraction]]:
    return [[Fraction(e) for e in v] for v in vectors]


def matrix_rank(vectors: Sequence[Sequence[RationalLike]]) -> int:
    """Exact rank of the matrix whose rows are ``vectors``."""
    rows = _as_rows(vectors)
    if not rows:
        return 0
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ShapeError("rows of unequal length")
    pivots, _ = _echelon(rows)
    return len(pivots)


def determinant(rows: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Exact determinant via fraction-free elimination."""
    work = _as_rows(rows)
    n = len(work)
    if any(len(r) != n for r in work):
        raise ShapeError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    pivots, swaps = _echelon(work)
    if len(pivots) < n:
        return Fraction(0)
    # Bareiss: after full elimination the last pivot is the determinant,
    # up to the sign of the row swaps.
    det = work[n - 1][n - 1]
    return -det if swaps % 2 else det


def transpose(rows: Matrix) -> Matrix:
    return tuple(tuple(r[c] for r in rows) for c in range(len(rows[0])))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ShapeError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = range(len(b[0]))
    return tuple(
        tuple(sum((row[k] * b[k][c] for k in range(len(b))), Fraction(0)) for c in cols)
        for row in a
    )


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def invert_matrix(rows: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeError("inverse needs a square matrix")
    work = [[Fraction(e) for e in row] + [
        Fraction(1) if i == j else Fraction(0) for j in range(n)
    ] for i, row in enumerate(rows)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot_row is None:
            raise ShapeError("matrix is singular")
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
        pivot = work[c][c]
        work[c] = [e / pivot for e in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [e - factor * p for e, p in zip(work[i], work[c])]
    return tuple(tuple(row[n:]) for row in work)


# ---------------------------------------------------------------------------
# frames


@dataclass(frozen=True)
class Frame:
    """An ordered tuple of linearly independent vectors of one dimension.

    Independence is checked exactly at construction, so holding a Frame is
    proof of it.  Instances are immutable and hashable; equality is
    entrywise.
    """

    vectors: tuple[Vector, ...]

    def __post_init__(self) -> None:
        vectors = tuple(as_vector(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        if len(vectors) < 2:
            raise ShapeError("a frame needs at least two vectors")
        dims = {len(v) for v in vectors}
        if len(dims) != 1:
            raise ShapeError(f"mixed vector dimensions in frame: {sorted(dims)}")
        n = dims.pop()
        if len(vectors) > n:
            raise ShapeError(
                f"{len(vectors)} vectors cannot be independent in dimension {n}"
            )
        if not is_independent(vectors):
            raise ValueError(f"frame vectors are linearly dependent: {vectors}")

    @property
    def dim(self) -> int:
        """Ambient dimension n."""
        return len(self.vectors[0])

    @property
    def size(self) -> int:
        """Number of vectors m."""
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def __getitem__(self, index: int) -> Vector:
        return self.vectors[index]


def frame_of(*vectors: Iterable[RationalLike]) -> Frame:
    """Shorthand: ``frame_of((1, 0), (1, 1))``."""
    return Frame(tuple(as_vector(v) for v in vectors))


def is_independent(vectors: Sequence[Sequence[RationalLike]]) -> bool:
    """True iff the vectors are linearly independent over the rationals.

    More vectors than the ambient dimension always returns False.  Raises
    ShapeError when the vectors disagree on dimension or the sequence is
    empty.
    """
    vs = [as_vector(v) for v in vectors]
    if not vs:
        raise ShapeError("independence of an empty sequence is undefined here")
    dims = {len(v) for v in vs}
    if len(dims) != 1:
        raise ShapeError(f"mixed vector dimensions: {sorted(dims)}")
    n = dims.pop()
    m = len(vs)
    if m > n:
        return False
    return matrix_rank(vs) == m


def span_contains(frame: Frame, x: Vector) -> bool:
    """True iff ``x`` lies in the span of the frame (exact rank test)."""
    x = as_vector(x)
    if len(x) != frame.dim:
        raise ShapeError(f"point has dimension {len(x)}, frame has {frame.dim}")
    return matrix_rank(list(frame.vectors) + [x]) == frame.size


def solve_coordinates(frame: Frame, x: Vector) -> Coordinates:
    """The unique coefficients expanding ``x`` over the frame.

    Returns ``(c_1, ..., c_m)`` with ``x == sum(c_k * a_k)``, exactly.
    Raises SpanMembershipError when ``x`` is outside the span.
    """
    x = as_vector(x)
    n, m = frame.dim, frame.size
    if len(x) != n:
        raise ShapeError(f"point has dimension {len(x)}, frame has {n}")
    # Columns are the frame vectors, augmented with x.
    rows = [[frame[j][r] for j in range(m)] + [x[r]] for r in range(n)]
    pivots, _ = _echelon(rows, pivot_limit=m)
    assert len(pivots) == m, "frame invariant guarantees full column rank"
    for i in range(m, n):
        if rows[i][m] != 0:
            raise SpanMembershipError(f"{x} is not in the span of the frame")
    coords = [Fraction(0)] * m
    for r in range(m - 1, -1, -1):
        s = rows[r][m] - sum(
            (rows[r][j] * coords[j] for j in range(r + 1, m)), Fraction(0)
        )
        coords[r] = s / rows[r][r]
    return tuple(coords)


# ---------------------------------------------------------------------------
# seeded sampling


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *indices: int) -> int:
    """Mix trial indices into a master seed (splitmix64 steps).

    Gives decorrelated per-trial streams, so work split across workers by
    index reproduces the single-threaded output byte for byte.
    """
    z = seed & _MASK64
    for idx in indices:
        z = (z + (idx + 1) * 0x9E3779B97F4A7C15) & _MASK64
        z = _mix64(z)
    return z


def sample_frame(dim: int, m: int, bound: int, seed: int) -> Frame:
    """Draw a random frame with integer entries in [-bound, bound].

    Deterministic for a fixed seed.  Resamples until the vectors are
    independent; after SAMPLING_CAP failed draws raises GenerationError.
    """
    if not 2 <= m <= dim:
        raise ShapeError(f"need 2 <= m <= dim, got m={m}, dim={dim}")
    if bound < 0:
        raise ShapeError(f"bound must be nonnegative, got {bound}")
    rng = random.Random(seed)
    for _ in range(SAMPLING_CAP):
        candidate = [
            tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
            for _ in range(m)
        ]
        if is_independent(candidate):
            return Frame(tuple(candidate))
    raise GenerationError(
        f"no independent frame after {SAMPLING_CAP} draws "
        f"(dim={dim}, m={m}, bound={bound})"
    )


def sample_coefficients(m: int, bound: int, seed: int) -> Coordinates:
    """Draw m integer coefficients in [-bound, bound], deterministically."""
    if bound < 0:
        raise ShapeError(f"bound must be nonnegative, got {bound}")
    rng = random.Random(seed)
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(m))


def sample_span_point(frame: Frame, bound: int, seed: int) -> Vector:
    """Draw a point of the frame's span: an integer-coefficient combination.

    Deterministic for a fixed seed; ``span_contains(frame, result)`` holds
    by construction.
    """
    coeffs = sample_coefficients(frame.size, bound, seed)
    return linear_combination(frame.vectors, coeffs)
