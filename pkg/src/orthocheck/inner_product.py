"""Gram-matrix inner products, orthogonality, and adapted constructions.

An inner product is represented by its Gram matrix G: the form is
``<x, y> = x^T G y``.  Validation is exact: symmetry entrywise, positive
definiteness by Sylvester's criterion (all leading principal minors
strictly positive), no eigenvalue machinery and no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DefinitenessError,
    NoViolationError,
    PreconditionError,
    ShapeError,
    SymmetryError,
    ZeroVectorError,
)
from .linalg import (
    Frame,
    Matrix,
    RationalLike,
    Vector,
    as_vector,
    determinant,
    invert_matrix,
    is_zero,
    mat_mul,
    sample_frame,
    solve_coordinates,
    transpose,
    vector_scale,
    vector_sub,
)


@dataclass(frozen=True)
class GramInnerProduct:
    """A symmetric positive definite matrix defining ``<x, y> = x^T G y``.

    Construction validates exactly, so holding an instance is proof the
    form is an inner product.
    """

    matrix: Matrix

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(e) for e in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ShapeError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise SymmetryError(
                        f"matrix is not symmetric at ({i}, {j}): "
                        f"{rows[i][j]} vs {rows[j][i]}"
                    )
        for k in range(1, n + 1):
            minor = determinant([row[:k] for row in rows[:k]])
            if minor <= 0:
                raise DefinitenessError(
                    f"leading principal minor {k} is {minor}, not positive",
                    minor_index=k,
                )

    @property
    def dim(self) -> int:
        return len(self.matrix)


def validate_inner_product(
    rows: Sequence[Sequence[RationalLike]],
) -> GramInnerProduct:
    """Validate a candidate Gram matrix and return the inner product.

    Raises SymmetryError on an asymmetric matrix and DefinitenessError
    (carrying the index of the first failing minor) on a non-PD one.
    """
    return GramInnerProduct(tuple(tuple(Fraction(e) for e in row) for row in rows))


def identity_inner_product(dim: int) -> GramInnerProduct:
    """The standard dot product in the given dimension."""
    if dim < 1:
        raise ShapeError(f"dimension must be positive, got {dim}")
    return GramInnerProduct(
        tuple(
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(dim))
            for i in range(dim)
        )
    )


def evaluate(G: GramInnerProduct, x: Vector, y: Vector) -> Fraction:
    """Exact value of ``x^T G y``."""
    x, y = as_vector(x), as_vector(y)
    n = G.dim
    if len(x) != n or len(y) != n:
        raise ShapeError(
            f"vectors of dimension {len(x)} and {len(y)} against a {n}x{n} form"
        )
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = G.matrix[i]
        total += xi * sum((row[j] * y[j] for j in range(n)), Fraction(0))
    return total


def is_orthogonal_tuple(G: GramInnerProduct, frame: Frame) -> bool:
    """True iff the frame vectors are pairwise orthogonal under G."""
    for i in range(frame.size):
        for j in range(i + 1, frame.size):
            if evaluate(G, frame[i], frame[j]) != 0:
                return False
    return True


def coefficient_formula(G: GramInnerProduct, a: Vector, x: Vector) -> Fraction:
    """The projection coefficient ``<a, x> / <a, a>``, exactly.

    This is the closed form for a coordinate over an orthogonal frame:
    the value depends only on ``a`` and ``x``.
    """
    a = as_vector(a)
    if is_zero(a):
        raise ZeroVectorError("projection coefficient onto the zero vector")
    return evaluate(G, a, x) / evaluate(G, a, a)


def verify_projection_equivalence(
    G: GramInnerProduct, frame: Frame, x: Vector
) -> bool:
    """Check that solved coordinates equal the projection formula, exactly.

    Requires the frame to be orthogonal under G (PreconditionError
    otherwise) and ``x`` to lie in its span.  For such inputs the two
    routes always agree; this computes both and compares.
    """
    if not is_orthogonal_tuple(G, frame):
        raise PreconditionError("frame is not orthogonal under the given form")
    solved = solve_coordinates(frame, x)
    formula = tuple(coefficient_formula(G, a, x) for a in frame)
    return solved == formula


def gram_schmidt(G: GramInnerProduct, vectors: Frame | Sequence[Vector]) -> Frame:
    """Orthogonalize a sequence of independent vectors under G, exactly.

    Classical Gram-Schmidt without normalization: the first vector is kept
    as is, each later one has its projections onto the previous outputs
    subtracted.  Prefix spans are preserved.
    """
    vs = list(vectors.vectors if isinstance(vectors, Frame) else map(as_vector, vectors))
    out: list[Vector] = []
    for v in vs:
        u = v
        for w in out:
            coeff = evaluate(G, w, u) / evaluate(G, w, w)
            if coeff != 0:
                u = vector_sub(u, vector_scale(coeff, w))
        out.append(u)
    return Frame(tuple(out))


def frame_adapted_inner_product(frame: Frame) -> GramInnerProduct:
    """An inner product making a full-dimensional frame orthonormal.

    With T the matrix whose columns are the frame vectors, returns
    ``G = T^-T T^-1``, so that ``<a_i, a_j>_G`` is 1 when i == j and 0
    otherwise.  Only full-dimensional frames (m == n) are supported;
    anything smaller raises ShapeError.
    """
    if frame.size != frame.dim:
        raise ShapeError(
            f"adapted inner product needs m == dim, got m={frame.size}, "
            f"dim={frame.dim}"
        )
    columns = tuple(
        tuple(frame[j][r] for j in range(frame.size)) for r in range(frame.dim)
    )
    inv = invert_matrix(columns)
    return GramInnerProduct(mat_mul(transpose(inv), inv))


def sample_inner_product(dim: int, bound: int, seed: int) -> GramInnerProduct:
    """Draw a random validated inner product, deterministically.

    Built as ``A^T A`` for a random nonsingular integer matrix A, which is
    symmetric positive definite by construction.
    """
    rows = sample_frame(dim, dim, bound, seed).vectors
    return GramInnerProduct(mat_mul(transpose(rows), rows))
