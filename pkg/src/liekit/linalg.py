"""Small exact linear-algebra helpers over Fraction matrices."""

from __future__ import annotations

from fractions import Fraction

from .errors import StructuralError
from .weights import FiniteWeight


def solve_exact(matrix, rhs):
    """Solve A x = b by Gaussian elimination; raises if A is singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise StructuralError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def invert_exact(matrix):
    """Exact inverse of a square Fraction matrix."""
    n = len(matrix)
    cols = []
    for i in range(n):
        e = [Fraction(1 if j == i else 0) for j in range(n)]
        cols.append(solve_exact(matrix, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def gram_matrix(vectors):
    return [[a.inner(b) for b in vectors] for a in vectors]


def coords_in_span(basis, target):
    """Coefficients of ``target`` over ``basis`` vectors, or None if outside the span.

    Works in any ambient dimension via the normal equations; exact.
    """
    if not basis:
        return [] if target.is_zero() else None
    gram = gram_matrix(basis)
    rhs = [b.inner(target) for b in basis]
    try:
        coeffs = solve_exact(gram, rhs)
    except StructuralError:
        raise StructuralError("basis vectors are linearly dependent")
    recon = basis[0].scale(coeffs[0])
    for c, b in zip(coeffs[1:], basis[1:]):
        recon = recon + b.scale(c)
    return coeffs if recon == target else None


def project_onto_span(basis, w: FiniteWeight) -> FiniteWeight:
    """Orthogonal projection of ``w`` onto the rational span of ``basis``."""
    if not basis:
        return FiniteWeight([0] * w.dim)
    gram = gram_matrix(basis)
    rhs = [b.inner(w) for b in basis]
    coeffs = solve_exact(gram, rhs)
    out = basis[0].scale(coeffs[0])
    for c, b in zip(coeffs[1:], basis[1:]):
        out = out + b.scale(c)
    return out
