"""Weyl reflections, orbit generation and dominant-chamber normalization.

Orbits are generated by descent from the dominant representative: a simple
reflection is applied only where the Dynkin label is strictly positive, so
the grade of affine weights never increases along a path and truncation by
a grade floor loses nothing.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError
from .rootsystems import RootSystem
from .weights import Weight

_MAX_STEPS = 10**7


class DominantResult(NamedTuple):
    dominant: Weight
    parity: int  # +1 / -1, or 0 when the input sits on a chamber wall
    word: tuple  # simple-root indices applied, first reflection first


def reflect(rs: RootSystem, root, w: Weight) -> Weight:
    """Reflect ``w`` in a root (given directly or by simple-root index)."""
    if isinstance(root, int):
        root = rs.simple_root(root)
    n = root.inner(root)
    if n == 0:
        raise DomainError("cannot reflect in a zero-norm root")
    return w - root.scale(2 * root.inner(w) / n)


def apply_word(rs: RootSystem, indices, w: Weight) -> Weight:
    """Apply s_{i1} s_{i2} ... s_{ik} to ``w`` (rightmost factor acts first)."""
    out = w
    for i in reversed(list(indices)):
        out = reflect(rs, i, out)
    return out


def _indices_and_roots(rs: RootSystem, index_set=None):
    indices = rs.simple_indices()
    if index_set is not None:
        chosen = set(index_set)
        indices = tuple(i for i in indices if i in chosen)
    return [(i, rs.simple_root(i)) for i in indices]


def _check_affine_level(rs: RootSystem, w: Weight, index_set):
    # Full affine normalization is only guaranteed to terminate at positive level.
    if rs.is_affine and (index_set is None or 0 in index_set) and w.level <= 0:
        raise DomainError("affine dominance requires positive level")


def to_dominant(rs: RootSystem, w: Weight, index_set=None) -> DominantResult:
    """Reflect at the first negative label until dominant.

    ``index_set`` restricts to the Weyl subgroup generated by those simple
    roots (used for parabolic symmetry); None means the full group.
    """
    pairs = _indices_and_roots(rs, index_set)
    if pairs:
        _check_affine_level(rs, w, index_set)
    word = []
    x = w
    for _ in range(_MAX_STEPS):
        for i, alpha in pairs:
            coeff = 2 * alpha.inner(x) / alpha.inner(alpha)
            if coeff < 0:
                x = x - alpha.scale(coeff)
                word.append(i)
                break
        else:
            on_wall = any(alpha.inner(x) == 0 for _, alpha in pairs)
            parity = 0 if on_wall else (-1) ** len(word)
            return DominantResult(x, parity, tuple(word))
    raise DomainError("dominance normalization did not terminate")


def shifted_dominant(rs: RootSystem, w: Weight, index_set=None) -> DominantResult:
    """Normalize via the shifted action: u(w + rho) - rho with the parity of u."""
    rho = rs.weyl_vector()
    res = to_dominant(rs, w + rho, index_set)
    return DominantResult(res.dominant - rho, res.parity, res.word)


def orbit(rs: RootSystem, w: Weight, grade_floor=None, index_set=None):
    """Weyl orbit as a key-sorted list; affine orbits need a grade floor."""
    if rs.is_affine and grade_floor is None:
        raise DomainError("affine orbits are infinite; a grade floor is required")
    pairs = _indices_and_roots(rs, index_set)
    start = to_dominant(rs, w, index_set).dominant
    if grade_floor is not None and start.grade < grade_floor:
        return []
    seen = {start.key: start}
    stack = [start]
    while stack:
        x = stack.pop()
        for _, alpha in pairs:
            coeff = 2 * alpha.inner(x) / alpha.inner(alpha)
            if coeff > 0:
                y = x - alpha.scale(coeff)
                if grade_floor is not None and y.grade < grade_floor:
                    continue
                if y.key not in seen:
                    seen[y.key] = y
                    stack.append(y)
    return [seen[k] for k in sorted(seen)]


def orbit_with_parity(rs: RootSystem, w: Weight, grade_floor=None, index_set=None):
    """Orbit of a strictly dominant weight with the parity of each element.

    Parities are only well defined off chamber walls, hence the strictness
    requirement on the (normalized) input.
    """
    if rs.is_affine and grade_floor is None:
        raise DomainError("affine orbits are infinite; a grade floor is required")
    pairs = _indices_and_roots(rs, index_set)
    res = to_dominant(rs, w, index_set)
    start = res.dominant
    if any(alpha.inner(start) == 0 for _, alpha in pairs):
        raise DomainError("orbit parities are ill-defined on chamber walls")
    out = []
    if grade_floor is None or start.grade >= grade_floor:
        seen = {start.key}
        stack = [(start, 1)]
        while stack:
            x, par = stack.pop()
            out.append((x, par))
            for _, alpha in pairs:
                coeff = 2 * alpha.inner(x) / alpha.inner(alpha)
                if coeff > 0:
                    y = x - alpha.scale(coeff)
                    if grade_floor is not None and y.grade < grade_floor:
                        continue
                    if y.key not in seen:
                        seen.add(y.key)
                        stack.append((y, -par))
    out.sort(key=lambda wp: wp[0].key)
    return out
