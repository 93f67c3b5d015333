"""Exact-rational weight vectors for finite and affine algebras.

A finite weight is a vector of rationals in an orthogonal ambient basis.
An affine weight extends a finite weight with level and grade coordinates;
the bilinear form pairs level with grade so that the imaginary direction
``delta`` (level 0, grade 1) is isotropic and ``inner(delta, x)`` returns
the level of ``x``.  Floating point is rejected everywhere: weights are
dictionary keys in every recurrence and must compare exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import StructuralError

Rational = Fraction


def rational(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise StructuralError(f"expected an exact rational, got {x!r}")


def format_rational(q: Fraction) -> str:
    """Render as "p/q", or just "p" for integers."""
    q = rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class FiniteWeight:
    """Weight of a finite-dimensional algebra in orthogonal coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(rational(c) for c in coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def key(self):
        """Canonical comparison key: equal iff equal as rational vectors."""
        return self.coords

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other):
        if not isinstance(other, FiniteWeight):
            raise StructuralError(f"cannot combine FiniteWeight with {type(other).__name__}")
        if other.dim != self.dim:
            raise StructuralError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return FiniteWeight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return FiniteWeight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return FiniteWeight(-a for a in self.coords)

    def scale(self, c) -> "FiniteWeight":
        c = rational(c)
        return FiniteWeight(c * a for a in self.coords)

    __rmul__ = scale

    def __mul__(self, c):
        return self.scale(c)

    def inner(self, other) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, FiniteWeight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


class AffineWeight:
    """Finite weight extended with level and grade coordinates."""

    __slots__ = ("finite", "level", "grade")

    def __init__(self, finite: FiniteWeight, level, grade):
        if not isinstance(finite, FiniteWeight):
            finite = FiniteWeight(finite)
        self.finite = finite
        self.level = rational(level)
        self.grade = rational(grade)

    @property
    def dim(self) -> int:
        return self.finite.dim

    @property
    def key(self):
        return self.finite.coords + (self.level, self.grade)

    def is_zero(self) -> bool:
        return self.finite.is_zero() and self.level == 0 and self.grade == 0

    def _check(self, other):
        if not isinstance(other, AffineWeight):
            raise StructuralError(f"cannot combine AffineWeight with {type(other).__name__}")
        if other.dim != self.dim:
            raise StructuralError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return AffineWeight(self.finite + other.finite, self.level + other.level, self.grade + other.grade)

    def __sub__(self, other):
        self._check(other)
        return AffineWeight(self.finite - other.finite, self.level - other.level, self.grade - other.grade)

    def __neg__(self):
        return AffineWeight(-self.finite, -self.level, -self.grade)

    def scale(self, c) -> "AffineWeight":
        c = rational(c)
        return AffineWeight(self.finite.scale(c), c * self.level, c * self.grade)

    __rmul__ = scale

    def __mul__(self, c):
        return self.scale(c)

    def inner(self, other) -> Fraction:
        # (a, b) = (a_fin, b_fin) + level(a) grade(b) + level(b) grade(a);
        # makes delta isotropic and (delta, x) == level(x).
        self._check(other)
        return self.finite.inner(other.finite) + self.level * other.grade + other.level * self.grade

    def __eq__(self, other):
        return isinstance(other, AffineWeight) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return (
            f"{self.finite!r} @ level {format_rational(self.level)}"
            f", grade {format_rational(self.grade)}"
        )


Weight = FiniteWeight | AffineWeight


def inner(a: Weight, b: Weight) -> Fraction:
    """Bilinear form; kinds and dimensions must match."""
    if isinstance(a, FiniteWeight) and isinstance(b, FiniteWeight):
        return a.inner(b)
    if isinstance(a, AffineWeight) and isinstance(b, AffineWeight):
        return a.inner(b)
    raise StructuralError("cannot pair finite with affine weights")


def canonical_key(w: Weight):
    """Totally ordered key; equal iff weights are exactly equal."""
    return w.key


def zero_weight(dim: int, affine: bool = False) -> Weight:
    fw = FiniteWeight([0] * dim)
    return AffineWeight(fw, 0, 0) if affine else fw


def imaginary_root(dim: int) -> AffineWeight:
    """delta: finite part 0, level 0, grade 1."""
    return AffineWeight(FiniteWeight([0] * dim), 0, 1)


def weight_to_obj(w: Weight) -> dict:
    """JSON form; rationals as strings to preserve exactness."""
    if isinstance(w, FiniteWeight):
        return {"coords": [format_rational(c) for c in w.coords]}
    return {
        "coords": [format_rational(c) for c in w.finite.coords],
        "level": format_rational(w.level),
        "grade": format_rational(w.grade),
    }


def weight_from_obj(obj: dict) -> Weight:
    coords = [rational(c) for c in obj["coords"]]
    if "level" in obj or "grade" in obj:
        return AffineWeight(FiniteWeight(coords), rational(obj["level"]), rational(obj["grade"]))
    return FiniteWeight(coords)
