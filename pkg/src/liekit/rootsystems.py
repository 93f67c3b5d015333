"""Root systems: simple series A-G, direct sums, affine extensions, subalgebras.

Simple roots are stored in orthogonal Bourbaki coordinates.  Everything else
(positive roots, Cartan matrix, fundamental weights, Weyl vector, marks) is
derived from the simple roots, so explicit subsystems given by arbitrary
rational simple roots go through the same code paths as the named series.

Note on normalization: Bourbaki coordinates give the highest root theta
squared length 2 for A/B/D/E/F but 4 for C and 6 for G2.  All recurrences
are invariant under this scaling; the only places the factor
``c = (theta, theta)/2`` appears are comarks (normalized so that their sum
plus one is the dual Coxeter number) and the level coordinate of affine
fundamental weights, where ``level(omega_0) = c``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError, StructuralError
from .linalg import coords_in_span, gram_matrix, invert_exact
from .weights import AffineWeight, FiniteWeight, Weight, imaginary_root, rational

_Q = Fraction

DEFAULT_GRADE_LIMIT = 10

_SERIES_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _unit(dim, i, value=1):
    v = [_Q(0)] * dim
    v[i] = _Q(value)
    return v


def _bourbaki_simple_roots(series: str, rank: int):
    """Simple roots per the Bourbaki plates, as coordinate lists."""
    if series == "A":
        dim = rank + 1
        return [[_Q(1) if j == i else _Q(-1) if j == i + 1 else _Q(0) for j in range(dim)] for i in range(rank)]
    if series in ("B", "C", "D"):
        dim = rank
        roots = [[_Q(1) if j == i else _Q(-1) if j == i + 1 else _Q(0) for j in range(dim)] for i in range(rank - 1)]
        if series == "B":
            roots.append(_unit(dim, rank - 1))
        elif series == "C":
            roots.append(_unit(dim, rank - 1, 2))
        else:
            last = _unit(dim, rank - 2)
            last[rank - 1] = _Q(1)
            roots.append(last)
        return roots
    if series == "E":
        dim = 8
        a1 = [_Q(1, 2), -_Q(1, 2), -_Q(1, 2), -_Q(1, 2), -_Q(1, 2), -_Q(1, 2), -_Q(1, 2), _Q(1, 2)]
        a2 = [_Q(1), _Q(1)] + [_Q(0)] * 6
        rest = []
        for i in range(1, 7):
            r = [_Q(0)] * dim
            r[i] = _Q(1)
            r[i - 1] = _Q(-1)
            rest.append(r)
        return ([a1, a2] + rest)[:rank]
    if series == "F":
        return [
            [_Q(0), _Q(1), _Q(-1), _Q(0)],
            [_Q(0), _Q(0), _Q(1), _Q(-1)],
            [_Q(0), _Q(0), _Q(0), _Q(1)],
            [_Q(1, 2), -_Q(1, 2), -_Q(1, 2), -_Q(1, 2)],
        ]
    if series == "G":
        return [[_Q(1), _Q(-1), _Q(0)], [_Q(-2), _Q(1), _Q(1)]]
    raise DomainError(f"unknown series {series!r}")


class RootSystem:
    """Immutable root system; derived data is cached on first use.

    For affine systems the first simple root is ``alpha_0 = delta - theta``
    and all weights carry level and grade coordinates.
    """

    def __init__(self, simple_roots, kind="finite", name="explicit", grade_limit=DEFAULT_GRADE_LIMIT, finite_part=None):
        roots = tuple(simple_roots)
        if not roots:
            raise DomainError("a root system needs at least one simple root")
        dims = {r.dim for r in roots}
        if len(dims) != 1:
            raise StructuralError("simple roots must share an ambient dimension")
        for r in roots:
            if r.inner(r) == 0:
                raise DomainError(f"simple root {r!r} has zero norm")
        if kind == "finite":
            if any(not isinstance(r, FiniteWeight) for r in roots):
                raise StructuralError("finite system requires finite weights")
            try:
                invert_exact(gram_matrix(list(roots)))
            except StructuralError:
                raise DomainError("simple roots must be linearly independent")
        elif kind == "affine":
            if any(not isinstance(r, AffineWeight) for r in roots):
                raise StructuralError("affine system requires affine weights")
            if finite_part is None:
                raise StructuralError("affine system requires its finite part")
            if grade_limit < 1:
                raise DomainError("grade limit must be at least 1")
        else:
            raise DomainError(f"unknown kind {kind!r}")
        self.kind = kind
        self.simple_roots = roots
        self.ambient_dim = dims.pop()
        self.name = name
        self.grade_limit = grade_limit
        self.finite_part = finite_part
        self._cache = {}

    # -- basic queries ------------------------------------------------

    @property
    def is_affine(self) -> bool:
        return self.kind == "affine"

    @property
    def num_simple(self) -> int:
        return len(self.simple_roots)

    @property
    def rank(self) -> int:
        """Rank of the underlying finite algebra."""
        return self.num_simple - 1 if self.is_affine else self.num_simple

    def simple_indices(self):
        """Simple-root indices: 1..rank finite, 0..rank affine."""
        return tuple(range(self.num_simple)) if self.is_affine else tuple(range(1, self.num_simple + 1))

    def simple_root(self, index: int) -> Weight:
        indices = self.simple_indices()
        if index not in indices:
            raise DomainError(f"simple-root index {index} out of range {indices[0]}..{indices[-1]}")
        return self.simple_roots[index if self.is_affine else index - 1]

    def zero(self) -> Weight:
        coords = [_Q(0)] * self.ambient_dim
        if self.is_affine:
            return AffineWeight(FiniteWeight(coords), 0, 0)
        return FiniteWeight(coords)

    def delta(self) -> AffineWeight:
        if not self.is_affine:
            raise DomainError("delta exists for affine systems only")
        return imaginary_root(self.ambient_dim)

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    # -- structure ----------------------------------------------------

    def cartan_matrix(self):
        """A_ij = 2 (a_i, a_j) / (a_j, a_j); entries are exact integers."""

        def build():
            rows = []
            for a in self.simple_roots:
                row = []
                for b in self.simple_roots:
                    v = 2 * a.inner(b) / b.inner(b)
                    if v.denominator != 1:
                        raise DomainError("non-crystallographic simple roots")
                    row.append(int(v))
                rows.append(row)
            return rows

        return self._cached("cartan", build)

    def dynkin_labels(self, w: Weight):
        """Pairings 2 (w, a_j) / (a_j, a_j) as exact rationals."""
        return tuple(2 * w.inner(a) / a.inner(a) for a in self.simple_roots)

    def is_dominant(self, w: Weight) -> bool:
        return all(l >= 0 for l in self.dynkin_labels(w))

    def fundamental_weights(self):
        """Dual basis to the simple roots, inside their span (affine: grade 0)."""

        def build():
            if self.is_affine:
                fin = self.finite_part
                theta, marks, _ = fin.highest_root_data()
                zero = FiniteWeight([_Q(0)] * self.ambient_dim)
                c = theta.inner(theta) / 2
                out = [AffineWeight(zero, c, 0)]
                for mark, alpha, omega in zip(marks, fin.simple_roots, fin.fundamental_weights()):
                    raw_comark = mark * alpha.inner(alpha) / 2
                    out.append(AffineWeight(omega, raw_comark, 0))
                return tuple(out)
            ainv = invert_exact([[rational(v) for v in row] for row in self.cartan_matrix()])
            out = []
            for i in range(self.num_simple):
                w = self.simple_roots[0].scale(ainv[i][0])
                for k in range(1, self.num_simple):
                    w = w + self.simple_roots[k].scale(ainv[i][k])
                out.append(w)
            return tuple(out)

        return self._cached("fundamental", build)

    def weyl_vector(self) -> Weight:
        def build():
            ws = self.fundamental_weights()
            out = ws[0]
            for w in ws[1:]:
                out = out + w
            return out

        return self._cached("rho", build)

    def weight(self, labels) -> Weight:
        """Weight with the given Dynkin labels (affine: alpha_0 label first)."""
        labels = [rational(l) for l in labels]
        if len(labels) != self.num_simple:
            raise DomainError(f"expected {self.num_simple} labels, got {len(labels)}")
        ws = self.fundamental_weights()
        out = self.zero()
        for l, w in zip(labels, ws):
            if l:
                out = out + w.scale(l)
        return out

    # -- roots ----------------------------------------------------------

    def _finite_positive_roots(self):
        """Closure of the simple roots under reflections, positive side."""

        def build():
            simple = list(self.simple_roots)
            seen = {r.key: r for r in simple}
            frontier = list(simple)
            while frontier:
                nxt = []
                for beta in frontier:
                    for alpha in simple:
                        n = alpha.inner(alpha)
                        coeff = 2 * beta.inner(alpha) / n
                        cand = beta - alpha.scale(coeff)
                        if cand.key not in seen:
                            seen[cand.key] = cand
                            nxt.append(cand)
                frontier = nxt
                if len(seen) > 100000:
                    raise DomainError("root system closure did not terminate; roots are not crystallographic")
            positives = []
            for r in seen.values():
                coords = coords_in_span(simple, r)
                if coords is None:
                    raise StructuralError("closure left the simple-root span")
                if all(c >= 0 for c in coords):
                    if any(c.denominator != 1 for c in coords):
                        raise DomainError("non-crystallographic simple roots")
                    positives.append((r, tuple(int(c) for c in coords)))
            positives.sort(key=lambda rc: (sum(rc[1]), rc[0].key))
            return tuple(positives)

        return self._cached("finite_positives", build)

    def positive_roots(self, limit=None):
        """Sequence of (root, multiplicity); affine lists are grade-truncated."""
        if not self.is_affine:
            return [(r, 1) for r, _ in self._finite_positive_roots()]
        limit = self.grade_limit if limit is None else limit
        fin = self.finite_part
        out = []
        for beta, _ in fin._finite_positive_roots():
            for n in range(0, limit + 1):
                out.append((AffineWeight(beta, 0, n), 1))
            for n in range(1, limit + 1):
                out.append((AffineWeight(-beta, 0, n), 1))
        for n in range(1, limit + 1):
            out.append((AffineWeight(FiniteWeight([_Q(0)] * self.ambient_dim), 0, n), fin.num_simple))
        out.sort(key=lambda rm: rm[0].key)
        return out

    def root_coefficients(self, w: Weight):
        """Coefficients of ``w`` over the simple roots, or None outside the lattice cone."""
        if self.is_affine:
            n0 = w.grade
            if n0.denominator != 1 or w.level != 0:
                return None
            theta, _, _ = self.finite_part.highest_root_data()
            fin = w.finite + theta.scale(n0)
            coords = coords_in_span(list(self.finite_part.simple_roots), fin)
            if coords is None:
                return None
            coords = [rational(n0)] + coords
        else:
            coords = coords_in_span(list(self.simple_roots), w)
            if coords is None:
                return None
        if any(c.denominator != 1 for c in coords):
            return None
        return [int(c) for c in coords]

    def highest_root_data(self):
        """(theta, marks, comarks) for a finite simple system.

        Comarks are normalized by (theta, theta) so their sum plus one is
        the dual Coxeter number in any coordinate scaling.
        """

        def build():
            if self.is_affine:
                raise DomainError("highest root is defined for finite systems")
            if not self._is_connected():
                raise DomainError("highest root requires a simple (connected) system")
            positives = self._finite_positive_roots()
            theta, coeffs = max(positives, key=lambda rc: (sum(rc[1]), rc[0].key))
            tt = theta.inner(theta)
            marks = tuple(coeffs)
            comarks = tuple(m * a.inner(a) / tt for m, a in zip(marks, self.simple_roots))
            return theta, marks, comarks

        return self._cached("theta", build)

    def _is_connected(self) -> bool:
        n = self.num_simple
        adj = {i: set() for i in range(n)}
        for i in range(n):
            for j in range(i + 1, n):
                if self.simple_roots[i].inner(self.simple_roots[j]) != 0:
                    adj[i].add(j)
                    adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def norm_const(self) -> Fraction:
        """(theta, theta)/2 of the finite part; 1 in standard normalization."""
        fin = self.finite_part if self.is_affine else self
        theta, _, _ = fin.highest_root_data()
        return theta.inner(theta) / 2

    def __repr__(self):
        return f"RootSystem({self.name})"


# -- constructors -------------------------------------------------------


def simple_root_system(series: str, rank: int) -> RootSystem:
    """Root system of a simple series in Bourbaki coordinates."""
    series = series.upper()
    if series not in _SERIES_RANKS or not _SERIES_RANKS[series](rank):
        raise DomainError(f"invalid series/rank pair ({series}, {rank})")
    roots = [FiniteWeight(r) for r in _bourbaki_simple_roots(series, rank)]
    return RootSystem(roots, name=f"{series}{rank}")


def root_system_from_roots(roots, name="explicit") -> RootSystem:
    """Finite root system with explicitly given simple roots."""
    return RootSystem([r if isinstance(r, FiniteWeight) else FiniteWeight(r) for r in roots], name=name)


def direct_sum(*systems: RootSystem) -> RootSystem:
    """Semisimple sum with block-orthogonal concatenated coordinates."""
    if not systems:
        raise DomainError("direct sum of nothing")
    if any(rs.is_affine for rs in systems):
        raise DomainError("direct sums are supported for finite systems only")
    if len(systems) == 1:
        return systems[0]
    total = sum(rs.ambient_dim for rs in systems)
    roots = []
    offset = 0
    for rs in systems:
        for r in rs.simple_roots:
            coords = [_Q(0)] * total
            coords[offset : offset + rs.ambient_dim] = r.coords
            roots.append(FiniteWeight(coords))
        offset += rs.ambient_dim
    return RootSystem(roots, name="+".join(rs.name for rs in systems))


def affine_extension(g: RootSystem, grade_limit=DEFAULT_GRADE_LIMIT) -> RootSystem:
    """Non-twisted affine extension: prepend alpha_0 = delta - theta."""
    if g.is_affine:
        raise DomainError("already affine")
    theta, _, _ = g.highest_root_data()
    alpha0 = AffineWeight(-theta, 0, 1)
    roots = [alpha0] + [AffineWeight(r, 0, 0) for r in g.simple_roots]
    return RootSystem(roots, kind="affine", name=g.name + "^", grade_limit=grade_limit, finite_part=g)


class SubalgebraSpec:
    """Regular or explicitly embedded subalgebra in parent coordinates.

    ``cartan=True`` marks the Cartan subalgebra itself: no roots, but the
    orthogonality reference space is the whole Cartan.
    """

    def __init__(self, parent: RootSystem, simple_roots=(), cartan=False):
        self.parent = parent
        self.cartan = cartan
        roots = []
        for r in simple_roots:
            if not isinstance(r, FiniteWeight):
                r = FiniteWeight(r)
            if r.dim != parent.ambient_dim:
                raise StructuralError("subalgebra roots must use parent coordinates")
            if r.inner(r) == 0:
                raise DomainError("subalgebra root with zero norm")
            roots.append(r)
        if cartan and roots:
            raise DomainError("the Cartan subalgebra has no roots")
        if not cartan and not roots:
            raise DomainError("subalgebra needs simple roots (or cartan=True)")
        self.simple_roots = tuple(roots)

    def root_system(self) -> RootSystem:
        if self.cartan:
            raise DomainError("the Cartan subalgebra has no root system")
        return root_system_from_roots(self.simple_roots, name="sub")


def parabolic_subalgebra(rs: RootSystem, index_set) -> SubalgebraSpec:
    """Subalgebra on the simple roots selected by ``index_set``."""
    if rs.is_affine:
        raise DomainError("parabolic subalgebras are taken in the finite system")
    indices = sorted(set(index_set))
    valid = rs.simple_indices()
    for i in indices:
        if i not in valid:
            raise DomainError(f"simple-root index {i} out of range")
    return SubalgebraSpec(rs, [rs.simple_root(i) for i in indices])


_ALGEBRA_RE = re.compile(r"^([A-G])([0-9]+)$")


def parse_algebra(name: str) -> RootSystem:
    """Parse names like "B2", "A1+A1", "B2^" (trailing ^ = affine)."""
    text = name.strip()
    affine = text.endswith("^")
    if affine:
        text = text[:-1]
    parts = text.split("+")
    systems = []
    for pos, part in enumerate(parts):
        m = _ALGEBRA_RE.match(part.strip())
        if not m:
            raise DomainError(f"malformed algebra name {name!r} at component {pos + 1}")
        systems.append(simple_root_system(m.group(1), int(m.group(2))))
    rs = direct_sum(*systems)
    return affine_extension(rs) if affine else rs
