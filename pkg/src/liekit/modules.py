"""Highest-weight modules: singular elements, multiplicities, characters.

Two independent multiplicity algorithms are provided.  The recurrence walks
the dominant lattice in decreasing pairing with the Weyl vector and resolves
each off-chamber lookup through the Weyl symmetry of the module's weight
system (full group for irreducibles, the parabolic subgroup for generalized
Verma modules, nothing for Verma modules).  The Freudenthal formula applies
to irreducible modules only and serves as the cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .errors import DomainError, StructuralError
from .formal import FormalElement
from .rootsystems import RootSystem
from .weights import AffineWeight, Weight, inner, rational
from .weyl import orbit, orbit_with_parity, to_dominant

_Q = Fraction

IRREDUCIBLE = "irreducible"
VERMA = "verma"
PARABOLIC_VERMA = "parabolic_verma"
DIRECT_SUM = "direct_sum"
TENSOR_PRODUCT = "tensor_product"


class Module:
    """Descriptor for a highest-weight module (or a sum/product of them)."""

    def __init__(self, kind, rs, highest_weight=None, index_set=None, depth_limit=None, components=()):
        self.kind = kind
        self.rs = rs
        self.highest_weight = highest_weight
        self.index_set = index_set
        self.depth_limit = depth_limit
        self.components = tuple(components)

    def __repr__(self):
        if self.kind in (DIRECT_SUM, TENSOR_PRODUCT):
            sep = " + " if self.kind == DIRECT_SUM else " x "
            return "(" + sep.join(repr(c) for c in self.components) + ")"
        return f"{self.kind}[{self.rs.name}]{self.rs.dynkin_labels(self.highest_weight)}"


def _resolve_weight(rs: RootSystem, hw) -> Weight:
    if isinstance(hw, (list, tuple)):
        return rs.weight(hw)
    return hw


def _check_affine_level(rs, mu):
    if rs.is_affine and mu.level <= 0:
        raise DomainError("affine highest-weight modules need positive level")


def irreducible_module(rs: RootSystem, hw) -> Module:
    mu = _resolve_weight(rs, hw)
    labels = rs.dynkin_labels(mu)
    if any(l < 0 or l.denominator != 1 for l in labels):
        raise DomainError(f"irreducible module needs a dominant integral highest weight, labels {labels}")
    _check_affine_level(rs, mu)
    return Module(IRREDUCIBLE, rs, mu, depth_limit=rs.grade_limit if rs.is_affine else None)


def verma_module(rs: RootSystem, hw, depth_limit=None) -> Module:
    mu = _resolve_weight(rs, hw)
    limit = depth_limit if depth_limit is not None else (rs.grade_limit if rs.is_affine else 10)
    return Module(VERMA, rs, mu, depth_limit=limit)


def parabolic_verma_module(rs: RootSystem, hw, index_set, depth_limit=None) -> Module:
    if rs.is_affine:
        raise DomainError("parabolic Verma modules are supported for finite systems")
    mu = _resolve_weight(rs, hw)
    indices = frozenset(index_set)
    valid = set(rs.simple_indices())
    if not indices <= valid:
        raise DomainError("parabolic index set out of range")
    labels = rs.dynkin_labels(mu)
    for i in indices:
        l = labels[i - 1]
        if l < 0 or l.denominator != 1:
            raise DomainError("highest weight must be dominant integral on the parabolic index set")
    limit = depth_limit if depth_limit is not None else 10
    return Module(PARABOLIC_VERMA, rs, mu, index_set=indices, depth_limit=limit)


def direct_sum_module(*modules: Module) -> Module:
    if not modules:
        raise DomainError("empty direct sum")
    rs = modules[0].rs
    if any(m.rs is not rs for m in modules):
        raise DomainError("direct summands must live on one root system")
    return Module(DIRECT_SUM, rs, components=modules)


def tensor_module(*modules: Module) -> Module:
    if len(modules) < 2:
        raise DomainError("tensor product needs at least two factors")
    rs = modules[0].rs
    if rs.is_affine:
        raise DomainError("tensor products of affine modules are unsupported")
    if any(m.rs is not rs for m in modules):
        raise DomainError("tensor factors must live on one root system")
    return Module(TENSOR_PRODUCT, rs, components=modules)


def _symmetry_indices(m: Module):
    """Simple-root indices generating the Weyl symmetry of the weight system."""
    if m.kind == IRREDUCIBLE:
        return None  # full group
    if m.kind == PARABOLIC_VERMA:
        return tuple(sorted(m.index_set))
    return ()  # Verma: no symmetry


def singular_element(m: Module) -> FormalElement:
    """Alternating sum over the symmetry group of e^{w(mu+rho)-rho}."""
    rs, mu = m.rs, m.highest_weight
    if m.kind == VERMA:
        return FormalElement.unit(mu)
    if m.kind == DIRECT_SUM:
        out = FormalElement()
        for c in m.components:
            out = out + singular_element(c)
        return out
    if m.kind not in (IRREDUCIBLE, PARABOLIC_VERMA):
        raise DomainError(f"singular element undefined for {m.kind}")
    rho = rs.weyl_vector()
    floor = mu.grade - m.depth_limit if rs.is_affine else None
    index_set = None if m.kind == IRREDUCIBLE else tuple(sorted(m.index_set))
    pairs = orbit_with_parity(rs, mu + rho, grade_floor=floor, index_set=index_set)
    return FormalElement([(v - rho, par) for v, par in pairs])


# -- dominant lattices --------------------------------------------------


def _sort_lattice(rs, weights):
    rho = rs.weyl_vector()
    return sorted(weights, key=lambda w: (-inner(w, rho), w.key))


def _finite_irreducible_lattice(rs: RootSystem, mu: Weight):
    """All dominant weights of the form mu - (nonnegative root sum)."""
    low = to_dominant(rs, -mu).dominant  # -w0(mu)
    bounds = rs.root_coefficients(mu + low)
    if bounds is None:
        raise StructuralError("mu - w0(mu) must lie in the root lattice")
    simple = list(rs.simple_roots)
    out = []
    for ns in iproduct(*(range(b + 1) for b in bounds)):
        w = mu
        for n, alpha in zip(ns, simple):
            if n:
                w = w - alpha.scale(n)
        if rs.is_dominant(w):
            out.append(w)
    return _sort_lattice(rs, out)


def _affine_irreducible_lattice(rs: RootSystem, mu: Weight, limit: int):
    """Dominant lattice of an affine module, one congruent class per grade."""
    fin = rs.finite_part
    theta, _, comarks = fin.highest_root_data()
    c = rs.norm_const()
    k_conv = mu.level / c
    if k_conv.denominator != 1:
        raise DomainError("highest weight has non-integral level")
    k_conv = int(k_conv)

    # Finite-dominant label vectors with comark pairing at most the level.
    candidates = []

    def descend(pos, labels, used):
        if pos == fin.num_simple:
            candidates.append(tuple(labels))
            return
        cm = comarks[pos]
        l = 0
        while used + l * cm <= k_conv:
            descend(pos + 1, labels + [l], used + l * cm)
            l += 1

    descend(0, [], _Q(0))

    simple_fin = list(fin.simple_roots)
    out = []
    for labels in candidates:
        lam_fin = fin.weight(labels)
        for n in range(0, limit + 1):
            from .linalg import coords_in_span

            diff = mu.finite - lam_fin + theta.scale(n)
            coords = coords_in_span(simple_fin, diff)
            if coords is None or any(x < 0 or x.denominator != 1 for x in coords):
                continue
            out.append(AffineWeight(lam_fin, mu.level, mu.grade - n))
    return _sort_lattice(rs, out)


def _verma_lattice(rs: RootSystem, mu: Weight, limit: int, index_set):
    """Weights mu - sum(n_i alpha_i) with total depth <= limit, folded region only."""
    simple = list(rs.simple_roots)
    out = []

    def descend(pos, w, depth):
        if pos == len(simple):
            if index_set is None or _dominant_on(rs, w, index_set):
                out.append(w)
            return
        alpha = simple[pos]
        x = w
        for n in range(0, limit - depth + 1):
            descend(pos + 1, x, depth + n)
            x = x - alpha
    # descend enumerates n for the current root via repeated subtraction

    def _dominant_on(rs, w, indices):
        return all(rs.simple_root(i).inner(w) >= 0 for i in indices)

    descend(0, mu, 0)
    return _sort_lattice(rs, out)


def dominant_weight_lattice(rs: RootSystem, mu: Weight, depth_limit=None):
    """Dominant weights reachable from ``mu`` by subtracting simple roots."""
    mu = _resolve_weight(rs, mu)
    if rs.is_affine:
        limit = depth_limit if depth_limit is not None else rs.grade_limit
        return _affine_irreducible_lattice(rs, mu, limit)
    return _finite_irreducible_lattice(rs, mu)


def _module_lattice(m: Module):
    rs, mu = m.rs, m.highest_weight
    if m.kind == IRREDUCIBLE:
        if rs.is_affine:
            return _affine_irreducible_lattice(rs, mu, m.depth_limit)
        return _finite_irreducible_lattice(rs, mu)
    if m.kind in (VERMA, PARABOLIC_VERMA):
        return _verma_lattice(rs, mu, m.depth_limit, _symmetry_indices(m))
    raise DomainError(f"no weight lattice for {m.kind}")


# -- multiplicities -----------------------------------------------------


def _rho_orbit_shifts(rs: RootSystem, grade_floor=None):
    """The set {w rho - rho, w != e} with parities, grade-truncated if affine."""
    rho = rs.weyl_vector()
    shifts = []
    for v, par in orbit_with_parity(rs, rho, grade_floor=grade_floor):
        s = v - rho
        if not s.is_zero():
            shifts.append((s, par))
    return shifts


def _mult_recurrence(m: Module) -> dict:
    rs, mu = m.rs, m.highest_weight
    sym = _symmetry_indices(m)
    lattice = _module_lattice(m)
    floor = mu.grade - m.depth_limit if rs.is_affine else None
    shifts = _rho_orbit_shifts(rs, grade_floor=floor)
    sing = singular_element(m)
    table = {}
    fold_cache = {}
    top_grade = mu.grade if rs.is_affine else None
    for xi in lattice:
        val = sing.coeff(xi)
        for s, eps in shifts:
            eta = xi - s
            if rs.is_affine and eta.grade > top_grade:
                continue
            k = eta.key
            dom_key = fold_cache.get(k)
            if dom_key is None:
                dom_key = to_dominant(rs, eta, sym).dominant.key
                fold_cache[k] = dom_key
            t = table.get(dom_key)
            if t:
                val -= eps * t
        table[xi.key] = val
    return {"lattice": lattice, "table": table}


def _mult_freudenthal(m: Module) -> dict:
    if m.kind != IRREDUCIBLE:
        raise DomainError("the Freudenthal formula applies to irreducible modules only")
    rs, mu = m.rs, m.highest_weight
    rho = rs.weyl_vector()
    lattice = _module_lattice(m)
    positives = rs.positive_roots(m.depth_limit) if rs.is_affine else rs.positive_roots()
    top_sq = inner(mu + rho, mu + rho)
    table = {mu.key: 1}
    fold_cache = {}
    for xi in lattice:
        if xi.key in table:
            continue
        denom = top_sq - inner(xi + rho, xi + rho)
        if denom == 0:
            raise DomainError("degenerate Casimir denominator in the dominant lattice")
        acc = _Q(0)
        for alpha, mult in positives:
            k = 1
            while True:
                eta = xi + alpha.scale(k)
                key = eta.key
                dom_key = fold_cache.get(key)
                if dom_key is None:
                    dom_key = to_dominant(rs, eta).dominant.key
                    fold_cache[key] = dom_key
                t = table.get(dom_key, 0)
                if not t:
                    break
                acc += mult * inner(eta, alpha) * t
                k += 1
        val = 2 * acc / denom
        if val.denominator != 1:
            raise StructuralError("Freudenthal produced a non-integer multiplicity")
        table[xi.key] = int(val)
    return {"lattice": lattice, "table": table}


def multiplicities(m: Module, algorithm="recurrence") -> FormalElement:
    """Dominant-weight multiplicities of the module."""
    if m.kind == DIRECT_SUM:
        out = FormalElement()
        for c in m.components:
            out = out + multiplicities(c, algorithm)
        return out
    if m.kind not in (IRREDUCIBLE, VERMA, PARABOLIC_VERMA):
        raise DomainError(f"multiplicities undefined for {m.kind}")
    if algorithm == "recurrence":
        data = _mult_recurrence(m)
    elif algorithm == "freudenthal":
        data = _mult_freudenthal(m)
    else:
        raise DomainError(f"unknown algorithm {algorithm!r}")
    table = data["table"]
    return FormalElement([(w, table[w.key]) for w in data["lattice"] if table[w.key]])


def _depth(rs: RootSystem, mu: Weight, w: Weight):
    coeffs = rs.root_coefficients(mu - w)
    if coeffs is None or any(c < 0 for c in coeffs):
        return None
    return sum(coeffs)


def character(m: Module, algorithm="recurrence") -> FormalElement:
    """Full (truncated) formal character."""
    rs = m.rs
    if m.kind == DIRECT_SUM:
        out = FormalElement()
        for c in m.components:
            out = out + character(c, algorithm)
        return out
    if m.kind == TENSOR_PRODUCT:
        out = character(m.components[0], algorithm)
        for c in m.components[1:]:
            out = out * character(c, algorithm)
        return out
    mults = multiplicities(m, algorithm)
    if m.kind == VERMA:
        return mults
    mu = m.highest_weight
    sym = _symmetry_indices(m)
    floor = mu.grade - m.depth_limit if rs.is_affine else None
    terms = {}
    for w, mult in mults.items():
        for v in orbit(rs, w, grade_floor=floor, index_set=sym):
            if m.kind == PARABOLIC_VERMA and (d := _depth(rs, mu, v)) is not None and d > m.depth_limit:
                continue
            terms[v.key] = (v, mult)
    return FormalElement(terms, _trusted=True)


def dimension(rs: RootSystem, mu) -> int:
    """Weyl dimension formula; exact integer."""
    if rs.is_affine:
        raise DomainError("dimension applies to finite modules")
    mu = _resolve_weight(rs, mu)
    labels = rs.dynkin_labels(mu)
    if any(l < 0 for l in labels):
        raise DomainError("dimension needs a dominant highest weight")
    rho = rs.weyl_vector()
    num = _Q(1)
    den = _Q(1)
    shifted = mu + rho
    for alpha, _ in rs.positive_roots():
        num *= shifted.inner(alpha)
        den *= rho.inner(alpha)
    val = num / den
    if val.denominator != 1:
        raise StructuralError("Weyl dimension formula produced a non-integer")
    return int(val)
