"""Sparse elements of the formal exponent algebra.

A FormalElement is a finite integer combination of formal exponents of
weights, the currency of every character computation here.  Terms with
multiplicity zero are pruned on construction so equality is plain
dictionary equality, and iteration is always sorted by canonical key.
"""

from __future__ import annotations

from .errors import DomainError, StructuralError
from .weights import AffineWeight, Weight, weight_to_obj


def _check_mult(m):
    if isinstance(m, bool) or not isinstance(m, int):
        raise StructuralError(f"multiplicity must be an integer, got {m!r}")
    return m


class FormalElement:
    """Finite map weight -> integer multiplicity with ring operations."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None, _trusted=False):
        if terms is None:
            self._terms = {}
        elif _trusted:
            self._terms = terms
        else:
            out = {}
            for w, m in terms.items() if isinstance(terms, dict) else terms:
                _check_mult(m)
                k = w.key
                if k in out:
                    m = out[k][1] + m
                if m:
                    out[k] = (w, m)
                elif k in out:
                    del out[k]
            self._terms = out

    @classmethod
    def from_pairs(cls, weights, mults) -> "FormalElement":
        weights, mults = list(weights), list(mults)
        if len(weights) != len(mults):
            raise DomainError("weights and multiplicities must have equal length")
        dims = {(type(w), w.dim) for w in weights}
        if len(dims) > 1:
            raise StructuralError("weights must share kind and dimension")
        return cls(zip(weights, mults))

    @classmethod
    def unit(cls, w: Weight, mult: int = 1) -> "FormalElement":
        """The single term ``mult * e^w``."""
        _check_mult(mult)
        return cls({w.key: (w, mult)} if mult else {}, _trusted=True)

    def coeff(self, w: Weight) -> int:
        entry = self._terms.get(w.key)
        return entry[1] if entry else 0

    def items(self):
        """Terms as (weight, multiplicity), sorted by canonical key."""
        return [self._terms[k] for k in sorted(self._terms)]

    def weights(self):
        return [w for w, _ in self.items()]

    def multiplicities(self):
        return [m for _, m in self.items()]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, FormalElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset((k, m) for k, (_, m) in self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, FormalElement):
            return NotImplemented
        out = dict(self._terms)
        for k, (w, m) in other._terms.items():
            if k in out:
                s = out[k][1] + m
                if s:
                    out[k] = (w, s)
                else:
                    del out[k]
            else:
                out[k] = (w, m)
        return FormalElement(out, _trusted=True)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "FormalElement":
        _check_mult(c)
        if c == 0:
            return FormalElement()
        return FormalElement({k: (w, c * m) for k, (w, m) in self._terms.items()}, _trusted=True)

    def shift(self, gamma: Weight) -> "FormalElement":
        """Multiply by e^gamma: add gamma to every exponent."""
        out = {}
        for w, m in self._terms.values():
            nw = w + gamma
            out[nw.key] = (nw, m)
        return FormalElement(out, _trusted=True)

    def __mul__(self, other):
        if not isinstance(other, FormalElement):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for wb, mb in b.values():
            for wa, ma in a.values():
                nw = wa + wb
                k = nw.key
                entry = out.get(k)
                if entry is None:
                    out[k] = (nw, ma * mb)
                else:
                    s = entry[1] + ma * mb
                    if s:
                        out[k] = (nw, s)
                    else:
                        del out[k]
        return FormalElement(out, _trusted=True)

    def truncate_grade(self, limit: int, top=0) -> "FormalElement":
        """Drop affine terms deeper than ``limit`` grades below ``top``."""
        floor = top - limit
        out = {}
        for k, (w, m) in self._terms.items():
            if not isinstance(w, AffineWeight):
                raise DomainError("grade truncation applies to affine weights only")
            if w.grade >= floor:
                out[k] = (w, m)
        return FormalElement(out, _trusted=True)

    def to_obj(self):
        """JSON form: sorted array of {weight, mult}."""
        return [{"weight": weight_to_obj(w), "mult": m} for w, m in self.items()]

    def __repr__(self):
        if not self._terms:
            return "FormalElement(0)"
        bits = [f"{m}*e^{w!r}" for w, m in self.items()]
        return "FormalElement(" + " + ".join(bits) + ")"


def make_formal_element(weights, mults) -> FormalElement:
    """Constructor mirroring the library API; duplicates coalesce."""
    return FormalElement.from_pairs(weights, mults)
