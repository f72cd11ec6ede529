"""Motivic measures on the Tate part of the Grothendieck ring of varieties.

``K0Class`` is an integer Laurent polynomial in the class Lv of the affine
line; coefficients may be negative (virtual classes).  Two measures act on
it:

* ``chi_gs`` sends Lv to the Lefschetz motive L.  On classes with
  non-negative coefficients this is the tautological identification with
  Tate motives; a negative coefficient has no motive to map to and is
  rejected.
* ``chi_hd`` sends Lv to u*v inside integer Laurent polynomials in u and v,
  i.e. takes the Hodge-Deligne (E-) polynomial.  Being a ring map it is
  perfectly happy with virtual classes.

A Hodge-Deligne polynomial is Hodge-Tate when only diagonal monomials
(u v)^p occur; everything in the image of chi_hd is, which is the commuting
triangle the tests pin down.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .tate import NonEffectiveError, TateMotive
from .varieties import GeneralizedMotive, OpaqueMotiveError, VarietyExpr, motive_of


class VirtualClassError(ValueError):
    """A virtual class (negative coefficient) where a motive is required."""


class K0Class:
    """Integer Laurent polynomial in Lv, the class of the affine line."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            if c:
                acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("K0Class is immutable")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def is_effective(self) -> bool:
        """No negative coefficients, i.e. an honest (non-virtual) class."""
        return all(c >= 0 for _, c in self._terms)

    def __add__(self, other: "K0Class") -> "K0Class":
        acc = self.terms
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return K0Class(acc)

    def __neg__(self) -> "K0Class":
        return K0Class({e: -c for e, c in self._terms})

    def __sub__(self, other: "K0Class") -> "K0Class":
        return self + (-other)

    def __mul__(self, other: "K0Class") -> "K0Class":
        acc: dict[int, int] = {}
        for e, c in self._terms:
            for f, d in other._terms:
                acc[e + f] = acc.get(e + f, 0) + c * d
        return K0Class(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, K0Class):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return "K0Class(%r)" % (dict(self._terms),)

    def text(self) -> str:
        """Canonical text form, e.g. ``1 + 2*Lv + Lv^2``; zero is ``0``."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                parts.append(str(c))
                continue
            sym = "Lv" if e == 1 else "Lv^%d" % e
            if c == 1:
                parts.append(sym)
            elif c == -1:
                parts.append("-%s" % sym)
            else:
                parts.append("%d*%s" % (c, sym))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": {str(e): c for e, c in self._terms}}

    @classmethod
    def from_json(cls, data: dict) -> "K0Class":
        if not isinstance(data, dict) or not isinstance(data.get("terms"), dict):
            raise ValueError("expected an object with a 'terms' mapping")
        return cls({int(e): c for e, c in data["terms"].items()})


LV = K0Class({1: 1})


class HodgeDelignePoly:
    """Integer Laurent polynomial in u and v, keyed by the (p, q) bidegree."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for pq, c in items:
            p, q = pq
            if not isinstance(p, int) or not isinstance(q, int) or not isinstance(c, int):
                raise TypeError("bidegrees and coefficients must be integers")
            if c:
                acc[(p, q)] = acc.get((p, q), 0) + c
        ordered = sorted(acc.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))
        object.__setattr__(self, "_terms", tuple(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("HodgeDelignePoly is immutable")

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: "HodgeDelignePoly") -> "HodgeDelignePoly":
        acc = self.terms
        for pq, c in other.terms.items():
            acc[pq] = acc.get(pq, 0) + c
        return HodgeDelignePoly(acc)

    def __mul__(self, other: "HodgeDelignePoly") -> "HodgeDelignePoly":
        acc: dict[tuple[int, int], int] = {}
        for (p, q), c in self._terms:
            for (r, s), d in other._terms:
                key = (p + r, q + s)
                acc[key] = acc.get(key, 0) + c * d
        return HodgeDelignePoly(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeDelignePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return "HodgeDelignePoly(%r)" % (dict(self._terms),)

    def text(self) -> str:
        """Canonical text form, e.g. ``1 + u*v``, ordered by total degree."""
        if not self._terms:
            return "0"

        def monomial(p: int, q: int) -> str:
            factors = []
            if p:
                factors.append("u" if p == 1 else "u^%d" % p)
            if q:
                factors.append("v" if q == 1 else "v^%d" % q)
            return "*".join(factors)

        parts = []
        for (p, q), c in self._terms:
            mono = monomial(p, q)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-%s" % mono)
            else:
                parts.append("%d*%s" % (c, mono))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": {"%d,%d" % pq: c for pq, c in self._terms}}

    @classmethod
    def from_json(cls, data: dict) -> "HodgeDelignePoly":
        if not isinstance(data, dict) or not isinstance(data.get("terms"), dict):
            raise ValueError("expected an object with a 'terms' mapping")
        out: dict[tuple[int, int], int] = {}
        for key, c in data["terms"].items():
            p, q = key.split(",")
            out[(int(p), int(q))] = c
        return cls(out)


def k0_class(e: VarietyExpr | GeneralizedMotive | TateMotive) -> K0Class:
    """Class in the Grothendieck ring of varieties, Lefschetz power by power.

    Accepts a catalog expression or a motive; opaque summands have no class
    in the Lv-subring and are rejected.
    """
    if isinstance(e, VarietyExpr):
        e = motive_of(e)
    if isinstance(e, GeneralizedMotive):
        if e.opaque:
            raise OpaqueMotiveError(
                "opaque summands have no class in the Lv-subring"
            )
        e = e.tate
    if not isinstance(e, TateMotive):
        raise TypeError("expected a variety expression or a motive")
    return K0Class(e.terms)


def chi_gs(c: K0Class) -> TateMotive:
    """The measure into Tate motives: Lv -> L, coefficientwise.

    An isomorphism onto its image, but only defined on honest classes; a
    virtual class is rejected rather than truncated.
    """
    bad = [e for e, coeff in c.terms.items() if coeff < 0]
    if bad:
        raise VirtualClassError(
            "virtual class: negative coefficient at exponents %r" % (sorted(bad),)
        )
    return TateMotive(c.terms)


def chi_hd(c: K0Class) -> HodgeDelignePoly:
    """The Hodge-Deligne measure: Lv -> u*v, a ring map on all classes."""
    return HodgeDelignePoly({(e, e): coeff for e, coeff in c.terms.items()})


def hodge_tate(p: HodgeDelignePoly) -> bool:
    """Whether only diagonal monomials (u*v)^k occur."""
    return all(pq[0] == pq[1] for pq in p.terms)


def hodge_numbers(m: TateMotive) -> dict[tuple[int, int], int]:
    """Hodge numbers of an effective Tate motive: h^{l,l} = multiplicity of L^l."""
    if not m.is_effective:
        raise NonEffectiveError(
            "hodge numbers need an effective motive, got %s" % m.text()
        )
    return {(l, l): c for l, c in m.terms.items()}
