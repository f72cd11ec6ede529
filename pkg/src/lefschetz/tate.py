"""Exact arithmetic with direct sums of powers of the Lefschetz motive.

A Tate motive here is a formal direct sum ``L^{l_1} + ... + L^{l_m}`` of
integer powers of the Lefschetz motive L, stored as a finitely supported map
from exponent to multiplicity.  The unit object (the motive of a point) is
``L^0``.  Negative exponents are allowed, since Tate twists produce them, but
a motive is called *effective* when every exponent is >= 0; everything in the
variety catalog is effective.

All arithmetic is exact: multiplicities are Python ints, and the morphism
calculus built on top of this module uses ``fractions.Fraction``.  No floats
anywhere.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class NonEffectiveError(ValueError):
    """Raised by operations defined only for effective motives."""


TermsLike = Mapping[int, int] | Iterable[tuple[int, int]]


class TateMotive:
    """A finite multiset of Lefschetz exponents.

    ``TateMotive({0: 1, 2: 3})`` is the motive ``1 + 3*L^2``.  Instances are
    immutable and hashable; the zero motive is ``TateMotive()``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, mult in items:
            if not isinstance(exp, int) or not isinstance(mult, int):
                raise TypeError("exponents and multiplicities must be integers")
            if mult < 0:
                raise ValueError(
                    "negative multiplicity %d for exponent %d" % (mult, exp)
                )
            if mult:
                acc[exp] = acc.get(exp, 0) + mult
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("TateMotive is immutable")

    @property
    def terms(self) -> dict[int, int]:
        """Exponent -> multiplicity, ascending exponent, zero entries absent."""
        return dict(self._terms)

    @property
    def rank(self) -> int:
        """Total number of summands, counted with multiplicity."""
        return sum(c for _, c in self._terms)

    @property
    def is_effective(self) -> bool:
        return all(l >= 0 for l, _ in self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def multiplicity(self, exponent: int) -> int:
        return dict(self._terms).get(exponent, 0)

    def exponent_multiset(self) -> tuple[int, ...]:
        """All exponents with repetition, sorted ascending."""
        return tuple(l for l, c in self._terms for _ in range(c))

    def __add__(self, other: "TateMotive") -> "TateMotive":
        return direct_sum(self, other)

    def __mul__(self, other: "TateMotive") -> "TateMotive":
        return tensor(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TateMotive):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return "TateMotive(%r)" % (dict(self._terms),)

    def text(self) -> str:
        """Canonical text form, e.g. ``1 + L + 2*L^2``; the zero motive is ``0``."""
        if not self._terms:
            return "0"
        parts = []
        for l, c in self._terms:
            if l == 0:
                parts.append(str(c))
                continue
            sym = "L" if l == 1 else "L^%d" % l
            parts.append(sym if c == 1 else "%d*%s" % (c, sym))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": {str(l): c for l, c in self._terms}}

    @classmethod
    def from_json(cls, data: dict) -> "TateMotive":
        if not isinstance(data, dict) or not isinstance(data.get("terms"), dict):
            raise ValueError("expected an object with a 'terms' mapping")
        return cls({int(l): c for l, c in data["terms"].items()})


UNIT = TateMotive({0: 1})
ZERO = TateMotive()


def lefschetz(exponent: int = 1) -> TateMotive:
    """The motive L^exponent."""
    return TateMotive({exponent: 1})


def direct_sum(a: TateMotive, b: TateMotive) -> TateMotive:
    added = a.terms
    for l, c in b.terms.items():
        added[l] = added.get(l, 0) + c
    return TateMotive(added)


def tensor(a: TateMotive, b: TateMotive) -> TateMotive:
    """L^p tensor L^q = L^{p+q}, extended biadditively."""
    out: dict[int, int] = {}
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            out[p + q] = out.get(p + q, 0) + cp * cq
    return TateMotive(out)


def twist(a: TateMotive, r: int) -> TateMotive:
    """Tate twist: tensoring with the inverse Lefschetz power, L^l -> L^{l-r}."""
    return TateMotive({l - r: c for l, c in a.terms.items()})


def hom_dim(x: TateMotive, y: TateMotive) -> int:
    """Dimension over Q of Hom(x, y).

    Hom(L^p, L^q) is Q when p == q and 0 otherwise, so the dimension is the
    sum over shared exponents of the product of multiplicities.
    """
    yt = y.terms
    return sum(c * yt[l] for l, c in x.terms.items() if l in yt)


def poincare(x: TateMotive) -> "PoincarePoly":
    """Poincare polynomial, sending L^l to t^{2l}; only odd-degree-free output.

    Defined for effective motives only, since a negative exponent has no
    Betti-number reading.
    """
    if not x.is_effective:
        raise NonEffectiveError(
            "poincare polynomial needs an effective motive, got %s" % x.text()
        )
    return PoincarePoly({2 * l: c for l, c in x.terms.items()})


class PoincarePoly:
    """Polynomial in t with non-negative integer coefficients.

    Motives of the catalog only ever produce even degrees, but odd degrees are
    representable because general Betti data (used by the obstruction checks)
    has them.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: TermsLike = ()):
        items = (
            coefficients.items()
            if isinstance(coefficients, Mapping)
            else coefficients
        )
        acc: dict[int, int] = {}
        for n, c in items:
            if not isinstance(n, int) or not isinstance(c, int):
                raise TypeError("degrees and coefficients must be integers")
            if n < 0:
                raise ValueError("negative degree %d" % n)
            if c < 0:
                raise ValueError("negative coefficient %d in degree %d" % (c, n))
            if c:
                acc[n] = acc.get(n, 0) + c
        object.__setattr__(self, "_coeffs", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("PoincarePoly is immutable")

    @property
    def coefficients(self) -> dict[int, int]:
        """Degree -> coefficient, ascending degree, zero entries absent."""
        return dict(self._coeffs)

    def coefficient(self, degree: int) -> int:
        return dict(self._coeffs).get(degree, 0)

    def __add__(self, other: "PoincarePoly") -> "PoincarePoly":
        acc = self.coefficients
        for n, c in other.coefficients.items():
            acc[n] = acc.get(n, 0) + c
        return PoincarePoly(acc)

    def __mul__(self, other: "PoincarePoly") -> "PoincarePoly":
        acc: dict[int, int] = {}
        for n, c in self._coeffs:
            for m, d in other._coeffs:
                acc[n + m] = acc.get(n + m, 0) + c * d
        return PoincarePoly(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PoincarePoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return "PoincarePoly(%r)" % (dict(self._coeffs),)

    def text(self) -> str:
        """Canonical text form, e.g. ``1 + 2*t^2 + t^4``; zero is ``0``."""
        if not self._coeffs:
            return "0"
        parts = []
        for n, c in self._coeffs:
            if n == 0:
                parts.append(str(c))
                continue
            sym = "t" if n == 1 else "t^%d" % n
            parts.append(sym if c == 1 else "%d*%s" % (c, sym))
        return " + ".join(parts)
