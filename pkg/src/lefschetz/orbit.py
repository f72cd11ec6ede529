"""The orbit category of Tate motives under Tate twist, with exact matrices.

Objects are Tate motives.  A morphism x -> y is a finitely supported family
of rational matrices indexed by an integer grade r, where the grade-r matrix
is an honest (twist-preserving) morphism from x into the r-fold twist of y.
Rows are indexed by the summands of the target, columns by the summands of
the source, both enumerated in ascending exponent order with ties broken by
copy index.

Because Hom(L^p, L^q) vanishes unless p == q, the grade-r matrix can have a
nonzero entry at (i, j) only when ``target_exponent_i - r == source_exponent_j``.
That Kronecker-delta pattern is enforced at construction time and is what
makes the lifting algorithm below work.

Composition is graded convolution: the grade-l component of ``g after f`` is
the sum over r of ``g_{l-r} @ f_r``.  Twisting a matrix does not change its
entries, so plain matrix products suffice.

``decompose_via_orbit`` inverts the collapse: given that a motive m becomes
isomorphic to a direct sum of rank(m) unit objects after the twist is
quotiented out, and a bound dim on the twists involved, it reconstructs the
exponent multiset of m.  The two directions of the isomorphism are lifted to
block morphisms Phi: m -> B and Psi: B -> m, where B stacks rank(m) copies of
each of L^0 .. L^dim; Psi Phi = id forces Phi Psi to be an idempotent whose
diagonal block at level l has trace equal to the multiplicity of L^l in m
(the trace of an idempotent matrix is its rank, exactly, over Q).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .tate import TateMotive, hom_dim, twist

Matrix = tuple[tuple[Fraction, ...], ...]


class CompositionError(ValueError):
    """Morphisms whose source/target do not line up."""


class LiftError(ValueError):
    """Base class for failures of the orbit-to-motive lifting algorithm."""


class RankMismatchError(LiftError):
    """The unit-object side has the wrong number of summands."""


class SupportViolationError(LiftError):
    """A morphism component sits at a grade outside the allowed window."""


class NotAnIsomorphismError(LiftError):
    """The given pair of morphisms is not a mutually inverse pair."""


def term_enumeration(m: TateMotive) -> tuple[tuple[int, int], ...]:
    """Summand basis of a motive: (exponent, copy index), ascending exponent."""
    return tuple((l, i) for l, c in m.terms.items() for i in range(c))


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _zero_matrix(nrows: int, ncols: int) -> Matrix:
    return tuple((Fraction(0),) * ncols for _ in range(nrows))

def _identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    # shapes are guaranteed by the callers; b is never empty here
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def _madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


class OrbitMorphism:
    """A graded family of exact rational matrices between two Tate motives.

    ``components`` maps grade r to a rank(target) x rank(source) matrix;
    all-zero matrices are dropped, entries may be ints, Fractions or strings
    like ``"1/2"``.  Construction validates shapes and the delta pattern.
    """

    def __init__(
        self,
        source: TateMotive,
        target: TateMotive,
        components: Mapping[int, Iterable[Iterable]] = (),
    ):
        if not isinstance(source, TateMotive) or not isinstance(target, TateMotive):
            raise TypeError("source and target must be TateMotive")
        self.source = source
        self.target = target
        src = term_enumeration(source)
        tgt = term_enumeration(target)
        comps: dict[int, Matrix] = {}
        items = components.items() if isinstance(components, Mapping) else components
        for r, rows in items:
            r = int(r)
            mat = _as_matrix(rows)
            if len(mat) != len(tgt) or any(len(row) != len(src) for row in mat):
                raise ValueError(
                    "grade %d component must be %d x %d" % (r, len(tgt), len(src))
                )
            nonzero = False
            for i, row in enumerate(mat):
                for j, entry in enumerate(row):
                    if entry == 0:
                        continue
                    nonzero = True
                    if tgt[i][0] - r != src[j][0]:
                        raise ValueError(
                            "grade %d entry (%d, %d) violates the delta pattern: "
                            "target exponent %d - %d != source exponent %d"
                            % (r, i, j, tgt[i][0], r, src[j][0])
                        )
            if nonzero:
                if r in comps:
                    raise ValueError("duplicate grade %d" % r)
                comps[r] = mat
        self.components = dict(sorted(comps.items()))

    def component(self, r: int) -> Matrix:
        """The grade-r matrix, a zero matrix when absent."""
        got = self.components.get(r)
        if got is not None:
            return got
        return _zero_matrix(self.target.rank, self.source.rank)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.components)

    @property
    def is_twist_preserving(self) -> bool:
        """True when only the grade-0 component is present."""
        return set(self.components) <= {0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrbitMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.components == other.components
        )

    def __repr__(self) -> str:
        return "OrbitMorphism(%s -> %s, grades %r)" % (
            self.source.text(),
            self.target.text(),
            list(self.components),
        )

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "components": {
                str(r): [[str(x) for x in row] for row in mat]
                for r, mat in self.components.items()
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrbitMorphism":
        for key in ("source", "target", "components"):
            if key not in data:
                raise ValueError("morphism JSON needs a %r field" % key)
        return cls(
            TateMotive.from_json(data["source"]),
            TateMotive.from_json(data["target"]),
            {int(r): rows for r, rows in data["components"].items()},
        )


def chow_morphism(source: TateMotive, target: TateMotive, matrix) -> OrbitMorphism:
    """A twist-preserving morphism: a single matrix concentrated at grade 0."""
    return OrbitMorphism(source, target, {0: matrix})


def identity_morphism(x: TateMotive) -> OrbitMorphism:
    return chow_morphism(x, x, _identity_matrix(x.rank))


def orbit_hom_support(x: TateMotive, y: TateMotive) -> dict[int, int]:
    """Grade -> dimension of Hom(x, y twisted r times), nonzero grades only.

    Hom in the orbit category is the direct sum over r of the twisted honest
    Hom spaces, so the support is the difference set of the exponent sets.
    """
    grades = {b - a for a in x.terms for b in y.terms}
    out = {}
    for r in sorted(grades):
        d = hom_dim(x, twist(y, r))
        if d:
            out[r] = d
    return out


def compose(g: OrbitMorphism, f: OrbitMorphism) -> OrbitMorphism:
    """``g after f``; grade-l component is the sum over r of g_{l-r} @ f_r."""
    if f.target != g.source:
        raise CompositionError(
            "cannot compose: intermediate objects differ (%s vs %s)"
            % (f.target.text(), g.source.text())
        )
    acc: dict[int, Matrix] = {}
    for r, fr in f.components.items():
        for s, gs in g.components.items():
            prod = _matmul(gs, fr)
            l = r + s
            acc[l] = _madd(acc[l], prod) if l in acc else prod
    return OrbitMorphism(f.source, g.target, acc)


def project(x: TateMotive) -> TateMotive:
    """The quotient functor on objects; the identity on underlying data."""
    return x


def project_morphism(f: OrbitMorphism) -> OrbitMorphism:
    """Image of a twist-preserving morphism under the quotient functor.

    The quotient is faithful grade by grade, so the data is unchanged; input
    with support outside grade 0 is rejected because it is not in the image
    of the honest category.
    """
    if not f.is_twist_preserving:
        raise ValueError(
            "not a twist-preserving morphism: support %r" % (list(f.support),)
        )
    return f


def canonical_unit_iso(l: int) -> tuple[OrbitMorphism, OrbitMorphism]:
    """The mutually inverse pair between the unit and L^l in the orbit category.

    Returns (u, v) with u: 1 -> L^l concentrated at grade l and v: L^l -> 1
    at grade -l; both directions compose to identities.
    """
    if not isinstance(l, int) or l < 0:
        raise ValueError("twist level must be a non-negative integer")
    one = TateMotive({0: 1})
    ll = TateMotive({l: 1})
    u = OrbitMorphism(one, ll, {l: ((1,),)})
    v = OrbitMorphism(ll, one, {-l: ((1,),)})
    return u, v


def block_unit_iso(m: TateMotive) -> tuple[OrbitMorphism, OrbitMorphism]:
    """The canonical isomorphism between m and a sum of rank(m) unit objects.

    The i-th summand of m (in enumeration order, exponent l) is matched with
    the i-th unit copy through the grade -l and grade l unit entries. Output
    is (f, g) with f: m -> units, g: units -> m, inverse to each other.
    """
    enum = term_enumeration(m)
    n = len(enum)
    units = TateMotive({0: n})
    f_comps: dict[int, list[list[int]]] = {}
    g_comps: dict[int, list[list[int]]] = {}
    for j, (l, _) in enumerate(enum):
        f_comps.setdefault(-l, [[0] * n for _ in range(n)])[j][j] = 1
        g_comps.setdefault(l, [[0] * n for _ in range(n)])[j][j] = 1
    f = OrbitMorphism(m, units, f_comps)
    g = OrbitMorphism(units, m, g_comps)
    return f, g


def decompose_via_orbit(
    m: TateMotive, f: OrbitMorphism, g: OrbitMorphism, dim: int
) -> tuple[int, ...]:
    """Recover the exponent multiset of m from an orbit-category isomorphism.

    Input: f: m -> U and g: U -> m where U is a direct sum of unit objects,
    mutually inverse in the orbit category, with f supported in grades
    {-dim..0} and g in {0..dim}.  Output: the exponents of m with repetition,
    ascending.  The multiplicity of L^l is read off as the trace of the
    idempotent block f_{-l} @ g_l, which is exact rational arithmetic
    throughout and an integer precisely because the block is a projector.
    """
    if not isinstance(dim, int) or dim < 0:
        raise ValueError("dim must be a non-negative integer")
    if f.source != m or g.target != m:
        raise ValueError("f must start at m and g must end at m")
    units = f.target
    if g.source != units:
        raise ValueError("f and g must connect m with one and the same object")
    if any(l != 0 for l in units.terms):
        raise ValueError(
            "the far side must be a direct sum of unit objects, got %s"
            % units.text()
        )
    n = m.rank
    if units.rank != n:
        raise RankMismatchError(
            "unit side has rank %d but m has rank %d" % (units.rank, n)
        )
    bad_f = [r for r in f.support if not -dim <= r <= 0]
    bad_g = [s for s in g.support if not 0 <= s <= dim]
    if bad_f or bad_g:
        raise SupportViolationError(
            "support outside the dimension window [-%d..0]/[0..%d]: f at %r, g at %r"
            % (dim, dim, bad_f, bad_g)
        )
    if compose(g, f) != identity_morphism(m):
        raise NotAnIsomorphismError("g after f is not the identity of m")
    if compose(f, g) != identity_morphism(units):
        raise NotAnIsomorphismError("f after g is not the identity of the unit sum")

    # Lift both directions to block morphisms over L^0 .. L^dim and check
    # that the round trip is still the identity at grade 0.
    psi_phi = _zero_matrix(n, n)
    for l in range(dim + 1):
        fl = f.components.get(-l)
        gl = g.components.get(l)
        if fl is not None and gl is not None:
            psi_phi = _madd(psi_phi, _matmul(gl, fl))
    if psi_phi != _identity_matrix(n):
        raise NotAnIsomorphismError("lifted round trip is not the identity")

    # Diagonal idempotent blocks of the reverse round trip: multiplicity of
    # L^l is the rank, hence the trace, of f_{-l} @ g_l.
    multiset: list[int] = []
    for l in range(dim + 1):
        fl = f.components.get(-l)
        gl = g.components.get(l)
        if fl is None or gl is None:
            continue
        block = _matmul(fl, gl)
        tr = sum(block[i][i] for i in range(len(block)))
        if tr.denominator != 1 or not 0 <= tr <= n:
            raise NotAnIsomorphismError(
                "projector trace at level %d is %s, not a multiplicity" % (l, tr)
            )
        multiset.extend([l] * int(tr))
    # Mutually inverse plus the delta pattern force agreement with m itself.
    assert tuple(multiset) == m.exponent_multiset()
    return tuple(multiset)
