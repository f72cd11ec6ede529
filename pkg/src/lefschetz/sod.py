"""Semiorthogonal decomposition bookkeeping over the unit noncommutative motive.

A Collection is an ordered list of pieces, each either exceptional (its
noncommutative motive is one copy of the unit, rank 1 by definition) or an
opaque named piece whose rank may be unknown.  Under any additive invariant
the value of a rank-n piece is n copies of the invariant of the base point,
so ranks are pinned down by counting: the ranks of all pieces must sum to the
rank of the total motive.  ``solve_nc_ranks`` does exactly that bookkeeping
and refuses to guess when more than one rank is unknown.

The full-exceptional-collection obstruction checks live here too: odd Betti
numbers rule a full exceptional collection out entirely, and the largest even
Betti number is a lower bound for the length of any such collection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .tate import PoincarePoly, TateMotive

EXCEPTIONAL = "exceptional"
OPAQUE = "opaque"

FEC_OK = "ok"
FEC_FAILS_ODD = "fails-odd-vanishing"
FEC_FAILS_LENGTH = "fails-length-bound"


class InconsistentRanksError(ValueError):
    """Known ranks cannot add up to the rank of the total motive."""


class UnderdeterminedError(ValueError):
    """More than one unknown rank; the system is reported, never guessed."""


@dataclass(frozen=True)
class SODPiece:
    """One piece of a decomposition.

    Exceptional pieces always have rank 1; opaque pieces carry a name in
    ``label`` and ``nc_rank`` None until solved.
    """

    label: str
    kind: str = EXCEPTIONAL
    nc_rank: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValueError("piece label must be a non-empty string")
        if self.kind not in (EXCEPTIONAL, OPAQUE):
            raise ValueError("piece kind must be %r or %r" % (EXCEPTIONAL, OPAQUE))
        if self.kind == EXCEPTIONAL:
            if self.nc_rank not in (None, 1):
                raise ValueError("an exceptional piece has rank 1")
            object.__setattr__(self, "nc_rank", 1)
        elif self.nc_rank is not None:
            if not isinstance(self.nc_rank, int) or self.nc_rank < 0:
                raise ValueError("nc_rank must be a non-negative integer or None")

    def to_json(self) -> dict:
        out: dict = {"label": self.label, "kind": self.kind}
        if self.nc_rank is not None:
            out["nc_rank"] = self.nc_rank
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SODPiece":
        if not isinstance(data, dict) or "label" not in data or "kind" not in data:
            raise ValueError("piece JSON needs 'label' and 'kind'")
        return cls(data["label"], data["kind"], data.get("nc_rank"))


def exceptional(label: str) -> SODPiece:
    return SODPiece(label, EXCEPTIONAL)


def opaque(label: str, nc_rank: Optional[int] = None) -> SODPiece:
    return SODPiece(label, OPAQUE, nc_rank)


@dataclass(frozen=True)
class Collection:
    """A non-empty ordered tuple of pieces."""

    pieces: tuple[SODPiece, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise ValueError("a collection has at least one piece")
        for p in self.pieces:
            if not isinstance(p, SODPiece):
                raise TypeError("collection pieces must be SODPiece")

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.pieces)

    def to_json(self) -> dict:
        return {"pieces": [p.to_json() for p in self.pieces]}

    @classmethod
    def from_json(cls, data: dict) -> "Collection":
        if not isinstance(data, dict) or not isinstance(data.get("pieces"), list):
            raise ValueError("collection JSON needs a 'pieces' list")
        return cls(tuple(SODPiece.from_json(p) for p in data["pieces"]))


@dataclass(frozen=True)
class NCMotive:
    """A direct sum of copies of the unit noncommutative motive."""

    unit_rank: int

    def __post_init__(self):
        if not isinstance(self.unit_rank, int) or self.unit_rank < 0:
            raise ValueError("unit_rank must be a non-negative integer")

    def __add__(self, other: "NCMotive") -> "NCMotive":
        return NCMotive(self.unit_rank + other.unit_rank)

    @classmethod
    def of_piece(cls, piece: SODPiece) -> "NCMotive":
        if piece.nc_rank is None:
            raise ValueError("piece %r has unknown rank" % piece.label)
        return cls(piece.nc_rank)


def solve_nc_ranks(collection: Collection, total: TateMotive) -> Collection:
    """Fill in the single unknown rank so the pieces add up to rank(total).

    Exceptional pieces contribute 1 each; at most one opaque piece may have
    an unknown rank, and it receives the residue.  Raises
    InconsistentRanksError when the counts cannot match and
    UnderdeterminedError when more than one rank is unknown.
    """
    m = total.rank
    unknown = [i for i, p in enumerate(collection.pieces) if p.nc_rank is None]
    if len(unknown) > 1:
        raise UnderdeterminedError(
            "%d pieces have unknown rank (%s); refusing to guess"
            % (len(unknown), ", ".join(collection.pieces[i].label for i in unknown))
        )
    known = sum(p.nc_rank for p in collection.pieces if p.nc_rank is not None)
    if not unknown:
        if known != m:
            raise InconsistentRanksError(
                "piece ranks sum to %d but the total motive has rank %d" % (known, m)
            )
        return collection
    residue = m - known
    if residue < 0:
        raise InconsistentRanksError(
            "known ranks already sum to %d, more than the total rank %d" % (known, m)
        )
    i = unknown[0]
    solved = list(collection.pieces)
    solved[i] = SODPiece(solved[i].label, solved[i].kind, residue)
    return Collection(tuple(solved))


def additive_invariant_rank(piece: SODPiece, unit_value_rank: int) -> int:
    """Value of any additive invariant on a piece, in multiples of the base value.

    A rank-n piece contributes n copies of the invariant of the base point,
    so the answer is ``n * unit_value_rank``.
    """
    if not isinstance(unit_value_rank, int) or unit_value_rank < 1:
        raise ValueError("unit_value_rank must be a positive integer")
    if piece.nc_rank is None:
        raise ValueError("piece %r has unknown rank; solve it first" % piece.label)
    return piece.nc_rank * unit_value_rank


@dataclass(frozen=True)
class FecVerdict:
    """Outcome of the full-exceptional-collection obstruction check."""

    status: str
    min_length: Optional[int] = None
    bound: Optional[int] = None
    odd_degrees: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.status == FEC_OK


def fec_obstruction(betti: PoincarePoly, max_length: Optional[int] = None) -> FecVerdict:
    """Check Betti data against the two necessary conditions.

    Any nonzero odd Betti number is fatal.  Otherwise the largest even Betti
    number is the minimum possible length of a full exceptional collection;
    when ``max_length`` is given and smaller, that is reported as a failure.
    """
    if max_length is not None and (not isinstance(max_length, int) or max_length < 1):
        raise ValueError("max_length must be a positive integer or None")
    coeffs = betti.coefficients
    odd = tuple(n for n in coeffs if n % 2)
    if odd:
        return FecVerdict(FEC_FAILS_ODD, odd_degrees=odd)
    needed = max((c for n, c in coeffs.items()), default=0)
    if max_length is not None and needed > max_length:
        return FecVerdict(FEC_FAILS_LENGTH, min_length=needed, bound=max_length)
    return FecVerdict(FEC_OK, min_length=needed, bound=max_length)


def fano_fec_check(
    b: int, m1_trivial: bool, m5_trivial: bool, m1j_trivial: bool
) -> bool:
    """Whether a Fano threefold's known obstructions to a full collection vanish.

    The three flags assert triviality of the three odd-weight summands of the
    motive; all must hold.  The even part never obstructs: its Betti numbers
    are 1, b, b, 1, all bounded by the collection length 2 + 2b.
    """
    if not isinstance(b, int) or b < 0:
        raise ValueError("b must be a non-negative integer")
    return bool(m1_trivial and m5_trivial and m1j_trivial)
