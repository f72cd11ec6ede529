"""Exact symbolic computation with Tate motives.

The package computes motivic decompositions of a catalog of varieties as
direct sums of powers of the Lefschetz motive, runs the graded morphism
calculus of the orbit category of the Tate twist (including the lift that
recovers a motive from its image there), does the additive-invariant rank
bookkeeping for semiorthogonal decompositions, checks the standard
obstructions to full exceptional collections, and evaluates the two motivic
measures that factor through the Lefschetz class.  Everything is exact
integer or rational arithmetic.
"""

from .tate import (
    NonEffectiveError,
    PoincarePoly,
    TateMotive,
    UNIT,
    ZERO,
    direct_sum,
    hom_dim,
    lefschetz,
    poincare,
    tensor,
    twist,
)
from .orbit import (
    CompositionError,
    LiftError,
    NotAnIsomorphismError,
    OrbitMorphism,
    RankMismatchError,
    SupportViolationError,
    block_unit_iso,
    canonical_unit_iso,
    chow_morphism,
    compose,
    decompose_via_orbit,
    identity_morphism,
    orbit_hom_support,
    project,
    project_morphism,
    term_enumeration,
)
from .sod import (
    Collection,
    FecVerdict,
    InconsistentRanksError,
    NCMotive,
    SODPiece,
    UnderdeterminedError,
    additive_invariant_rank,
    exceptional,
    fano_fec_check,
    fec_obstruction,
    opaque,
    solve_nc_ranks,
)
from .varieties import (
    Blowup,
    CollectionUnavailableError,
    DisjointUnion,
    Fano3fold,
    GeneralizedMotive,
    Grassmannian,
    InvalidParameterError,
    ModuliM0,
    OpaqueMotiveError,
    OpaquePart,
    Point,
    Product,
    ProjBundle,
    Projective,
    Quadric,
    Toric,
    VarietyExpr,
    dimension_of,
    exceptional_collection_of,
    expr_from_json,
    expr_to_json,
    fec_verdict,
    motive_of,
)
from .measures import (
    HodgeDelignePoly,
    K0Class,
    LV,
    VirtualClassError,
    chi_gs,
    chi_hd,
    hodge_numbers,
    hodge_tate,
    k0_class,
)
from .exprlang import ParseError, SemanticError, parse_expr, render_expr

__version__ = "0.1.0"

__all__ = [
    "Blowup",
    "Collection",
    "CollectionUnavailableError",
    "CompositionError",
    "DisjointUnion",
    "Fano3fold",
    "FecVerdict",
    "GeneralizedMotive",
    "Grassmannian",
    "HodgeDelignePoly",
    "InconsistentRanksError",
    "InvalidParameterError",
    "K0Class",
    "LV",
    "LiftError",
    "ModuliM0",
    "NCMotive",
    "NonEffectiveError",
    "NotAnIsomorphismError",
    "OpaqueMotiveError",
    "OpaquePart",
    "OrbitMorphism",
    "ParseError",
    "Point",
    "PoincarePoly",
    "Product",
    "ProjBundle",
    "Projective",
    "Quadric",
    "RankMismatchError",
    "SemanticError",
    "SODPiece",
    "SupportViolationError",
    "TateMotive",
    "Toric",
    "UNIT",
    "UnderdeterminedError",
    "VarietyExpr",
    "VirtualClassError",
    "ZERO",
    "additive_invariant_rank",
    "block_unit_iso",
    "canonical_unit_iso",
    "chi_gs",
    "chi_hd",
    "chow_morphism",
    "compose",
    "decompose_via_orbit",
    "dimension_of",
    "direct_sum",
    "exceptional",
    "exceptional_collection_of",
    "expr_from_json",
    "expr_to_json",
    "fano_fec_check",
    "fec_obstruction",
    "fec_verdict",
    "hodge_numbers",
    "hodge_tate",
    "hom_dim",
    "identity_morphism",
    "k0_class",
    "lefschetz",
    "motive_of",
    "opaque",
    "orbit_hom_support",
    "parse_expr",
    "poincare",
    "project",
    "project_morphism",
    "render_expr",
    "solve_nc_ranks",
    "tensor",
    "term_enumeration",
    "twist",
]
