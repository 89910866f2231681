"""Finite hyperfields: quotients, axioms, geometries, rank witnesses and first-order logic."""

from ._core import (
    BoundError,
    Hyperfield,
    MalformedError,
    ParseError,
    PreconditionError,
    are_isomorphic,
    axiom_sentences,
    distinguishing_sentence,
    ef_equivalent,
    enumerate_hyperfields,
    evaluate,
    extension_quotient,
    family_certificate,
    from_group,
    geometry,
    is_cc,
    is_desarguesian,
    is_krasner_within,
    krasner_quotient,
    parse_formula,
    torsion_rank_report,
    transfer_check,
    verify_axioms,
    witness_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
