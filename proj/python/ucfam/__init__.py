"""Union-closed set family toolkit."""

from ._core import (
    FamilyError,
    SetFamily,
    canonical_fingerprint,
    cover_edges,
    enumerate_pure,
    enumerate_union_closed,
    family_union,
    frankl_abundant_elements,
    hyperisomorphic,
    is_pure,
    is_redundant,
    is_union_closed,
    lattice_dot,
    lift,
    member_star,
    minimal_members,
    parse_family,
    purify,
    read_family_file,
    redundant_elements,
    reduce,
    union_closure,
    write_family,
)

__all__ = [
    "FamilyError",
    "SetFamily",
    "canonical_fingerprint",
    "cover_edges",
    "enumerate_pure",
    "enumerate_union_closed",
    "family_union",
    "frankl_abundant_elements",
    "hyperisomorphic",
    "is_pure",
    "is_redundant",
    "is_union_closed",
    "lattice_dot",
    "lift",
    "member_star",
    "minimal_members",
    "parse_family",
    "purify",
    "read_family_file",
    "redundant_elements",
    "reduce",
    "union_closure",
    "write_family",
]
