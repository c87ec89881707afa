"""Tubular elliptic Weyl groups, their hyperbolic covers and Hurwitz orbits."""

from ._ellweyl import (
    Kind,
    ReflTuple,
    RootVector,
    Triple,
    apply_braid,
    central_z,
    connect,
    coxeter_triple,
    finite_roots,
    gram_matrix,
    highest_root,
    interval_poset,
    orbit_census,
    reflection_triple,
    scherk_length,
    signature,
    simple_root,
    standard_tuple,
    verify,
)

__all__ = [
    "Kind",
    "ReflTuple",
    "RootVector",
    "Triple",
    "apply_braid",
    "central_z",
    "connect",
    "coxeter_triple",
    "finite_roots",
    "gram_matrix",
    "highest_root",
    "interval_poset",
    "orbit_census",
    "reflection_triple",
    "scherk_length",
    "signature",
    "simple_root",
    "standard_tuple",
    "verify",
]
