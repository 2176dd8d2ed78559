"""Conjugacy, classification and reductions for tree automorphisms."""

from ._core import (
    DEFAULT_SEED,
    ArborError,
    Automorphism,
    BoundExceeded,
    ParseError,
    Tree,
    classify,
    conj_decide,
    conj_oracle,
    conj_witness,
    decide_type_a,
    enumerate_aut,
    height_invariant,
    invert_to_rooted,
    iso_witness,
    orbit_tree,
    parse_automorphism,
    parse_tree,
    phi_rooted,
    phi_unrooted,
    run_selftest,
    suite_names,
    tz_build,
    tz_decode,
    tz_phi,
    widget_decode,
    widget_encode,
)

__all__ = [name for name in dir() if not name.startswith("_")]
