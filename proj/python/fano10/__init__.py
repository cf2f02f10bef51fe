"""Exact lattice arithmetic for degree-10 index-2 prime Fano fourfolds.

Thin Python layer over the C++ core: the extension returns the same JSON
documents as the command-line tool, and this package decodes them to plain
dicts and lists.
"""

import json as _json

from _fano10 import (
    DomainError,
    InternalError,
    InvalidParameter,
    NotAdmissible,
    ParseError,
    admissible_discriminant,
    has_associated_cubic,
    has_associated_k3,
    surface_discriminant,
    surface_self_intersection,
)
import _fano10 as _core

__all__ = [
    "DomainError",
    "InternalError",
    "InvalidParameter",
    "NotAdmissible",
    "ParseError",
    "admissible_discriminant",
    "assoc",
    "classify",
    "examples",
    "has_associated_cubic",
    "has_associated_k3",
    "hassett_check",
    "lattice_info",
    "surface_discriminant",
    "surface_self_intersection",
    "sweep",
    "th81",
]

_BUILTINS = {"U", "A1", "E8", "Lambda", "Lambda2", "I22_2", "I20_2"}


def lattice_info(gram):
    """Invariants and discriminant form of a lattice.

    `gram` is a builtin name (U, A1, E8, Lambda, Lambda2, I22_2, I20_2) or a
    square symmetric matrix given as a list of rows.
    """
    if isinstance(gram, str) and gram in _BUILTINS:
        return _json.loads(_core.builtin_lattice_info_json(gram))
    if not isinstance(gram, str):
        gram = _json.dumps(gram)
    return _json.loads(_core.lattice_info_json(gram))


def classify(d):
    """Orbit representatives of special sublattices of discriminant d."""
    return _json.loads(_core.classify_json(d))


def assoc(d):
    """K3 / cubic association verdicts for discriminant d."""
    return _json.loads(_core.assoc_json(d))


def sweep(d_max):
    """Classification and association rows for all admissible d <= d_max."""
    return _json.loads(_core.sweep_json(d_max))


def examples():
    """The six worked example families."""
    return _json.loads(_core.examples_json())


def th81(e_max):
    """Target Gram table for 0 <= e <= e_max."""
    return _json.loads(_core.th81_json(e_max))


def hassett_check(gram, h_index=0):
    """Forbidden-class check on a rank-2 lattice with h^2 = 10."""
    if not isinstance(gram, str):
        gram = _json.dumps(gram)
    return _json.loads(_core.hassett_check_json(gram, h_index))
