"""Linear relations over GF(p), the Leray functor and Szymczak classification."""

import json as _json

from ._core import (
    FormatError,
    GuardExceeded,
    InvariantViolation,
    Relation,
    enumerate,
    gim,
    gker,
    invariant_factors,
    oracle_szym_equiv,
    similar,
    szym_equiv,
)
from . import _core

__all__ = [
    "FormatError",
    "GuardExceeded",
    "InvariantViolation",
    "Relation",
    "classify",
    "enumerate",
    "gim",
    "gker",
    "invariant_factors",
    "leray",
    "oracle_szym_equiv",
    "similar",
    "spider_report",
    "szym_equiv",
    "szym_label",
]


def leray(relation):
    """Leray form of an endorelation: {"p", "dim", "matrix", "label"}."""
    return _json.loads(_core.leray(relation))


def szym_label(relation):
    """Class label {"p", "dim", "invariant_factors"}; coefficients lowest degree first."""
    return _json.loads(_core.szym_label(relation))


def classify(p, dim, format="json", workers=1, include_zero_object=False):
    """Class table of all endorelations on GF(p)^dim. JSON is decoded; csv and dot are returned as text."""
    text = _core.classify(p, dim, format, workers, include_zero_object)
    return _json.loads(text) if format == "json" else text


def spider_report(orbits, max_power=None):
    return _json.loads(_core.spider_report(orbits, max_power))
