"""Exact graded-piece computations for nodal projective hypersurfaces."""

import json

from ._nodalhodge import (
    Hypersurface,
    InputError,
    NodeVerificationError,
    c_coeff,
    c_coeff_row,
    catalog_names,
    node_bounds,
    run_criteria,
    target_degree,
)
from . import _nodalhodge

__all__ = [
    "Hypersurface",
    "InputError",
    "NodeVerificationError",
    "analyze",
    "c_coeff",
    "c_coeff_row",
    "catalog",
    "catalog_names",
    "load",
    "node_bounds",
    "record",
    "run_criteria",
    "target_degree",
]


def catalog(name):
    return Hypersurface.from_catalog(name)


def load(source):
    """A file path holding an input document, or "catalog:<name>"."""
    if source.startswith("catalog:"):
        return catalog(source[len("catalog:"):])
    with open(source, encoding="utf-8") as fh:
        return Hypersurface.from_json(fh.read())


def analyze(source, qs=None):
    """Full report as a dict. `source` is a Hypersurface, a path or "catalog:<name>"."""
    if isinstance(source, Hypersurface):
        h, label = source, ""
    else:
        h, label = load(source), source
    if qs is None:
        qs = range(h.n + 1)
    return json.loads(_nodalhodge.analyze_json(h, label, list(qs)))


def record(h, q):
    return json.loads(h.record_json(q))
