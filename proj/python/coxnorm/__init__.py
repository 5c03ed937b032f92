"""Normalizers of parabolic subgroups in finite Coxeter groups."""

import json

from ._coxnorm import (
    FixtureError,
    concepts,
    graph,
    group_order,
    involutions,
    shapes,
    verify,
)
from ._coxnorm import decompose_json as _decompose_json
from ._coxnorm import table as _table

__all__ = [
    "FixtureError",
    "concepts",
    "decompose",
    "graph",
    "group_order",
    "involutions",
    "shapes",
    "table",
    "verify",
]


def decompose(group, parabolic):
    """Decomposition record of one parabolic, selected by index, label, partition or "s1,s3"."""
    return json.loads(_decompose_json(group, str(parabolic)))


def table(group, format="rows", jobs=1):
    """Whole decomposition table: a list of row dicts, or rendered text/csv/json."""
    if format == "rows":
        return json.loads(_table(group, "json", jobs))["rows"]
    return _table(group, format, jobs)
