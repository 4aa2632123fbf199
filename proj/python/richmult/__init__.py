"""Exact multiplicities of points on Schubert, opposite Schubert and
Richardson varieties in Grassmannians and the odd quadric."""

import json

from ._richmult import RichmultError, multiplicity_at_origin
from . import _richmult

__all__ = ["RichmultError", "equations", "mult", "sweep", "quadric", "multiplicity_at_origin"]


def _point(point):
    if point is None:
        return ""
    if isinstance(point, str):
        return point
    return json.dumps({k: str(v) for k, v in point.items()})


def equations(d, n, w, v, tau, point=None):
    """Chart equations; generators are in y coordinates centred at point when given."""
    return _richmult.equations(d, n, w, v, tau, _point(point))


def mult(d, n, w, v, tau, point=None, samuel=False):
    """Report for one point of the cell of tau (the fixed point by default)."""
    return json.loads(_richmult.mult(d, n, w, v, tau, _point(point), samuel))


def sweep(d, n, grid=None, per_instance=200, max_instances=100000, workers=0, samuel=False):
    """Returns (reports, truncated) over every triple of G(d, n)."""
    grid_text = ",".join(str(g) for g in grid) if grid else ""
    text, truncated = _richmult.sweep(d, n, grid_text, per_instance, max_instances, workers, samuel)
    return json.loads(text), truncated


def quadric(n, i, j, point):
    """Report for a point of X_i^j in the quadric of dimension 2n - 1."""
    return json.loads(_richmult.quadric(n, i, j, json.dumps([str(c) for c in point])))
