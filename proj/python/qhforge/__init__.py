"""Exact quantum homology rings over Novikov coefficients.

The heavy lifting happens in the C++ core (`qhforge._qhforge`); this package
adds JSON decoding so reports come back as plain dictionaries.
"""

import json as _json

from ._qhforge import (  # noqa: F401
    Element,
    QhforgeError,
    Ring,
    action_maslov_from_section,
    phi_sigma,
    psi,
    psi_inv,
)
from . import _qhforge as _core

__all__ = [
    "Element",
    "QhforgeError",
    "Ring",
    "action_maslov_from_section",
    "classify_units",
    "group_units",
    "phi_sigma",
    "propd_check",
    "psi",
    "psi_inv",
    "ring_info",
    "unit_orders",
    "verdict",
    "verify_paper",
]


def ring_info(ring_id, kappa="1"):
    return _json.loads(Ring(ring_id, kappa).info_json())


def classify_units(ring_id, bound=5):
    return _json.loads(_core.classify_units_json(ring_id, bound))


def unit_orders(ring_id, bound=5, cap=64):
    return _json.loads(_core.units_order_json(ring_id, bound, cap))


def group_units(ring_id, support=3, coeff=2, exp_bound=4):
    return _json.loads(_core.group_units_json(ring_id, support, coeff, exp_bound))


def propd_check(ring_id):
    return _json.loads(_core.propd_check_json(ring_id))


def verdict(ring_id, bound=5, cap=64):
    return _json.loads(_core.verdict_json(ring_id, bound, cap))


def verify_paper():
    return _json.loads(_core.verify_paper_json())
