"""Quantum Cayley-Klein orthogonal groups in a Cartesian basis.

The ``*_json`` functions return the raw JSON strings produced by the C++
library; the plain names decode them.
"""

import json

from . import _core

__all__ = ["describe", "verify", "contract", "classify",
           "describe_json", "verify_json", "contract_json", "classify_json"]


def _spec_text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def describe_json(spec, format="json"):
    return _core.describe(_spec_text(spec), format)


def verify_json(spec, seed=1, points=3):
    return _core.verify(_spec_text(spec), seed, points)


def contract_json(spec, seed=1, points=3, eliminate=True):
    return _core.contract(_spec_text(spec), seed, points, eliminate)


def classify_json(n, shadow=False, relaxed=False, subset=None, nilpotent=None, conjugacy=True):
    return _core.classify(n, shadow, relaxed, subset, nilpotent, conjugacy, "json")


def describe(spec):
    return json.loads(describe_json(spec))


def verify(spec, seed=1, points=3):
    return json.loads(verify_json(spec, seed, points))


def contract(spec, seed=1, points=3, eliminate=True):
    return json.loads(contract_json(spec, seed, points, eliminate))


def classify(n, **kwargs):
    return json.loads(classify_json(n, **kwargs))
