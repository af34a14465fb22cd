"""Exact symbolic generators of supersymmetric classical W-algebras.

Thin wrapper over the compiled core. The heavy lifting happens in C++;
results cross the boundary as JSON so every rational stays exact.
"""

import json as _json

from susyw._core import (
    FAMILIES,
    __version__,
    check_axioms_json,
    generators_json,
    identities_json,
    weights_json,
    verify_json,
)


def _load(text):
    return _json.loads(text)


def generators(family, n, k="1", floor=None, minimal_only=True):
    """Construct the generators; returns the parsed JSON document."""
    return _load(generators_json(family, n, str(k), floor, minimal_only))


def verify(family, n, k="1", floor=None):
    return _load(verify_json(family, n, str(k), floor))


def check_axioms(family, n, k="1"):
    return _load(check_axioms_json(family, n, str(k)))


def identities(family, n, k="1", floor=None):
    return _load(identities_json(family, n, str(k), floor))


def weights(family, n, k="1", floor=None):
    return _load(weights_json(family, n, str(k), floor))


__all__ = [
    "FAMILIES",
    "__version__",
    "generators",
    "verify",
    "check_axioms",
    "identities",
    "weights",
]
