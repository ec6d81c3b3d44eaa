"""Self-dual normal bases over finite fields and p-adic local fields.

Constructors return certificates as plain dicts (the same JSON the CLI emits).
"""

import json as _json

from . import _sdnb
from ._sdnb import (
    DomainError,
    Error,
    ExistenceError,
    MalformedError,
    ParameterError,
    PrecisionError,
    SCHEMA_VERSION,
    brute_force,
    check_existence_ff,
)

__all__ = [
    "DomainError", "Error", "ExistenceError", "MalformedError", "ParameterError",
    "PrecisionError", "SCHEMA_VERSION", "brute_force", "check_existence_ff",
    "construct_ff", "local_tame", "local_unram", "local_wild", "local_compose",
    "verify",
]


def construct_ff(p, n, m=1):
    return _json.loads(_sdnb.construct_ff(p, n, m=m))


def local_tame(p, d, f=1, precision=48, guard=8):
    return _json.loads(_sdnb.local_tame(p, d, f=f, precision=precision, guard=guard))


def local_unram(p, d, f=1, precision=48, guard=8):
    return _json.loads(_sdnb.local_unram(p, d, f=f, precision=precision, guard=guard))


def local_wild(p, precision=48, guard=8):
    return _json.loads(_sdnb.local_wild(p, precision=precision, guard=guard))


def local_compose(p, unram_d, tame_d, trace_diag=False, f=1, precision=48, guard=8):
    return _json.loads(_sdnb.local_compose(
        p, unram_d, tame_d, trace_diag=trace_diag, f=f, precision=precision, guard=guard))


def verify(document):
    """Accepts a dict or a JSON string; returns (passed, messages)."""
    if not isinstance(document, str):
        document = _json.dumps(document)
    ok, messages = _sdnb.verify(document)
    return ok, list(messages)
