"""Minimal k such that the inverse of a complex polynomial is representable
in k-radicals, certified through the monodromy groups of its indecomposable
composition factors."""

import json as _json

try:
    from ._kradical import (
        DomainError,
        ParseError,
        PrecisionError,
        UnrecognizedGroupError,
        analyze_json,
        factor_degrees,
        fixture_ids,
        group_info,
        minimal_k,
        replay_elimination,
        verify_deg15,
        verify_fixture,
    )
except ImportError:  # dev tree: extension sits on sys.path, not in the package
    from _kradical import (
        DomainError,
        ParseError,
        PrecisionError,
        UnrecognizedGroupError,
        analyze_json,
        factor_degrees,
        fixture_ids,
        group_info,
        minimal_k,
        replay_elimination,
        verify_deg15,
        verify_fixture,
    )

__version__ = "0.1.0"


def analyze(expr, k=0, precision=256, seed=0):
    """Full pipeline report as a dict (the parsed JSON report)."""
    return _json.loads(analyze_json(expr, k=k, precision=precision, seed=seed))


__all__ = [
    "DomainError",
    "ParseError",
    "PrecisionError",
    "UnrecognizedGroupError",
    "analyze",
    "analyze_json",
    "factor_degrees",
    "fixture_ids",
    "group_info",
    "minimal_k",
    "replay_elimination",
    "verify_deg15",
    "verify_fixture",
]
