"""Decide range conditions on finite commutative rings."""

import json

from ._core import (
    CapExceeded,
    DecompositionError,
    PreconditionError,
    Ring,
    properties,
)
from ._core import _corpus

__all__ = [
    "CapExceeded",
    "DecompositionError",
    "PreconditionError",
    "Ring",
    "analyze",
    "corpus",
    "properties",
    "q_check",
]


def analyze(spec):
    """Property vector of one ring as a dict."""
    return json.loads(Ring(spec)._analyze_json())


def q_check(spec):
    """Checks on the classical ring of quotients of one ring as a dict."""
    return json.loads(Ring(spec)._q_check_json())


def corpus(max_order=None, max_modular_n=100, product_order_cap=100, sr2_cap=64, threads=0,
           format="json"):
    """Runs the implication audit; returns a dict for json, text for csv."""
    text = _corpus(max_order, max_modular_n, product_order_cap, sr2_cap, threads, format)
    return json.loads(text) if format == "json" else text
