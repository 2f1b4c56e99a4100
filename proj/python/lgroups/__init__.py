"""Exact computation with archimedean lattice-ordered groups with strong unit.

Groups are presented inside C(K) for three computable compact spaces: the
one-point compactification of the positive integers, the extended half-line,
and finite discrete spaces. The package decides ideal-theoretic predicates
exactly and checks the classes Y, CR, M, HA, and Proj with exact or
budget-qualified verdicts.

Structured results come back as plain dictionaries parsed from the core's
JSON; schema errors and malformed terms raise ``ValueError``.
"""

import json as _json

from ._core import (
    Presentation,
    builtin,
    builtin_names,
    load,
    normalize_term,
    verify_paper_json,
    verify_paper_text,
)

__version__ = "1.0.0"

__all__ = [
    "Presentation",
    "analyze",
    "builtin",
    "builtin_names",
    "check",
    "load",
    "normalize_term",
    "predicate",
    "presentation",
    "verify_paper",
    "verify_paper_text",
]


def presentation(source):
    """Resolve a built-in name, JSON text, or Presentation to a Presentation."""
    if isinstance(source, Presentation):
        return source
    if not isinstance(source, str):
        raise TypeError("expected a Presentation, built-in name, or JSON text")
    if source.lstrip().startswith("{"):
        return load(source)
    return builtin(source)


def verify_paper(budget=2000, seed=0):
    """Run the reference verification; returns the full report as a dict."""
    return _json.loads(verify_paper_json(budget, seed))


def check(source, cls, budget=2000):
    """Class membership verdict (one of "Y", "CR", "M", "HA", "Proj") as a dict."""
    return _json.loads(presentation(source).check_class_json(cls, budget))


def analyze(source, budget=2000, with_cross=True):
    """All five class verdicts, plus the cross-identity items, as a dict."""
    return _json.loads(presentation(source).analyze_json(budget, with_cross))


def predicate(source, name, *terms):
    """Evaluate one predicate on term strings.

    Boolean predicates return ``bool``; ``in-principal`` returns the integer
    bound or ``None``; ``coz`` and ``zset`` return a set description string.
    """
    return presentation(source).predicate(name, list(terms))
