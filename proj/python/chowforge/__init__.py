"""Exact verification of Chern-cycle and K-theory identities."""

import json

from ._chowforge import (
    BudgetExceeded,
    contains,
    det,
    dim,
    export_named,
    groebner,
    named_dim,
    named_ideal_examples,
    roundtrip,
    run_json,
    suite_names,
)

__all__ = [
    "BudgetExceeded",
    "contains",
    "det",
    "dim",
    "export_named",
    "groebner",
    "named_dim",
    "named_ideal_examples",
    "roundtrip",
    "run",
    "suite_names",
]


def run(suites, **options):
    """Run suites and return the report document as a dict (schema 1)."""
    if isinstance(suites, str):
        suites = [suites]
    return json.loads(run_json(list(suites), **options))
