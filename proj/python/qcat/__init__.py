"""Finite quantale-enriched categories: checkers, completions and a CLI front end."""

from ._qcat import (
    Document,
    Quantale,
    QcatError,
    builtin,
    load_document,
    parse_document,
    run_cli,
    run_suite,
    suite_names,
)

__all__ = [
    "Document",
    "Quantale",
    "QcatError",
    "builtin",
    "load_document",
    "parse_document",
    "run_cli",
    "run_suite",
    "suite_names",
]
