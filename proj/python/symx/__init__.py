"""Symbolic workbench for the name calculus of symmetric extensions.

Thin re-export of the compiled module; all arguments are s-expression
strings, see the CLI docs in the README for the grammar.
"""

from _symx import (
    SexprParseError,
    SymxError,
    apply,
    apply_condition,
    compile,
    forces,
    product_based,
    run_suite,
    suite_names,
    support,
)

__all__ = [
    "SexprParseError",
    "SymxError",
    "apply",
    "apply_condition",
    "compile",
    "forces",
    "product_based",
    "run_suite",
    "suite_names",
    "support",
]
