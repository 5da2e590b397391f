"""Bilattice logic programs from Python.

Thin wrappers over the C++ core: parse and ground a program given as text,
evaluate consequences, compute the maximal sound part of a hypothesis, run
the hypothesis-founded fixpoint, and cross-check the classical semantics.
"""

from ._fitlat import (
    check,
    eval_program,
    is_sound,
    kripke_kleene,
    semantics,
    support,
    well_founded,
)

__all__ = [
    "check",
    "eval_program",
    "is_sound",
    "kripke_kleene",
    "semantics",
    "support",
    "well_founded",
]
