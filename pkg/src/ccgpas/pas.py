"""Predicate-argument structures from derivations.

A PAS is the combinator-free normal form of a derivation's combinatory
form: the predicate applied to its arguments, least prominent first, so the
primary term is the outermost argument (``r b m``).
"""

from __future__ import annotations

from .comb import DEFAULT_STEP_LIMIT, Term, combinator_free, evaluate, format_term
from .parser import Derivation, derivation_semantics

__all__ = [
    "PasError",
    "ResidualCombinators",
    "NonTerminating",
    "term_pas",
    "derive_pas",
    "pas_equal",
    "format_pas",
]


class PasError(ValueError):
    def __init__(self, message: str, term: Term) -> None:
        super().__init__(message)
        self.term = term


class ResidualCombinators(PasError):
    """Evaluation finished but combinators remain (e.g. ``b I``)."""


class NonTerminating(PasError):
    """The step limit ran out before a normal form was reached."""


def term_pas(t: Term, step_limit: int = DEFAULT_STEP_LIMIT) -> Term:
    result, stats = evaluate(t, step_limit)
    if not stats.normal_form:
        raise NonTerminating(
            f"no normal form within {step_limit} steps: {format_term(result)}", result)
    if not stats.combinator_free:
        raise ResidualCombinators(
            f"normal form still contains combinators: {format_term(result)}", result)
    return result


def derive_pas(d: Derivation, step_limit: int = DEFAULT_STEP_LIMIT) -> Term:
    """Evaluate a derivation's combinatory form down to its PAS."""
    return term_pas(derivation_semantics(d), step_limit)


def pas_equal(a: Term, b: Term) -> bool:
    return a == b


def format_pas(p: Term) -> str:
    if not combinator_free(p):
        raise ResidualCombinators(f"not a PAS: {format_term(p)}", p)
    return format_term(p)
