"""Quotient complexity of operations on regular languages over different alphabets."""

from ._sclab import (
    BudgetError,
    Dfa,
    atom_formula,
    atoms,
    boolean_op,
    concat,
    effective_alphabet,
    equivalent,
    formula,
    minimize,
    quotient_complexity,
    reverse,
    star,
    syntactic_semigroup_size,
    universal_witness,
    verify,
    witness,
)

__all__ = [
    "BudgetError",
    "Dfa",
    "atom_formula",
    "atoms",
    "boolean_op",
    "concat",
    "effective_alphabet",
    "equivalent",
    "formula",
    "minimize",
    "quotient_complexity",
    "reverse",
    "star",
    "syntactic_semigroup_size",
    "universal_witness",
    "verify",
    "witness",
]
