"""Exact arithmetic over GF(p) and GF(p^2): binary forms, gcd, resultants,
root finding and elimination of fiber variables."""

from .elimination import (
    DegeneracyLocus,
    binary_roots,
    common_zeros_bihom,
    degeneracy_locus,
    lazard_degree,
    locus_points,
    solve_fiber,
)
from .fields import PrimeField, QElem, QuadraticField, is_prime
from .forms import (
    BihomForm,
    BinaryForm,
    DegreeMismatch,
    bihom_add,
    bihom_mul,
    bihom_neg,
    determinant,
    form_add,
    form_divides,
    form_eval,
    form_gcd,
    form_mul,
    form_quotient,
    kernel,
    lift_field,
    monomials,
    rank,
    resultant,
)
from .roots import roots, roots_in_extension

__all__ = [
    "BihomForm", "BinaryForm", "DegeneracyLocus", "DegreeMismatch", "PrimeField",
    "QElem", "QuadraticField", "bihom_add", "bihom_mul", "bihom_neg", "binary_roots", "common_zeros_bihom", "degeneracy_locus",
    "determinant", "form_add", "form_divides", "form_eval", "form_gcd", "form_mul",
    "form_quotient", "is_prime", "kernel", "lazard_degree", "lift_field", "locus_points",
    "monomials", "rank", "resultant", "roots", "roots_in_extension", "solve_fiber",
]
