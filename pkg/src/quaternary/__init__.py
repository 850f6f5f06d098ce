"""Representation numbers of the 26 diagonal quaternary forms with
coefficients in {1, 2, 5, 10}, computed through modular forms of level 40
and checked against direct lattice point counts."""

from .formulas import cusp_coefficient, rep_count, rep_count_remark41
from .forms import ALL_FORMS, FORMS_BY_CHARACTER, UNIVERSAL_FORMS, QuadForm, parse_form
from .numtheory import DirichletChar, char_eval, kronecker, sigma, sigma_twisted
from .oracle import brute_count, brute_table
from .qseries import QSeries
from .spaces import build_basis, classify_form, solve_in_basis, sturm_bound, theta_product

__version__ = "0.1.0"

__all__ = [
    "ALL_FORMS",
    "FORMS_BY_CHARACTER",
    "UNIVERSAL_FORMS",
    "DirichletChar",
    "QSeries",
    "QuadForm",
    "brute_count",
    "brute_table",
    "build_basis",
    "char_eval",
    "classify_form",
    "cusp_coefficient",
    "kronecker",
    "parse_form",
    "rep_count",
    "rep_count_remark41",
    "sigma",
    "sigma_twisted",
    "solve_in_basis",
    "sturm_bound",
    "theta_product",
]
