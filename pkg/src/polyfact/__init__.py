"""Random factorisations P(n) = d1 * d2 of values of monic integer polynomials."""

from .arith import RandomSource, is_probable_prime, make_rng, sqrt_mod_prime
from .contfrac import ContinuedFraction, cf_convergents, cf_expand
from .cubicgen import CubicParams, generate_cubic
from .model import AttemptsExhausted, Factorisation, GenConfig, UnsuitablePolynomial
from .parse import parse_poly
from .polyring import MonicPolynomial, e_matrices, minors, multiply, norm
from .quadgen import assemble, generate_quadratic, solve_unimodular
from .ratio import target_ratio_cubic, target_ratio_divisible, target_ratio_quadratic
from .semigroup import (
    compute_D_c, compute_N_c, enumerate_all, phi, phi_inverse, random_factorisation,
    word_to_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AttemptsExhausted", "ContinuedFraction", "CubicParams", "Factorisation", "GenConfig",
    "MonicPolynomial", "RandomSource", "UnsuitablePolynomial", "assemble", "cf_convergents",
    "cf_expand", "compute_D_c", "compute_N_c", "e_matrices", "enumerate_all",
    "generate_cubic", "generate_quadratic", "is_probable_prime", "make_rng", "minors",
    "multiply", "norm", "parse_poly", "phi", "phi_inverse", "random_factorisation",
    "solve_unimodular", "sqrt_mod_prime", "target_ratio_cubic", "target_ratio_divisible",
    "target_ratio_quadratic", "word_to_matrix",
]
