"""Exact values of the nonlinear spectral gap into graph metrics."""

__all__ = [
    "GapResult",
    "lambda_exact",
    "lambda_upper_witness",
    "partial_upper_bound",
    "rayleigh_quotient",
    "rayleigh_terms",
]

from .rayleigh import GapResult, lambda_upper_witness, rayleigh_quotient, rayleigh_terms
from .search import lambda_exact, partial_upper_bound
