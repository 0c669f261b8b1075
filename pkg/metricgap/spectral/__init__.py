"""The classical gap ``lambda(G, R)`` of the normalized Laplacian."""

__all__ = [
    "jacobi_eigh",
    "lambda_R",
    "normalized_laplacian",
    "rayleigh_R",
    "SpectralResult",
]

from .laplacian import (
    jacobi_eigh,
    lambda_R,
    normalized_laplacian,
    rayleigh_R,
    SpectralResult,
)
