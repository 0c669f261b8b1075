"""The normalized Laplacian and the classical spectral gap."""

__all__ = [
    "jacobi_eigh",
    "lambda_R",
    "normalized_laplacian",
    "rayleigh_R",
    "SpectralResult",
]

from collections import namedtuple
import logging
import math

import numpy as np

from ..errors import DomainError, NumericalError, PreconditionError, ZeroDenominator
from ..graph_core import Graph


logger = logging.getLogger(__name__)

#: Jacobi stops once the off-diagonal Frobenius norm falls below this.
OFF_DIAGONAL_TARGET = 1e-12

#: Full sweeps allowed before giving up.
MAX_SWEEPS = 100


SpectralResult = namedtuple("SpectralResult", ("eigenvalues", "lambda1", "residual"))
SpectralResult.__doc__ = """\
Eigenvalues in ascending order, the gap (0 for a disconnected graph), and
the largest eigenpair residual in the max-norm.
"""


def normalized_laplacian(g: Graph) -> np.ndarray:
    """``I - D^-1/2 A D^-1/2``; rows and columns of isolated vertices are zero.

    The returned array is read-only.
    """
    degrees = np.array(g.degrees, dtype=float)
    scale = np.zeros(g.n)
    np.divide(1.0, np.sqrt(degrees), out=scale, where=degrees > 0)
    adjacency = np.zeros((g.n, g.n))
    for u, v in g.edges:
        adjacency[u, v] = adjacency[v, u] = 1.0
    laplacian = np.diag((degrees > 0).astype(float))
    laplacian -= scale[:, None] * adjacency * scale[None, :]
    laplacian.flags.writeable = False
    return laplacian


def _off_diagonal_norm(a):
    return math.sqrt(2.0 * float((np.triu(a, 1) ** 2).sum()))


def _rotate(a, vectors, p, q):
    """Zero ``a[p, q]`` with one Jacobi rotation, updating `vectors` too."""
    apq = a[p, q]
    difference = a[q, q] - a[p, p]
    if abs(apq) < abs(difference) * 1.0e-36:
        t = apq / difference
    else:
        phi = difference / (2.0 * apq)
        t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
        if phi < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    column_p, column_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * column_p - s * column_q
    a[:, q] = s * column_p + c * column_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    column_p, column_q = vectors[:, p].copy(), vectors[:, q].copy()
    vectors[:, p] = c * column_p - s * column_q
    vectors[:, q] = s * column_p + c * column_q


def jacobi_eigh(matrix, target=OFF_DIAGONAL_TARGET, max_sweeps=MAX_SWEEPS):
    """Eigenvalues and eigenvectors of a symmetric matrix by cyclic Jacobi.

    :return: ``(eigenvalues, vectors, residual)`` with eigenvalues ascending
        and the matching eigenvectors as columns.
    :raise NumericalError: if `max_sweeps` sweeps do not reach `target`.
    """
    original = np.array(matrix, dtype=float)
    a = original.copy()
    n = a.shape[0]
    vectors = np.eye(n)
    sweeps = 0
    while _off_diagonal_norm(a) >= target:
        if sweeps == max_sweeps:
            residual = _residual(original, np.diag(a), vectors)
            raise NumericalError(
                "Jacobi did not converge in %d sweeps (off-diagonal %.3g)."
                % (max_sweeps, _off_diagonal_norm(a)),
                residual,
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, vectors, p, q)
        sweeps += 1
    logger.debug("Jacobi converged after %d sweep(s) for n=%d.", sweeps, n)
    order = np.argsort(np.diag(a), kind="stable")
    eigenvalues = np.diag(a)[order]
    vectors = vectors[:, order]
    return eigenvalues, vectors, _residual(original, eigenvalues, vectors)


def _residual(matrix, eigenvalues, vectors):
    if matrix.shape[0] == 0:
        return 0.0
    return float(np.abs(matrix @ vectors - vectors * eigenvalues).max())


def lambda_R(g: Graph) -> SpectralResult:
    """The full normalized-Laplacian spectrum of `g` and its classical gap."""
    if g.n < 2:
        raise PreconditionError("The spectral gap needs at least two vertices.", g)
    eigenvalues, _, residual = jacobi_eigh(normalized_laplacian(g))
    eigenvalues = tuple(float(value) for value in eigenvalues)
    lambda1 = eigenvalues[1] if g.is_connected() else 0.0
    return SpectralResult(eigenvalues, lambda1, residual)


def rayleigh_R(g: Graph, values) -> float:
    """The real-valued quotient of `values`, with unordered pairs throughout."""
    values = np.asarray(values, dtype=float)
    if values.shape != (g.n,):
        raise DomainError("Expected %d values, got shape %r." % (g.n, values.shape))
    degrees = np.array(g.degrees, dtype=float)
    numerator = sum((values[u] - values[v]) ** 2 for u, v in g.edges)
    gaps = (values[:, None] - values[None, :]) ** 2
    weights = degrees[:, None] * degrees[None, :]
    # The full matrix counts every unordered pair twice.
    denominator = float((gaps * weights).sum()) / 2
    if denominator <= 0.0:
        raise ZeroDenominator(
            "The values are constant on the vertices of positive degree.", values
        )
    return g.volume * numerator / denominator
