import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import linalg

from contextual.parameters.parameters import CAPS, TOLERANCES
from contextual.pauli.observable import PauliError

DenseMatrix = NDArray[np.complex128]


class NotHermitianError(PauliError):
    """A Hermitian matrix was required"""


class MatrixSizeError(PauliError):
    """Matrix is not square or exceeds the supported dimension"""


def _check_square(m: NDArray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise MatrixSizeError(f"Square matrix expected, got shape {m.shape}")
    if m.shape[0] > CAPS["max_matrix_dim"]:
        raise MatrixSizeError(
            f"Matrix dimension {m.shape[0]} exceeds the cap of {CAPS['max_matrix_dim']}"
        )


def is_hermitian(m: NDArray, tolerance: float = TOLERANCES["hermitian"]) -> bool:
    return bool(np.allclose(m, m.conj().T, rtol=0.0, atol=tolerance))


def commutator(a: NDArray, b: NDArray) -> DenseMatrix:
    return a @ b - b @ a


def hermitian_eigenvalues(m: NDArray) -> list[float]:
    """All eigenvalues of a Hermitian matrix, with multiplicity, in ascending order.

    Args:
        m: Hermitian matrix of dimension at most 256.

    Raises:
        MatrixSizeError: If the matrix is not square or too large.
        NotHermitianError: If the matrix is not Hermitian within 1e-12.
    """
    _check_square(m)
    if not is_hermitian(m):
        logger.error("Eigenvalues requested for a non-Hermitian matrix")
        raise NotHermitianError("Matrix is not Hermitian")
    return [float(value) for value in np.sort(linalg.eigvalsh(m))]


def operator_norm(m: NDArray) -> float:
    """Largest singular value, i.e. sup |m psi| / |psi|."""
    _check_square(m)
    if m.size == 0:
        return 0.0
    return float(linalg.svdvals(m)[0])
