# ========================================
# Import Python Modules (Standard Library)
# ========================================
import itertools

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.utils.errorsreslib import DimensionMismatchError

# =================
# Module Parameters
# =================
# Convergence threshold on the off-diagonal Frobenius norm
# and maximum number of cyclic sweeps.
OFF_DIAGONAL_TOL = 1e-13
MAX_SWEEPS = 100

# =========
# Functions
# =========
def embed_hermitian(matrices):
    """
    Function that maps a stack of n x n Hermitian matrices
    into the stack of 2n x 2n real symmetric matrices
    [[Re, -Im], [Im, Re]]. Every eigenvalue of the original
    matrix appears twice in the embedded one.
    """
    real_part = np.real(matrices)
    imag_part = np.imag(matrices)
    upper = np.concatenate([real_part, -imag_part], axis=-1)
    lower = np.concatenate([imag_part, real_part], axis=-1)
    return np.concatenate([upper, lower], axis=-2)

def off_diagonal_norm(matrices):
    """
    Function returning the Frobenius norm of the off-diagonal
    part of every matrix in the stack.
    """
    diagonal = np.einsum('...ii->...i', matrices)
    return np.sqrt(np.maximum(np.sum(matrices ** 2, axis=(-2, -1)) - np.sum(diagonal ** 2, axis=-1), 0.0))

def jacobi_eigvalsh_real(matrices, tol=OFF_DIAGONAL_TOL, max_sweeps=MAX_SWEEPS):
    """
    Function that returns the eigenvalues (ascending order) of
    a stack of real symmetric matrices with shape (..., n, n).
    Cyclic Jacobi sweeps are applied to all the matrices of the
    stack at the same time. Each rotation zeroes the (p, q)
    element with the angle phi = atan2(2 A_pq, A_qq - A_pp) / 2.
    NOTE: The iteration stops when every matrix has an off-diagonal
    Frobenius norm below tol or after max_sweeps sweeps.
    """
    work = np.array(matrices, dtype=float, copy=True)
    if work.shape[-1] != work.shape[-2]:
        raise DimensionMismatchError('Inconsistency detected - Square matrices expected')
    size = work.shape[-1]
    batch_shape = work.shape[:-2]
    work = work.reshape((-1, size, size))
    for _ in range(max_sweeps):
        if np.all(off_diagonal_norm(work) < tol):
            break
        for p, q in itertools.combinations(range(size), 2):
            a_pq = work[:, p, q]
            phi = 0.5 * np.arctan2(2.0 * a_pq, work[:, q, q] - work[:, p, p])
            phi = np.where(np.abs(a_pq) > 0.0, phi, 0.0)
            cos_phi, sin_phi = np.cos(phi), np.sin(phi)
            rotation = np.broadcast_to(np.eye(size), work.shape).copy()
            rotation[:, p, p] = cos_phi
            rotation[:, q, q] = cos_phi
            rotation[:, p, q] = sin_phi
            rotation[:, q, p] = -sin_phi
            work = np.swapaxes(rotation, -1, -2) @ work @ rotation
            # Restore exact symmetry lost to rounding
            work = 0.5 * (work + np.swapaxes(work, -1, -2))
    eigenvalues = np.sort(np.einsum('...ii->...i', work), axis=-1)
    return eigenvalues.reshape(batch_shape + (size,))

def jacobi_eigvalsh(matrices, tol=OFF_DIAGONAL_TOL, max_sweeps=MAX_SWEEPS):
    """
    Function that returns the eigenvalues (ascending order) of
    a stack of Hermitian matrices with shape (..., n, n).
    Complex input is handled through the real symmetric embedding,
    whose doubled eigenvalues are folded back.
    """
    matrices = np.asarray(matrices)
    if not np.iscomplexobj(matrices) or np.all(np.imag(matrices) == 0.0):
        return jacobi_eigvalsh_real(np.real(matrices), tol, max_sweeps)
    doubled = jacobi_eigvalsh_real(embed_hermitian(matrices), tol, max_sweeps)
    return doubled[..., ::2]

def is_hermitian(matrix, tol):
    """
    Function that returns True if the matrix (or every matrix
    of a stack) is Hermitian within tol entrywise.
    """
    matrix = np.asarray(matrix)
    return bool(np.all(np.abs(matrix - np.conj(np.swapaxes(matrix, -1, -2))) <= tol))
