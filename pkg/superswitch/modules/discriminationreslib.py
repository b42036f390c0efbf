# ========================================
# Import Python Modules (Standard Library)
# ========================================
from dataclasses import dataclass
import functools
import math

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.paulicorereslib import (EnsembleCls, apply_channel,
                                                 apply_channel_to_matrix, check_interval,
                                                 check_same_dim, pauli_basis, state_from_ket)
from superswitch.utils.errorsreslib import (ChannelDomainError, DimensionMismatchError,
                                            UnsupportedStrategyError)
from superswitch.utils.jacobireslib import is_hermitian, jacobi_eigvalsh

# =================
# Module Parameters
# =================
STRATEGY_HELSTROM = 'helstrom'
STRATEGY_CLOSED_FORM = 'closed_form_depolarization'
STRATEGY_PER_BRANCH = 'per_branch_optimal'
STRATEGY_FIXED_POVM = 'fixed_povm'
POVM_TOL = 1e-10
OPTIMALITY_TOL = 1e-9
HERMITIAN_INPUT_TOL = 1e-10
WEIGHT_SUM_TOL = 1e-10

# =======
# Classes
# =======
@dataclass(frozen=True)
class GuessingResultDataCls:
    """
    Data class that stores a guessing probability together
    with the strategy that produced it.
    """
    value: float
    strategy: str

class PovmCls:
    """
    Class that stores a POVM as a tuple of read-only matrices.
    Null operators are allowed as elements.
    """
    # === Constructor ===
    def __init__(self, elements):
        elements = np.array([np.array(elem, dtype=complex) for elem in elements])
        if elements.ndim != 3 or elements.shape[1] != elements.shape[2]:
            raise DimensionMismatchError('Inconsistency detected - POVM elements must be square matrices of equal size')
        if not is_hermitian(elements, POVM_TOL):
            raise ChannelDomainError('Inconsistency detected - POVM element is not Hermitian')
        if np.any(jacobi_eigvalsh(elements)[..., 0] < -POVM_TOL):
            raise ChannelDomainError('Inconsistency detected - POVM element is not positive semidefinite')
        if np.max(np.abs(elements.sum(axis=0) - np.eye(elements.shape[1]))) > POVM_TOL:
            raise ChannelDomainError('Inconsistency detected - POVM elements do not sum to the identity')
        elements.setflags(write=False)
        self._elements = elements

    # === Read-only Attribute ===
    @property
    def dim(self):
        return self._elements.shape[1]

    # === Read-only Attribute ===
    @property
    def elements(self):
        return self._elements

    # === Read-only Attribute ===
    @property
    def size(self):
        return self._elements.shape[0]

    def __repr__(self):
        return f'PovmCls(dim={self.dim}, size={self.size})'

# ===================
# Ensemble Factories
# ===================
def make_orthogonal_pair(dim=2):
    """
    Function returning the equal-prior ensemble of the two
    orthogonal states |0...0> and |1...1>.
    """
    first = np.zeros(dim)
    first[0] = 1.0
    second = np.zeros(dim)
    second[-1] = 1.0
    return EnsembleCls([0.5, 0.5], [state_from_ket(first), state_from_ket(second)],
                       name='orthogonal')

def make_pure_pair(overlap):
    """
    Function returning the equal-prior qubit ensemble
    a|0> + b|1>, a|0> - b|1> with real overlap
    c = a**2 - b**2 in [-1, 1].
    """
    check_interval('overlap', overlap, -1.0, 1.0)
    a = math.sqrt((1.0 + overlap) / 2.0)
    b = math.sqrt(max(1.0 - a * a, 0.0))
    return EnsembleCls([0.5, 0.5], [state_from_ket([a, b]), state_from_ket([a, -b])],
                       name=f'pure-pair-{overlap:g}')

def make_bb84_ensemble():
    """
    Function returning the equal-prior ensemble of the four
    BB84 states |0>, |1>, |+>, |->.
    """
    kets = ([1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, -1.0])
    return EnsembleCls([0.25] * 4, [state_from_ket(ket) for ket in kets], name='bb84')

def make_bb84_alpha_povm(alpha):
    """
    Function returning the POVM {a|0><0|, a|1><1|, (1-a)|+><+|,
    (1-a)|-><-|}, optimal for the BB84 ensemble for every a in
    [0, 1].
    """
    check_interval('alpha', alpha, 0.0, 1.0)
    projectors = [state.entries for state in make_bb84_ensemble().states]
    return PovmCls([alpha * projectors[0], alpha * projectors[1],
                    (1.0 - alpha) * projectors[2], (1.0 - alpha) * projectors[3]])

# ===========
# Trace Norms
# ===========
def trace_norm_batch(matrices):
    """
    Function returning the trace norm of every Hermitian matrix
    of a stack with shape (..., dim, dim). No input check.
    """
    return np.sum(np.abs(jacobi_eigvalsh(matrices)), axis=-1)

def trace_norm_hermitian(matrix):
    """
    Function returning the trace norm (sum of absolute
    eigenvalues) of a Hermitian matrix.
    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f'Inconsistency detected - Square matrix expected, got shape {matrix.shape}')
    if not is_hermitian(matrix, HERMITIAN_INPUT_TOL):
        raise ChannelDomainError('Inconsistency detected - Trace norm requested for a non-Hermitian matrix')
    return float(trace_norm_batch(matrix))

# ================
# Helstrom Bounds
# ================
def check_two_states(e):
    """
    Function that raises an UnsupportedStrategyError unless the
    ensemble has exactly two states.
    """
    if e.size != 2:
        raise UnsupportedStrategyError(f'Inconsistency detected - Two-state ensemble required, got {e.size} states')

def ensemble_bloch_vectors(e):
    """
    Function returning the Bloch vectors of the states of a
    qubit ensemble as an array with shape (n, 3).
    """
    basis = pauli_basis(2)
    return np.real(np.einsum('kab,nba->nk', basis[1:], e.state_matrices()))

def branch_helstrom_norms(unnormalised_probs, e):
    """
    Function returning, for a stack of unnormalised Pauli vectors
    u = w * c (shape (..., dim**2)), the trace norms
    ||q1 E_u(rho1) - q2 E_u(rho2)||_1, which are linear in w.
    For qubits the Bloch closed form max{w|q1-q2|, ||q1 M r1 - q2 M r2||}
    is used, with M the Bloch action of u; otherwise the Helstrom
    operators are diagonalised with Jacobi rotations.
    """
    check_two_states(e)
    u = np.asarray(unnormalised_probs, dtype=float)
    q1, q2 = e.priors
    if e.dim == 2:
        weight = u.sum(axis=-1)
        a, b, c, d = u[..., 0], u[..., 1], u[..., 2], u[..., 3]
        action = np.stack([a + b - c - d, a - b + c - d, a - b - c + d], axis=-1)
        r1, r2 = ensemble_bloch_vectors(e)
        bloch_gap = np.linalg.norm(action * (q1 * r1 - q2 * r2), axis=-1)
        return np.maximum(weight * abs(q1 - q2), bloch_gap)
    operator = q1 * e.states[0].entries - q2 * e.states[1].entries
    return trace_norm_batch(apply_channel_to_matrix(u, operator))

def helstrom_value(e):
    """
    Function returning the Helstrom bound of a two-state ensemble
    as a float.
    """
    check_two_states(e)
    identity = np.zeros(e.dim ** 2)
    identity[0] = 1.0
    value = 0.5 + 0.5 * float(branch_helstrom_norms(identity, e))
    return min(max(value, float(np.max(e.priors))), 1.0)

def helstrom_two(e):
    """
    Function returning the Helstrom bound 1/2 + ||q1 rho1 - q2 rho2||_1 / 2
    of a two-state ensemble.
    """
    return GuessingResultDataCls(helstrom_value(e), STRATEGY_HELSTROM)

def push_through(e, ch):
    """
    Function returning the ensemble obtained by sending every state
    through the passed Pauli channel.
    """
    check_same_dim(e, ch)
    return EnsembleCls(e.priors, [apply_channel(ch, state) for state in e.states], name=e.name)

def helstrom_povm(e):
    """
    Function returning the projective Helstrom measurement
    (projector onto the positive part of q1 rho1 - q2 rho2) for a
    qubit two-state ensemble.
    """
    check_two_states(e)
    if e.dim != 2:
        raise UnsupportedStrategyError('Inconsistency detected - Helstrom POVM construction is available for qubits only')
    q1, q2 = e.priors
    r1, r2 = ensemble_bloch_vectors(e)
    scalar_part = q1 - q2
    bloch_part = q1 * r1 - q2 * r2
    identity = np.eye(2, dtype=complex)
    if np.linalg.norm(bloch_part) <= abs(scalar_part):
        first = identity if scalar_part >= 0.0 else np.zeros((2, 2), dtype=complex)
        return PovmCls([first, identity - first])
    direction = bloch_part / np.linalg.norm(bloch_part)
    projector = 0.5 * (identity + np.einsum('k,kab->ab', direction, pauli_basis(2)[1:]))
    return PovmCls([projector, identity - projector])

def flip_povm(povm):
    """
    Function returning the flipped measurement tr(P) 1 - P of a
    qubit POVM, i.e., the POVM whose Bloch vectors are negated.
    """
    if povm.dim != 2:
        raise UnsupportedStrategyError('Inconsistency detected - Flipped measurements are defined for qubits only')
    traces = np.real(np.einsum('kaa->k', povm.elements))
    return PovmCls([trace * np.eye(2) - elem for trace, elem in zip(traces, povm.elements)])

def guessing_with_povm(e, povm):
    """
    Function returning sum_i q_i tr(P_i rho_i) for a fixed
    measurement.
    """
    if povm.dim != e.dim or povm.size != e.size:
        raise DimensionMismatchError('Inconsistency detected - POVM does not match the ensemble')
    value = float(np.real(np.einsum('n,nab,nba->', e.priors, povm.elements, e.state_matrices())))
    return GuessingResultDataCls(value, STRATEGY_FIXED_POVM)

def check_optimality(e, povm):
    """
    Function that checks the necessary and sufficient optimality
    conditions of a minimum-error measurement:
    sum_i q_i rho_i P_i - q_j rho_j >= 0 for every j.
    """
    if povm.dim != e.dim or povm.size != e.size:
        raise DimensionMismatchError('Inconsistency detected - POVM does not match the ensemble')
    weighted_states = e.priors[:, None, None] * e.state_matrices()
    gamma = np.einsum('nab,nbc->ac', weighted_states, povm.elements)
    if not is_hermitian(gamma, OPTIMALITY_TOL):
        return False
    gamma = 0.5 * (gamma + gamma.conj().T)
    lowest = jacobi_eigvalsh(gamma[None, :, :] - weighted_states)[:, 0]
    return bool(np.all(lowest >= -OPTIMALITY_TOL))

# =============
# Closed Forms
# =============
def depolarization_guessing_closed_form(P_g, p, n, known_range=True):
    """
    Function returning the guessing probability of an equal-prior
    n-state ensemble with noiseless guessing P_g after the qubit
    depolarisation channel D_p. With known_range the flipped
    measurement is used for p > 1: (p-1) P_g + (2-p)/n; otherwise
    the original measurement is kept on the whole range:
    (1-p) P_g + p/n.
    """
    if n < 2:
        raise ChannelDomainError(f'Inconsistency detected - At least two states needed, got {n}')
    check_interval('P_g', P_g, 1.0 / n, 1.0)
    check_interval('p', p, 0.0, 4.0 / 3.0)
    if known_range and p > 1.0:
        return (p - 1.0) * P_g + (2.0 - p) / n
    return (1.0 - p) * P_g + p / n

def switch_depolarization_closed_form(P_g, p, n):
    """
    Function returning the guessing probability after the quantum
    switch of two D_p channels, with the optimal measurement per
    ancilla outcome (known-range closed form in every branch).
    """
    check_interval('p', p, 0.0, 4.0 / 3.0)
    q_minus = 3.0 * p ** 2 / 8.0
    plus_parameter = 4.0 * (4.0 - 3.0 * p) * p / (8.0 - 3.0 * p ** 2)
    return (1.0 - q_minus) * depolarization_guessing_closed_form(P_g, plus_parameter, n) \
        + q_minus * depolarization_guessing_closed_form(P_g, 4.0 / 3.0, n)

def multicopy_orthogonal_depolarization(p, n):
    """
    Function returning the Helstrom bound for n copies of the
    orthogonal pair |0>, |1> sent through D_p:
    1/2 + 1/4 sum_k C(n,k) |(p/2)^k (1-p/2)^(n-k) - (p/2)^(n-k) (1-p/2)^k|.
    """
    if n < 1:
        raise ChannelDomainError(f'Inconsistency detected - Number of copies must be at least 1, got {n}')
    check_interval('p', p, 0.0, 4.0 / 3.0)
    flip, keep = p / 2.0, 1.0 - p / 2.0
    return 0.5 + 0.25 * sum(math.comb(n, k) * abs(flip ** k * keep ** (n - k) - flip ** (n - k) * keep ** k)
                            for k in range(n + 1))

def pure_pair_multicopy(overlap, n):
    """
    Function returning the Helstrom bound (1 + sqrt(1 - c^(2n))) / 2
    for n copies of two equiprobable pure states with overlap c.
    """
    if n < 1:
        raise ChannelDomainError(f'Inconsistency detected - Number of copies must be at least 1, got {n}')
    check_interval('overlap', overlap, -1.0, 1.0)
    return 0.5 * (1.0 + math.sqrt(max(1.0 - overlap ** (2 * n), 0.0)))

def multicopy_helstrom(e, ch, n):
    """
    Function returning the Helstrom bound for n copies of a
    two-state ensemble sent through the passed Pauli channel,
    obtained by diagonalising the tensor-power Helstrom operator.
    """
    check_two_states(e)
    if n < 1:
        raise ChannelDomainError(f'Inconsistency detected - Number of copies must be at least 1, got {n}')
    noisy = push_through(e, ch)
    powers = [functools.reduce(np.kron, [state.entries] * n) for state in noisy.states]
    operator = e.priors[0] * powers[0] - e.priors[1] * powers[1]
    return GuessingResultDataCls(min(0.5 + 0.5 * float(trace_norm_batch(operator)), 1.0), STRATEGY_HELSTROM)

# ===================
# Protocol Guessing
# ===================
def protocol_guessing(branches, e):
    """
    Function returning the average guessing probability when the
    optimal (Helstrom) measurement is applied in every branch:
    sum_b w_b P_helstrom(E_b(ensemble)).
    """
    if e.size != 2:
        raise UnsupportedStrategyError(f'Inconsistency detected - Per-branch optimum is available for two-state ensembles only, got {e.size}')
    if branches.dim != e.dim:
        raise DimensionMismatchError(f'Inconsistency detected - Branch dimension {branches.dim} differs from ensemble dimension {e.dim}')
    weights = branches.weights
    if abs(weights.sum() - 1.0) > WEIGHT_SUM_TOL:
        raise ChannelDomainError(f'Inconsistency detected - Branch weights sum to {weights.sum()!r}')
    keep = weights > 0.0
    unnormalised = weights[keep, None] * branches.channel_matrix[keep]
    value = 0.5 * weights.sum() + 0.5 * float(np.sum(branch_helstrom_norms(unnormalised, e)))
    return GuessingResultDataCls(min(value, 1.0), STRATEGY_PER_BRANCH)
