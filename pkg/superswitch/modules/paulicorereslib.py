# ========================================
# Import Python Modules (Standard Library)
# ========================================
import functools
import itertools

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.utils.errorsreslib import ChannelDomainError, DimensionMismatchError
from superswitch.utils.jacobireslib import is_hermitian, jacobi_eigvalsh

# =================
# Module Parameters
# =================
SUPPORTED_DIMS = (2, 4)
# Negative probabilities down to -CLAMP_TOL are rounding noise
CLAMP_TOL = 1e-12
SUM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
BLOCH_TOL = 1e-12
# Tolerance used when checking parameters against their legal interval
INTERVAL_TOL = 1e-12

PAULI_LABELS_DIM_TWO = ('I', 'X', 'Y', 'Z')
PAULI_MATRICES_DIM_TWO = (np.eye(2, dtype=complex),
                          np.array([[0, 1], [1, 0]], dtype=complex),
                          np.array([[0, -1j], [1j, 0]], dtype=complex),
                          np.array([[1, 0], [0, -1]], dtype=complex))

# =========
# Functions
# =========
def check_interval(name, value, lower, upper):
    """
    Function that raises a ChannelDomainError when value
    does not lie in the closed interval [lower, upper].
    """
    if not (lower - INTERVAL_TOL <= value <= upper + INTERVAL_TOL):
        raise ChannelDomainError(f'Inconsistency detected - {name} must lie in [{lower:.6g}, {upper:.6g}], got {value!r}')

def check_dim(dim):
    """
    Function that raises a DimensionMismatchError when dim
    is not a supported Hilbert space dimension.
    """
    if dim not in SUPPORTED_DIMS:
        raise DimensionMismatchError(f'Inconsistency detected - Dimension {dim} not in {SUPPORTED_DIMS}')

def check_same_dim(*objs):
    """
    Function that raises a DimensionMismatchError unless all
    the passed objects expose the same dim attribute.
    """
    dims = set(obj.dim for obj in objs)
    if len(dims) != 1:
        raise DimensionMismatchError(f'Inconsistency detected - Mixed dimensions {sorted(dims)}')

@functools.lru_cache(maxsize=None)
def pauli_basis(dim):
    """
    Function returning the Pauli (tensor-)basis as a read-only
    array with shape (dim**2, dim, dim). For dim=2 the order is
    [I, X, Y, Z]; for dim=4 the element with index 4a+b is the
    tensor product of the qubit Paulis with indices a and b.
    """
    check_dim(dim)
    if dim == 2:
        basis = np.array(PAULI_MATRICES_DIM_TWO)
    else:
        basis = np.array([np.kron(first, second) for first, second in
                          itertools.product(PAULI_MATRICES_DIM_TWO, repeat=2)])
    basis.setflags(write=False)
    return basis

def pauli_labels(dim):
    """
    Function returning the labels of the Pauli (tensor-)basis
    elements in basis order (e.g., 'XZ' for X tensor Z).
    """
    check_dim(dim)
    if dim == 2:
        return PAULI_LABELS_DIM_TWO
    return tuple(''.join(pair) for pair in itertools.product(PAULI_LABELS_DIM_TWO, repeat=2))

@functools.lru_cache(maxsize=None)
def pauli_product_tables(dim):
    """
    Function returning the Pauli group multiplication table
    with phases dropped. Output:
    -) product_index: Integer array with P_i P_j proportional
    to P_{product_index[i, j]}.
    -) commuting: Boolean array, True where P_i and P_j commute.
    Two Pauli (tensor-)basis elements either commute or
    anticommute.
    """
    basis = pauli_basis(dim)
    size = dim ** 2
    product_index = np.zeros((size, size), dtype=int)
    commuting = np.zeros((size, size), dtype=bool)
    for i, j in itertools.product(range(size), repeat=2):
        product = basis[i] @ basis[j]
        overlaps = np.abs(np.einsum('kab,ab->k', basis.conj(), product))
        product_index[i, j] = int(np.argmax(overlaps))
        commuting[i, j] = np.allclose(product, basis[j] @ basis[i])
    product_index.setflags(write=False)
    commuting.setflags(write=False)
    return product_index, commuting

@functools.lru_cache(maxsize=None)
def pauli_update_tensors(dim):
    """
    Function returning the two 0/1 matrices with shape
    (dim**4, dim**2) that map the flattened outer product of
    two probability vectors onto the unnormalised anticommutator
    and commutator vectors. Row i*dim**2 + j has a single one in
    column k when P_i P_j is proportional to P_k, placed in the
    anticommutator matrix for commuting pairs and in the
    commutator matrix otherwise.
    """
    product_index, commuting = pauli_product_tables(dim)
    size = dim ** 2
    acom_tensor = np.zeros((size, size, size))
    com_tensor = np.zeros((size, size, size))
    for i, j in itertools.product(range(size), repeat=2):
        if commuting[i, j]:
            acom_tensor[i, j, product_index[i, j]] = 1.0
        else:
            com_tensor[i, j, product_index[i, j]] = 1.0
    acom_tensor = acom_tensor.reshape((size * size, size))
    com_tensor = com_tensor.reshape((size * size, size))
    acom_tensor.setflags(write=False)
    com_tensor.setflags(write=False)
    return acom_tensor, com_tensor

def dim_from_length(length):
    """
    Function mapping the length of a Pauli probability vector
    onto the Hilbert space dimension.
    """
    for dim in SUPPORTED_DIMS:
        if dim ** 2 == length:
            return dim
    raise DimensionMismatchError(f'Inconsistency detected - No Pauli basis with {length} elements')

# =======
# Classes
# =======
class PauliChannelCls:
    """
    Class that stores a Pauli channel as its probability vector
    over the Pauli (tensor-)basis. Instances are immutable: the
    probability vector is exposed as a read-only array.
    """
    # === Constructor ===
    def __init__(self, probs, dim=None):
        """
        Class constructor. Input arguments:
        -) probs: Sequence of dim**2 real numbers in basis order.
        -) dim: Optional Hilbert space dimension, checked against
        the length of probs.
        """
        probs = np.array(probs, dtype=float).ravel()
        inferred_dim = dim_from_length(probs.size)
        if dim is not None and dim != inferred_dim:
            raise DimensionMismatchError(f'Inconsistency detected - {probs.size} probabilities passed for dimension {dim}')
        if not np.all(np.isfinite(probs)):
            raise ChannelDomainError('Inconsistency detected - Non-finite channel probability')
        if np.any(probs < -CLAMP_TOL):
            raise ChannelDomainError(f'Inconsistency detected - Negative channel probability {probs.min()!r}')
        probs[probs < 0.0] = 0.0
        if abs(probs.sum() - 1.0) > SUM_TOL:
            raise ChannelDomainError(f'Inconsistency detected - Channel probabilities sum to {probs.sum()!r}')
        probs.setflags(write=False)
        # Attribute initialization
        self._dim = inferred_dim
        self._probs = probs

    # === Read-only Attribute ===
    @property
    def dim(self):
        return self._dim

    # === Read-only Attribute ===
    @property
    def probs(self):
        return self._probs

    # === Read-only Attribute ===
    @property
    def identity_weight(self):
        return float(self._probs[0])

    # === Method ===
    def is_close(self, other, tol=CLAMP_TOL):
        """
        Method that returns True when other has the same dimension
        and a probability vector equal entrywise within tol.
        """
        return self.dim == other.dim and bool(np.all(np.abs(self.probs - other.probs) <= tol))

    # === Method ===
    def as_dict(self):
        """
        Method returning the probability vector as a dictionary
        keyed by Pauli label.
        """
        return dict(zip(pauli_labels(self.dim), (float(elem) for elem in self.probs)))

    def __repr__(self):
        return f'PauliChannelCls(dim={self.dim}, probs={np.array2string(self.probs, precision=6)})'

class DensityMatrixCls:
    """
    Class that stores a density matrix (Hermitian, unit trace,
    positive semidefinite). Instances are immutable.
    """
    # === Constructor ===
    def __init__(self, entries, check_positivity=True):
        """
        Class constructor. Input arguments:
        -) entries: dim x dim complex matrix.
        -) check_positivity: Boolean enabling the eigenvalue check
        (Jacobi rotations). Hermiticity and trace are always checked.
        """
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatchError(f'Inconsistency detected - Square matrix expected, got shape {entries.shape}')
        check_dim(entries.shape[0])
        if not is_hermitian(entries, HERMITIAN_TOL):
            raise ChannelDomainError('Inconsistency detected - Density matrix is not Hermitian')
        if abs(np.trace(entries) - 1.0) > TRACE_TOL:
            raise ChannelDomainError(f'Inconsistency detected - Density matrix trace is {np.trace(entries).real!r}')
        if check_positivity and jacobi_eigvalsh(entries)[0] < -PSD_TOL:
            raise ChannelDomainError('Inconsistency detected - Density matrix has a negative eigenvalue')
        entries.setflags(write=False)
        # Attribute initialization
        self._entries = entries

    # === Read-only Attribute ===
    @property
    def dim(self):
        return self._entries.shape[0]

    # === Read-only Attribute ===
    @property
    def entries(self):
        return self._entries

    def __repr__(self):
        return f'DensityMatrixCls(dim={self.dim})'

class BlochVectorCls:
    """
    Class that stores the Bloch vector of a qubit state.
    """
    # === Constructor ===
    def __init__(self, r):
        r = np.array(r, dtype=float).ravel()
        if r.size != 3:
            raise DimensionMismatchError(f'Inconsistency detected - Bloch vector with {r.size} components')
        if np.linalg.norm(r) > 1.0 + BLOCH_TOL:
            raise ChannelDomainError(f'Inconsistency detected - Bloch vector norm {np.linalg.norm(r)!r} exceeds 1')
        r.setflags(write=False)
        self._r = r

    # === Read-only Attribute ===
    @property
    def r(self):
        return self._r

    # === Read-only Attribute ===
    @property
    def norm(self):
        return float(np.linalg.norm(self._r))

    def __repr__(self):
        return f'BlochVectorCls(r={np.array2string(self._r, precision=6)})'

class EnsembleCls:
    """
    Class that stores a discrimination problem instance, i.e.,
    prior probabilities paired with states of equal dimension.
    """
    # === Constructor ===
    def __init__(self, priors, states, name=None):
        """
        Class constructor. Input arguments:
        -) priors: Sequence of non-negative reals summing to one.
        -) states: Sequence of DensityMatrixCls instances.
        -) name: Optional label used in reports.
        """
        priors = np.array(priors, dtype=float).ravel()
        states = tuple(states)
        if len(states) < 2 or priors.size != len(states):
            raise ChannelDomainError(f'Inconsistency detected - {priors.size} priors for {len(states)} states (at least two needed)')
        if np.any(priors < 0.0) or abs(priors.sum() - 1.0) > SUM_TOL:
            raise ChannelDomainError('Inconsistency detected - Priors must be non-negative and sum to one')
        check_same_dim(*states)
        priors.setflags(write=False)
        # Attribute initialization
        self._priors = priors
        self._states = states
        self.name = name

    # === Read-only Attribute ===
    @property
    def dim(self):
        return self._states[0].dim

    # === Read-only Attribute ===
    @property
    def priors(self):
        return self._priors

    # === Read-only Attribute ===
    @property
    def size(self):
        return len(self._states)

    # === Read-only Attribute ===
    @property
    def states(self):
        return self._states

    # === Method ===
    def state_matrices(self):
        """
        Method returning the states as an array with shape
        (n, dim, dim).
        """
        return np.array([state.entries for state in self._states])

    def __repr__(self):
        return f'EnsembleCls(name={self.name!r}, dim={self.dim}, size={self.size})'

# ====================
# Channel Constructors
# ====================
def identity_channel(dim=2):
    """
    Function returning the identity channel.
    """
    check_dim(dim)
    probs = np.zeros(dim ** 2)
    probs[0] = 1.0
    return PauliChannelCls(probs)

def make_pauli_channel(probs):
    """
    Function returning the Pauli channel with the passed
    probability vector (length 4 or 16).
    """
    return PauliChannelCls(probs)

def make_depolarizing_d2(p):
    """
    Function returning the qubit depolarisation channel D_p,
    p in [0, 4/3].
    """
    check_interval('p', p, 0.0, 4.0 / 3.0)
    return PauliChannelCls([1.0 - 3.0 * p / 4.0, p / 4.0, p / 4.0, p / 4.0])

def make_bit_phase_flip(p):
    """
    Function returning the bit-phase flip channel
    (1-p) rho + p Y rho Y, p in [0, 1].
    """
    check_interval('p', p, 0.0, 1.0)
    return PauliChannelCls([1.0 - p, 0.0, p, 0.0])

def make_Q_channel(p, q):
    """
    Function returning the channel (1-p-q) rho + p Y rho Y + q Z rho Z.
    """
    check_interval('p', p, 0.0, 1.0)
    check_interval('q', q, 0.0, 1.0)
    check_interval('p + q', p + q, 0.0, 1.0)
    return PauliChannelCls([1.0 - p - q, 0.0, p, q])

def make_Qtilde_channel(p):
    """
    Function returning the member of the Q channel family with
    no X component and identity weight 1/6, obtained by the
    substitution p -> 1/3 + p, q -> 1/2 - p, with p in [-1/3, 1/3].
    """
    check_interval('p', p, -1.0 / 3.0, 1.0 / 3.0)
    return make_Q_channel(max(1.0 / 3.0 + p, 0.0), 1.0 / 2.0 - p)

# ==================
# Channel Operations
# ==================
def apply_channel_to_matrix(probs, matrix):
    """
    Function returning sum_i probs_i P_i M P_i^dagger for a raw
    (stack of) matrix M. probs may carry leading batch axes
    that broadcast against the matrix stack.
    """
    probs = np.asarray(probs, dtype=float)
    basis = pauli_basis(dim_from_length(probs.shape[-1]))
    conjugated = np.einsum('kab,...bc,kdc->...kad', basis, matrix, basis.conj())
    return np.einsum('...k,...kad->...ad', probs, conjugated)

def apply_channel(ch, rho):
    """
    Function returning the state E(rho) = sum_i p_i P_i rho P_i^dagger.
    """
    check_same_dim(ch, rho)
    return DensityMatrixCls(apply_channel_to_matrix(ch.probs, rho.entries), check_positivity=False)

def compose_probs(probs1, probs2):
    """
    Function returning the probability vector of the composition
    of two Pauli channels (group convolution, phases dropped).
    Leading batch axes broadcast.
    """
    probs1 = np.asarray(probs1, dtype=float)
    probs2 = np.asarray(probs2, dtype=float)
    size = probs1.shape[-1]
    acom_tensor, com_tensor = pauli_update_tensors(dim_from_length(size))
    outer = (probs1[..., :, None] * probs2[..., None, :]).reshape(probs1.shape[:-1] + (size * size,))
    return outer @ (acom_tensor + com_tensor)

def compose(ch1, ch2):
    """
    Function returning the Pauli channel ch1 o ch2. The result
    does not depend on the order of the arguments.
    """
    check_same_dim(ch1, ch2)
    return PauliChannelCls(compose_probs(ch1.probs, ch2.probs))

def compose_power(ch, power):
    """
    Function returning the power-fold sequential composition of
    the passed channel (power >= 0).
    """
    if power < 0:
        raise ChannelDomainError(f'Inconsistency detected - Negative composition power {power}')
    result = identity_channel(ch.dim).probs
    for _ in range(power):
        result = compose_probs(result, ch.probs)
    return PauliChannelCls(result)

def mix_channels(weights, channels):
    """
    Function returning the convex combination of the passed
    Pauli channels.
    """
    check_same_dim(*channels)
    weights = np.asarray(weights, dtype=float)
    return PauliChannelCls(weights @ np.array([channel.probs for channel in channels]))

# ==============
# Qubit Geometry
# ==============
def bloch_of(rho):
    """
    Function returning the Bloch vector of a qubit state.
    """
    if rho.dim != 2:
        raise DimensionMismatchError('Inconsistency detected - Bloch vectors are defined for qubits only')
    basis = pauli_basis(2)
    return BlochVectorCls(np.real(np.einsum('kab,ba->k', basis[1:], rho.entries)))

def state_of(bloch):
    """
    Function returning the qubit state (1 + r.sigma) / 2.
    """
    basis = pauli_basis(2)
    return DensityMatrixCls(0.5 * (basis[0] + np.einsum('k,kab->ab', bloch.r, basis[1:])),
                            check_positivity=False)

def bloch_action(ch):
    """
    Function returning the factors by which a qubit Pauli channel
    with probabilities (a, b, c, d) scales the three Bloch
    components: (a+b-c-d, a-b+c-d, a-b-c+d).
    """
    if ch.dim != 2:
        raise DimensionMismatchError('Inconsistency detected - Bloch action is defined for qubits only')
    a, b, c, d = ch.probs
    return np.array([a + b - c - d, a - b + c - d, a - b - c + d])

def state_from_ket(ket):
    """
    Function returning the pure state |psi><psi| of a
    (possibly unnormalised) ket.
    """
    ket = np.array(ket, dtype=complex).ravel()
    norm = np.linalg.norm(ket)
    if norm == 0.0:
        raise ChannelDomainError('Inconsistency detected - Null ket')
    ket = ket / norm
    return DensityMatrixCls(np.outer(ket, ket.conj()), check_positivity=False)
