# ========================================
# Import Python Modules (Standard Library)
# ========================================
import itertools
import math

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.paulicorereslib import (PauliChannelCls, check_same_dim, dim_from_length,
                                                 pauli_update_tensors)
from superswitch.utils.errorsreslib import BranchLimitError, ChannelDomainError

# =================
# Module Parameters
# =================
DEFAULT_MAX_BRANCHES = 10 ** 6
# Branches lighter than this are dropped before merging
ZERO_WEIGHT_TOL = 1e-14
MERGE_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-10
SIMPLEX_TOL = 1e-12
# Upper bound on the floats held by one block of pair products
PAIR_BLOCK_FLOATS = 4 * 10 ** 6
# Special depolarisation channels mapped to themselves by the update rule
P_STAR = 2.0 * (1.0 - 1.0 / math.sqrt(3.0))
BETA_STAR = P_STAR / 4.0
RECURRENCE_C = 6.0 * BETA_STAR ** 2
RECURRENCE_D = 2.0 * BETA_STAR
STATIONARY_TRIPLES = ((0.0, 0.0, 1.0),
                      (0.5, math.sqrt(3.0) / 4.0, (2.0 - math.sqrt(3.0)) / 4.0),
                      (0.0, 0.75, 0.25))
OUTCOME_SIGNS = ('+', '-')

# =========
# Functions
# =========
def update_terms(u1, u2):
    """
    Function that applies the update rule to (stacks of)
    unnormalised Pauli vectors u = w * c and returns the pair
    (acom, com) of unnormalised anticommutator and commutator
    vectors. The rule is bilinear, so the weight of each output
    is the product of the input weights times the outcome
    probability. Leading axes broadcast.
    """
    u1 = np.asarray(u1, dtype=float)
    u2 = np.asarray(u2, dtype=float)
    size = u1.shape[-1]
    acom_tensor, com_tensor = pauli_update_tensors(dim_from_length(size))
    outer = u1[..., :, None] * u2[..., None, :]
    outer = outer.reshape(outer.shape[:-2] + (size * size,))
    return outer @ acom_tensor, outer @ com_tensor

def _normalise_term(term):
    weight = float(term.sum())
    if weight < ZERO_WEIGHT_TOL:
        return 0.0, None
    return weight, PauliChannelCls(term / weight)

def update_acom(r1, r2):
    """
    Function returning (Pr(a), a-channel) for the anticommutator
    outcome of two Pauli channels. When the weight is below the
    drop threshold, (0.0, None) is returned.
    """
    check_same_dim(r1, r2)
    return _normalise_term(update_terms(r1.probs, r2.probs)[0])

def update_com(r1, r2):
    """
    Function returning (Pr(c), c-channel) for the commutator
    outcome of two Pauli channels. The c-channel has no identity
    component. When the weight is below the drop threshold,
    (0.0, None) is returned.
    """
    check_same_dim(r1, r2)
    return _normalise_term(update_terms(r1.probs, r2.probs)[1])

def switch_pair(E, F):
    """
    Function returning the two-branch distribution of the quantum
    switch of E and F with the control measured in the |+>,|->
    basis.
    """
    check_same_dim(E, F)
    acom_term, com_term = update_terms(E.probs, F.probs)
    return BranchDistributionCls.from_unnormalised(np.array([acom_term, com_term]), order=0)

def combine_distributions(first, second, max_branches=DEFAULT_MAX_BRANCHES):
    """
    Function that switches every branch of first with every
    branch of second and returns the merged distribution of
    order first.order + 1.
    NOTE: The candidate branch count 2 * |first| * |second| is
    checked against max_branches before any work is done.
    """
    check_same_dim(first, second)
    pair_count = 2 * first.size * second.size
    if pair_count > max_branches:
        raise BranchLimitError(pair_count, max_branches)
    size = first.dim ** 2
    u1 = first.unnormalised()
    u2 = second.unnormalised()
    block = max(1, PAIR_BLOCK_FLOATS // (second.size * size * size))
    pieces = []
    for start in range(0, first.size, block):
        acom_terms, com_terms = update_terms(u1[start:start + block, None, :], u2[None, :, :])
        pieces.extend([acom_terms.reshape((-1, size)), com_terms.reshape((-1, size))])
    return BranchDistributionCls.from_unnormalised(np.concatenate(pieces), order=first.order + 1)

def superswitch(E, order, max_branches=DEFAULT_MAX_BRANCHES):
    """
    Function returning the branch distribution of the superswitch
    of the given order with every channel slot filled with E.
    Order 0 is the quantum switch; order n switches two independent
    copies of the order n-1 superswitch.
    """
    if order < 0:
        raise ChannelDomainError(f'Inconsistency detected - Superswitch order must be non-negative, got {order}')
    distribution = switch_pair(E, E)
    for _ in range(order):
        distribution = combine_distributions(distribution, distribution, max_branches)
    return distribution

def superswitch_orders(E, max_order, max_branches=DEFAULT_MAX_BRANCHES):
    """
    Generator yielding the branch distributions of orders
    0, 1, ..., max_order, each built from the previous one.
    """
    distribution = switch_pair(E, E)
    yield distribution
    for _ in range(max_order):
        distribution = combine_distributions(distribution, distribution, max_branches)
        yield distribution

def first_order_terms(E, F, E_tilde, F_tilde):
    """
    Function returning the unnormalised Pauli vectors of the eight
    first-order superswitch outcomes as a dictionary keyed by the
    label s1 s2 s: s1 (s2) is the outcome of the control of the
    switch of E and F (E_tilde and F_tilde), s the outcome of the
    outer control.
    """
    check_same_dim(E, F, E_tilde, F_tilde)
    inner_first = dict(zip(OUTCOME_SIGNS, update_terms(E.probs, F.probs)))
    inner_second = dict(zip(OUTCOME_SIGNS, update_terms(E_tilde.probs, F_tilde.probs)))
    terms = dict()
    for s1, s2 in itertools.product(OUTCOME_SIGNS, repeat=2):
        outer_terms = dict(zip(OUTCOME_SIGNS, update_terms(inner_first[s1], inner_second[s2])))
        for s in OUTCOME_SIGNS:
            terms[s1 + s2 + s] = outer_terms[s]
    return terms

def first_order_outcomes(E, F, E_tilde, F_tilde):
    """
    Function returning the eight labelled first-order outcomes
    as a dictionary label -> (weight, channel or None).
    """
    return {label: _normalise_term(term) for label, term in first_order_terms(E, F, E_tilde, F_tilde).items()}

def correlated_first_order(E):
    """
    Function returning the four-branch distribution of the
    first-order superswitch whose inner controls are entangled.
    Branch (x, s) mixes the general outcomes (s1, s2, s) with
    s1 * s2 = x.
    """
    terms = first_order_terms(E, E, E, E)
    grouped = []
    for x, s in itertools.product(OUTCOME_SIGNS, repeat=2):
        grouped.append(sum(term for label, term in terms.items()
                           if label[2] == s and (label[0] == label[1]) == (x == '+')))
    return BranchDistributionCls.from_unnormalised(np.array(grouped), order=1)

def depolarizing_parameter(ch):
    """
    Function returning p for a channel of the depolarisation form
    [1 - (d**2 - 1) p / d**2, p / d**2, ..., p / d**2].
    """
    off_diagonal = ch.probs[1:]
    if np.max(off_diagonal) - np.min(off_diagonal) > MERGE_TOL:
        raise ChannelDomainError('Inconsistency detected - Channel is not a depolarisation channel')
    return float(ch.dim ** 2 * np.mean(off_diagonal))

def check_simplex(triple):
    """
    Function that raises a ChannelDomainError unless the triple is
    a probability vector.
    """
    if any(elem < -SIMPLEX_TOL for elem in triple) or abs(sum(triple) - 1.0) > SIMPLEX_TOL:
        raise ChannelDomainError(f'Inconsistency detected - {triple} is not a point of the probability simplex')

def recurrence_step(alpha, beta, gamma):
    """
    Function returning the weights of D_star, D_4/3 and the identity
    after one superswitch order, starting from a mixture of the
    three self-mapped channels.
    """
    c, d = RECURRENCE_C, RECURRENCE_D
    return (alpha ** 2 * (1.0 - c) + 2.0 * alpha * beta * (1.0 - d) + 2.0 * alpha * gamma,
            alpha ** 2 * c + 2.0 * alpha * beta * d + 2.0 * beta ** 2 / 3.0 + 2.0 * beta * gamma,
            beta ** 2 / 3.0 + gamma ** 2)

def recurrence_residual(triple):
    """
    Function returning the largest entrywise change of the triple
    under one recurrence step.
    """
    return max(abs(new - old) for new, old in zip(recurrence_step(*triple), triple))

def fixed_point_recurrence(alpha0, beta0, gamma0, steps):
    """
    Function returning the list of triples (alpha_n, beta_n, gamma_n)
    for n = 0, ..., steps.
    """
    check_simplex((alpha0, beta0, gamma0))
    if steps < 0:
        raise ChannelDomainError(f'Inconsistency detected - Negative number of steps {steps}')
    triples = [(alpha0, beta0, gamma0)]
    for _ in range(steps):
        triples.append(recurrence_step(*triples[-1]))
    return triples

def superswitch_batch(probs, max_order):
    """
    Function returning the unnormalised branch stacks of orders
    0, ..., max_order for a stack of channels with shape
    (N, dim**2). Entry n has shape (N, 2**(2**(n+1)-1), dim**2).
    Branches are not merged; guessing probabilities are linear
    in the weights of equal channels, so the result is exact.
    """
    probs = np.asarray(probs, dtype=float)
    size = probs.shape[-1]
    acom_terms, com_terms = update_terms(probs, probs)
    stacks = [np.stack([acom_terms, com_terms], axis=-2)]
    for _ in range(max_order):
        previous = stacks[-1]
        acom_terms, com_terms = update_terms(previous[..., :, None, :], previous[..., None, :, :])
        batch_shape = previous.shape[:-2]
        stacks.append(np.concatenate([acom_terms.reshape(batch_shape + (-1, size)),
                                      com_terms.reshape(batch_shape + (-1, size))], axis=-2))
    return stacks

# =======
# Classes
# =======
class BranchDistributionCls:
    """
    Class that stores the weighted Pauli channels obtained by
    measuring every control of a superswitch. At construction,
    branches lighter than the drop threshold are removed and
    branches with channel vectors equal entrywise within 1e-12
    are merged; the remaining branches are sorted by channel
    vector.
    """
    # === Constructor ===
    def __init__(self, weights, channel_matrix, order=0):
        """
        Class constructor. Input arguments:
        -) weights: Sequence of B non-negative reals summing to one.
        -) channel_matrix: Array with shape (B, dim**2) holding the
        normalised channel vectors.
        -) order: Superswitch order that produced the branches.
        """
        weights = np.array(weights, dtype=float).ravel()
        channel_matrix = np.array(channel_matrix, dtype=float)
        if channel_matrix.ndim != 2 or channel_matrix.shape[0] != weights.size:
            raise ChannelDomainError('Inconsistency detected - One channel vector per weight expected')
        if np.any(weights < 0.0):
            raise ChannelDomainError('Inconsistency detected - Negative branch weight')
        if abs(weights.sum() - 1.0) > WEIGHT_SUM_TOL:
            raise ChannelDomainError(f'Inconsistency detected - Branch weights sum to {weights.sum()!r}')
        # Attribute initialization
        self._dim = dim_from_length(channel_matrix.shape[1])
        self._order = order
        # Call auxiliary methods
        self._merge_branches(weights, channel_matrix)

    # === Read-only Attribute ===
    @property
    def channel_matrix(self):
        return self._channel_matrix

    # === Read-only Attribute ===
    @property
    def dim(self):
        return self._dim

    # === Read-only Attribute ===
    @property
    def order(self):
        return self._order

    # === Read-only Attribute ===
    @property
    def size(self):
        return self._weights.size

    # === Read-only Attribute ===
    @property
    def weights(self):
        return self._weights

    # === Read-only Attribute ===
    @property
    def branches(self):
        return [(float(weight), PauliChannelCls(channel))
                for weight, channel in zip(self._weights, self._channel_matrix)]

    # === Protected Method ===
    def _merge_branches(self, weights, channel_matrix):
        """
        Method that drops negligible branches, sorts the remaining
        ones by channel vector and accumulates the weights of
        channels equal within the merge tolerance. Every branch is
        compared with all the representatives kept so far whose
        first entry lies within the tolerance.
        """
        keep = weights >= ZERO_WEIGHT_TOL
        weights, channel_matrix = weights[keep], channel_matrix[keep]
        sort_index = np.lexsort(channel_matrix.T[::-1])
        weights, channel_matrix = weights[sort_index], channel_matrix[sort_index]
        representatives = []
        groups = np.empty(weights.size, dtype=int)
        window_start = 0
        for row in range(weights.size):
            # Representatives are appended in sorted order of the first entry
            while (window_start < len(representatives) and
                   channel_matrix[representatives[window_start], 0] < channel_matrix[row, 0] - MERGE_TOL):
                window_start += 1
            candidates = representatives[window_start:]
            matches = np.flatnonzero(np.all(np.abs(channel_matrix[candidates] - channel_matrix[row]) <= MERGE_TOL,
                                            axis=1)) if candidates else []
            if len(matches):
                groups[row] = window_start + matches[0]
            else:
                groups[row] = len(representatives)
                representatives.append(row)
        merged_weights = np.bincount(groups, weights=weights, minlength=len(representatives)).astype(float)
        merged_channels = channel_matrix[representatives]
        merged_weights.setflags(write=False)
        merged_channels.setflags(write=False)
        self._weights = merged_weights
        self._channel_matrix = merged_channels

    # === Method ===
    def unnormalised(self):
        """
        Method returning the unnormalised vectors w_b * c_b as an
        array with shape (B, dim**2).
        """
        return self._weights[:, None] * self._channel_matrix

    # === Method ===
    def mixture_probs(self):
        """
        Method returning sum_b w_b c_b, i.e., the channel obtained
        by discarding all the control outcomes.
        """
        return self._weights @ self._channel_matrix

    # === Method ===
    def is_close(self, other, tol=MERGE_TOL):
        """
        Method that returns True when both distributions hold the
        same branches within tol.
        """
        return (self.dim == other.dim and self.size == other.size and
                bool(np.all(np.abs(self._weights - other.weights) <= tol)) and
                bool(np.all(np.abs(self._channel_matrix - other.channel_matrix) <= tol)))

    # === Class Method ===
    @classmethod
    def from_unnormalised(cls, terms, order=0):
        """
        Method that builds a distribution from unnormalised vectors
        u_b = w_b * c_b (shape (B, dim**2)).
        """
        terms = np.asarray(terms, dtype=float)
        weights = terms.sum(axis=1)
        keep = weights >= ZERO_WEIGHT_TOL
        return cls(weights[keep], terms[keep] / weights[keep, None], order)

    def __repr__(self):
        return f'BranchDistributionCls(dim={self.dim}, order={self.order}, size={self.size})'
