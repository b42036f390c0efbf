# ========================================
# Import Python Modules (Standard Library)
# ========================================
from dataclasses import dataclass
import functools
import itertools
import math

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.analysisreslib import limiting_guessing, superswitch_sequence
from superswitch.modules.discriminationreslib import (make_orthogonal_pair, multicopy_helstrom,
                                                      multicopy_orthogonal_depolarization, protocol_guessing,
                                                      switch_depolarization_closed_form)
from superswitch.modules.paulicorereslib import (PauliChannelCls, apply_channel_to_matrix, make_depolarizing_d2,
                                                 pauli_basis)
from superswitch.modules.switchenginereslib import (STATIONARY_TRIPLES, first_order_terms, recurrence_residual,
                                                    superswitch, switch_pair, update_terms)

# =================
# Module Parameters
# =================
QUBIT_TOMOGRAPHY_KETS = (np.array([1.0, 0.0]),
                         np.array([0.0, 1.0]),
                         np.array([1.0, 1.0]) / math.sqrt(2.0),
                         np.array([1.0, 1.0j]) / math.sqrt(2.0))
OUTCOME_SIGNS = ('+', '-')

# =======
# Classes
# =======
@dataclass(frozen=True)
class CheckResultDataCls:
    """
    Data class that stores the outcome of one verification check.
    """
    name: str
    passed: bool
    max_error: float
    tolerance: float

# ======================
# Closed-form Guessing
# ======================
def depolarizing_channel_guessing(p):
    """
    Function returning the Helstrom bound (1 + |1 - p|) / 2 of the
    orthogonal pair after D_p.
    """
    return 0.5 * (1.0 + abs(1.0 - p))

def guessing_polynomial_order_zero(p):
    """
    Function returning the quantum switch guessing probability of
    the orthogonal pair after D_p.
    """
    return 1.0 - p + 5.0 * p ** 2 / 8.0

def guessing_polynomial_order_one(p):
    """
    Function returning the first-order superswitch guessing
    probability of the orthogonal pair after D_p.
    """
    return (1.0 - 2.0 * p + 29.0 * p ** 2 / 8.0 - 23.0 * p ** 3 / 8.0 + 55.0 * p ** 4 / 64.0
            + p ** 2 * abs(3.0 * p * (5.0 * p - 8.0) + 8.0) / 64.0)

def guessing_polynomial_order_two(p):
    """
    Function returning the second-order superswitch guessing
    probability of the orthogonal pair after D_p.
    """
    shared = abs(3.0 * p * (3.0 * p * (p * (19.0 * p - 64.0) + 80.0) - 128.0) + 64.0)
    long_term = abs(9.0 * p * (p * (p * (3.0 * p * (p * (71.0 * p - 360.0) + 760.0) - 2560.0) + 1600.0) - 512.0) + 512.0)
    return (1.0 - 4.0 * p + 67.0 * p ** 2 / 4.0 - 159.0 * p ** 3 / 4.0 + 1897.0 * p ** 4 / 32.0
            - 457.0 * p ** 5 / 8.0 + 1975.0 * p ** 8 / 1024.0 + 4457.0 * p ** 6 / 128.0 - 1573.0 * p ** 7 / 128.0
            + p ** 2 * long_term / 2048.0
            + p ** 2 * shared / 128.0 - p ** 3 * shared / 128.0 + p ** 4 * shared / 512.0
            + 3.0 * p ** 6 * abs(6.0 * p * (5.0 * p - 8.0) + 16.0) / 4096.0)

GUESSING_POLYNOMIALS = (guessing_polynomial_order_zero,
                        guessing_polynomial_order_one,
                        guessing_polynomial_order_two)

def first_order_depolarizing_closed_form(p):
    """
    Function returning the closed-form first-order superswitch
    data of D_p: the outcome channel parameters eta1 (+++) and eta2
    (-++ and +-+) and the outcome weights r.
    NOTE: The weight of outcome --+ is 3 p**4 / 64.
    """
    r_plus_plus_plus = 1.0 - 9.0 / 64.0 * (5.0 * p ** 4 - 16.0 * p ** 3 + 16.0 * p ** 2)
    r_minus_plus_plus = 3.0 / 64.0 * (3.0 * p ** 4 - 8.0 * p ** 3 + 8.0 * p ** 2)
    return {'eta1': 1.0 - (99.0 * p ** 4 - 336.0 * p ** 3 + 432.0 * p ** 2 - 256.0 * p + 64.0) /
                    (-45.0 * p ** 4 + 144.0 * p ** 3 - 144.0 * p ** 2 + 64.0),
            'eta2': 1.0 - (-15.0 * p ** 2 + 24.0 * p - 8.0) / (9.0 * p ** 2 - 24.0 * p + 24.0),
            '+++': r_plus_plus_plus,
            '-++': r_minus_plus_plus,
            '+-+': r_minus_plus_plus,
            '--+': 3.0 * p ** 4 / 64.0}

# ===================
# Kraus-level Oracles
# ===================
@functools.lru_cache(maxsize=None)
def tomographic_states(dim):
    """
    Function returning a tomographically complete set of states
    (|0>, |1>, |+>, |+i> and, for dim=4, their tensor products) as an
    array with shape (dim**2, dim, dim).
    """
    kets = QUBIT_TOMOGRAPHY_KETS if dim == 2 else \
        tuple(np.kron(first, second) for first, second in itertools.product(QUBIT_TOMOGRAPHY_KETS, repeat=2))
    states = np.array([np.outer(ket, ket.conj()) for ket in kets])
    states.setflags(write=False)
    return states

def kraus_operators(ch):
    """
    Function returning the Kraus operators sqrt(p_i) P_i of a Pauli
    channel.
    """
    return np.sqrt(ch.probs)[:, None, None] * pauli_basis(ch.dim)

def _sandwich(operators, states):
    # sum over the leading operator axes of O rho O^dagger
    flat = operators.reshape((-1,) + operators.shape[-2:])
    return np.einsum('kab,sbc,kdc->sad', flat, states, flat.conj())

def kraus_switch_outputs(E, F, states):
    """
    Function returning the unnormalised outputs of the switch
    branches, (1/4) sum {E_i, F_j} rho {E_i, F_j}^dagger and the
    commutator analogue, for a stack of states.
    """
    first, second = kraus_operators(E), kraus_operators(F)
    forward = np.einsum('iab,jbc->ijac', first, second)
    backward = np.einsum('jab,ibc->ijac', second, first)
    return _sandwich(0.5 * (forward + backward), states), _sandwich(0.5 * (forward - backward), states)

def kraus_first_order_outputs(E, F, E_tilde, F_tilde, states):
    """
    Function returning the unnormalised outputs of the eight
    first-order superswitch branches (label s1 s2 s) obtained from
    the nested Kraus operators (1/2)[(1/2)[E_i,F_j]_s1, (1/2)[E~_k,F~_l]_s2]_s.
    """
    inner = []
    for left, right in ((E, F), (E_tilde, F_tilde)):
        first, second = kraus_operators(left), kraus_operators(right)
        forward = np.einsum('iab,jbc->ijac', first, second).reshape((-1, left.dim, left.dim))
        backward = np.einsum('jab,ibc->ijac', second, first).reshape((-1, left.dim, left.dim))
        inner.append({'+': 0.5 * (forward + backward), '-': 0.5 * (forward - backward)})
    outputs = dict()
    for s1, s2 in itertools.product(OUTCOME_SIGNS, repeat=2):
        forward = np.einsum('iab,jbc->ijac', inner[0][s1], inner[1][s2])
        backward = np.einsum('jab,ibc->ijac', inner[1][s2], inner[0][s1])
        outputs[s1 + s2 + '+'] = _sandwich(0.5 * (forward + backward), states)
        outputs[s1 + s2 + '-'] = _sandwich(0.5 * (forward - backward), states)
    return outputs

def update_rule_kraus_error(E, F):
    """
    Function returning the largest entrywise gap between the
    update rule and the Kraus-level switch outputs on a
    tomographically complete state set.
    """
    states = tomographic_states(E.dim)
    acom_term, com_term = update_terms(E.probs, F.probs)
    acom_oracle, com_oracle = kraus_switch_outputs(E, F, states)
    return max(float(np.max(np.abs(apply_channel_to_matrix(acom_term, states) - acom_oracle))),
               float(np.max(np.abs(apply_channel_to_matrix(com_term, states) - com_oracle))))

def first_order_kraus_error(E, F, E_tilde, F_tilde):
    """
    Function returning the largest entrywise gap between the
    labelled first-order outcomes and their Kraus-level oracle.
    """
    states = tomographic_states(E.dim)
    terms = first_order_terms(E, F, E_tilde, F_tilde)
    oracle = kraus_first_order_outputs(E, F, E_tilde, F_tilde, states)
    return max(float(np.max(np.abs(apply_channel_to_matrix(terms[label], states) - oracle[label])))
               for label in terms)

def random_pauli_channel(rng, dim):
    """
    Function returning a Pauli channel with a Dirichlet(1, ..., 1)
    distributed probability vector.
    """
    return PauliChannelCls(rng.dirichlet(np.ones(dim ** 2)))

# =======
# Classes
# =======
class VerificationSuiteCls:
    """
    Class that runs the closed-form and Kraus-level cross-checks of
    the switch engine and reports pass/fail per check.
    """
    # === Constructor ===
    def __init__(self, seed=2024, random_pairs_dim_two=100, random_pairs_dim_four=20):
        """
        Class constructor. Input arguments:
        -) seed: Seed of the generator drawing random channels.
        -) random_pairs_dim_two / random_pairs_dim_four: Number of
        random channel pairs used by the update rule oracle.
        """
        # Attribute initialization
        self.seed = seed
        self.random_pairs_dim_two = random_pairs_dim_two
        self.random_pairs_dim_four = random_pairs_dim_four
        self.results = list()

    # === Protected Method ===
    def _record(self, name, max_error, tolerance):
        result = CheckResultDataCls(name, bool(max_error <= tolerance), float(max_error), tolerance)
        self.results.append(result)
        print(f"--- Check {name}: {'PASS' if result.passed else 'FAIL'} (max error {max_error:.3e}, tolerance {tolerance:.1e}) ---")
        return result

    # === Protected Method ===
    def _check_switch_closed_form(self):
        ensemble = make_orthogonal_pair(2)
        errors = [abs(protocol_guessing(switch_pair(make_depolarizing_d2(p), make_depolarizing_d2(p)), ensemble).value
                      - switch_depolarization_closed_form(1.0, p, 2))
                  for p in np.linspace(0.0, 4.0 / 3.0, 200)]
        errors.append(abs(switch_depolarization_closed_form(1.0, 1.0, 2) - 5.0 / 8.0))
        self._record('switch_closed_form', max(errors), 1e-10)

    # === Protected Method ===
    def _check_guessing_polynomials(self):
        ensemble = make_orthogonal_pair(2)
        errors = []
        for p in np.linspace(0.0, 4.0 / 3.0, 50):
            values = superswitch_sequence(make_depolarizing_d2(p), 2, ensemble)
            errors.extend(abs(value - polynomial(p)) for value, polynomial in zip(values, GUESSING_POLYNOMIALS))
        self._record('guessing_polynomials', max(errors), 1e-9)

    # === Protected Method ===
    def _check_d43_headline(self):
        channel = make_depolarizing_d2(4.0 / 3.0)
        distribution = switch_pair(channel, channel)
        if distribution.size != 2:
            self._record('d43_headline', float('inf'), 1e-12)
            return
        identity_row = int(np.argmax(distribution.channel_matrix[:, 0]))
        identity = np.array([1.0, 0.0, 0.0, 0.0])
        errors = [abs(distribution.weights[identity_row] - 1.0 / 3.0),
                  float(np.max(np.abs(distribution.channel_matrix[identity_row] - identity))),
                  abs(distribution.weights[1 - identity_row] - 2.0 / 3.0),
                  float(np.max(np.abs(distribution.channel_matrix[1 - identity_row] - channel.probs))),
                  abs(protocol_guessing(distribution, make_orthogonal_pair(2)).value - 7.0 / 9.0)]
        self._record('d43_headline', max(errors), 1e-12)

    # === Protected Method ===
    def _check_update_rule_oracle(self):
        rng = np.random.default_rng(self.seed)
        for dim, pairs in ((2, self.random_pairs_dim_two), (4, self.random_pairs_dim_four)):
            errors = [update_rule_kraus_error(random_pauli_channel(rng, dim), random_pauli_channel(rng, dim))
                      for _ in range(pairs)]
            self._record(f'update_rule_oracle_dim_{dim}', max(errors), 1e-10)

    # === Protected Method ===
    def _check_first_order_oracle(self):
        rng = np.random.default_rng(self.seed + 1)
        errors = [first_order_kraus_error(*(random_pauli_channel(rng, 2) for _ in range(4))) for _ in range(10)]
        self._record('first_order_oracle', max(errors), 1e-10)

    # === Protected Method ===
    def _check_first_order_closed_form(self):
        errors = []
        for p in np.linspace(0.05, 4.0 / 3.0, 40):
            channel = make_depolarizing_d2(p)
            closed_form = first_order_depolarizing_closed_form(p)
            terms = first_order_terms(channel, channel, channel, channel)
            for label in ('+++', '-++', '+-+', '--+'):
                errors.append(abs(terms[label].sum() - closed_form[label]))
            for label, key in (('+++', 'eta1'), ('-++', 'eta2')):
                errors.append(abs(4.0 * terms[label][1] / terms[label].sum() - closed_form[key]))
        self._record('first_order_closed_form', max(errors), 1e-10)

    # === Protected Method ===
    def _check_multicopy(self):
        ensemble = make_orthogonal_pair(2)
        errors = [abs(multicopy_orthogonal_depolarization(p, n) -
                      multicopy_helstrom(ensemble, make_depolarizing_d2(p), n).value)
                  for n in range(1, 5) for p in np.linspace(0.0, 4.0 / 3.0, 50)]
        self._record('multicopy_formula', max(errors), 1e-10)

    # === Protected Method ===
    def _check_fixed_points(self):
        self._record('stationary_triples', max(recurrence_residual(triple) for triple in STATIONARY_TRIPLES), 1e-12)
        ensemble = make_orthogonal_pair(2)
        errors = [abs(limiting_guessing(STATIONARY_TRIPLES[1], ensemble) - (6.0 + math.sqrt(3.0)) / 12.0),
                  abs(limiting_guessing(STATIONARY_TRIPLES[2], ensemble) - 0.75),
                  abs(limiting_guessing(STATIONARY_TRIPLES[0], ensemble) - 1.0)]
        self._record('limiting_guessing', max(errors), 1e-12)

    # === Protected Method ===
    def _check_order_one_d43(self):
        channel = make_depolarizing_d2(4.0 / 3.0)
        value = protocol_guessing(superswitch(channel, 1), make_orthogonal_pair(2)).value
        self._record('order_one_d43', abs(value - 61.0 / 81.0), 1e-12)

    # === Method ===
    def run(self):
        """
        Method that runs every check and returns the list of
        CheckResultDataCls instances.
        """
        self.results = list()
        self._check_switch_closed_form()
        self._check_guessing_polynomials()
        self._check_d43_headline()
        self._check_order_one_d43()
        self._check_update_rule_oracle()
        self._check_first_order_oracle()
        self._check_first_order_closed_form()
        self._check_multicopy()
        self._check_fixed_points()
        return self.results

    # === Method ===
    def all_passed(self):
        """
        Method that returns True when every check run so far passed.
        """
        return all(result.passed for result in self.results)
