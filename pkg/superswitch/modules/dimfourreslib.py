# ========================================
# Import Python Modules (Standard Library)
# ========================================
import math

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.paulicorereslib import (EnsembleCls, PauliChannelCls, check_interval,
                                                 make_depolarizing_d2, state_from_ket)
from superswitch.utils.errorsreslib import ChannelDomainError

# =================
# Module Parameters
# =================
# Computational basis order |00>, |01>, |10>, |11>
KETS = {'00': np.array([1.0, 0.0, 0.0, 0.0]),
        '11': np.array([0.0, 0.0, 0.0, 1.0]),
        'phi+': np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0),
        'phi-': np.array([1.0, 0.0, 0.0, -1.0]) / math.sqrt(2.0)}
ENSEMBLE_KETS = {'omega1': ('00', '11'),
                 'omega2': ('phi+', 'phi-'),
                 'omega3': ('00', 'phi-')}

# =========
# Functions
# =========
def make_depolarizing_d4(s):
    """
    Function returning the two-qubit depolarisation channel D_s,
    s in [0, 16/15].
    """
    check_interval('s', s, 0.0, 16.0 / 15.0)
    return PauliChannelCls([1.0 - 15.0 * s / 16.0] + [s / 16.0] * 15)

def make_delta(p, q):
    """
    Function returning Delta_{p,q} = D_p (first qubit) tensor
    D_q (second qubit), p and q in [0, 4/3]. The entry with index
    4a+b is the product of the qubit probabilities a and b.
    """
    first = make_depolarizing_d2(p)
    second = make_depolarizing_d2(q)
    return PauliChannelCls(np.outer(first.probs, second.probs).ravel())

def make_W(p, q):
    """
    Function returning the correlated two-qubit channel W_{p,q},
    p, q >= 0 and p + q <= 1.
    """
    check_interval('p', p, 0.0, 1.0)
    check_interval('q', q, 0.0, 1.0)
    check_interval('p + q', p + q, 0.0, 1.0)
    r = 1.0 - p - q
    return PauliChannelCls([r * r, 0.0, r * q, r * p,
                            0.0, 0.0, 0.0, 0.0,
                            p * r, 0.0, p * q, p * p,
                            q * r, 0.0, q * q, p * q])

def make_ensemble(tag):
    """
    Function returning one of the named equal-prior two-qubit
    ensembles:
    -) omega1: |00>, |11>
    -) omega2: Phi+, Phi-
    -) omega3: |00>, Phi-
    """
    key = str(tag).lower().replace('ω', 'omega').replace('Ω', 'omega')
    if key not in ENSEMBLE_KETS:
        raise ChannelDomainError(f'Inconsistency detected - Unknown ensemble {tag!r}, expected one of {sorted(ENSEMBLE_KETS)}')
    return EnsembleCls([0.5, 0.5], [state_from_ket(KETS[label]) for label in ENSEMBLE_KETS[key]], name=key)
