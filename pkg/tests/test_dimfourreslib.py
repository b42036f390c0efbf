# ========================================
# Import Python Modules (Standard Library)
# ========================================
import ast

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np
import pytest

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.analysisreslib import sweep
from superswitch.modules.dimfourreslib import make_delta, make_depolarizing_d4, make_ensemble, make_W
from superswitch.modules.discriminationreslib import helstrom_value, protocol_guessing, push_through
from superswitch.modules.paulicorereslib import compose, identity_channel
from superswitch.modules.switchenginereslib import superswitch_orders
from superswitch.utils.errorsreslib import ChannelDomainError

# ==============
# Test Functions
# ==============
def test_depolarizing_d4():
    channel = make_depolarizing_d4(16.0 / 15.0)
    assert channel.dim == 4 and abs(channel.identity_weight) < 1e-15
    assert np.allclose(make_depolarizing_d4(1.0).probs, np.full(16, 1.0 / 16.0))
    with pytest.raises(ChannelDomainError):
        make_depolarizing_d4(1.1)

def test_delta_reduces_to_depolarizing():
    assert make_delta(0.0, 0.0).is_close(make_depolarizing_d4(0.0))
    assert make_delta(1.0, 1.0).is_close(make_depolarizing_d4(1.0), tol=1e-15)
    with pytest.raises(ChannelDomainError):
        make_delta(1.5, 0.0)

def test_delta_tensor_order():
    channel = make_delta(0.4, 0.0)
    # The second qubit is left untouched: only entries 4a+0 are non-zero
    assert np.allclose(channel.probs.reshape((4, 4))[:, 1:], 0.0)
    assert np.allclose(channel.probs.reshape((4, 4))[:, 0], [0.7, 0.1, 0.1, 0.1])

def test_W_channel():
    channel = make_W(0.2, 0.3)
    assert abs(channel.probs.sum() - 1.0) < 1e-15
    assert abs(channel.identity_weight - 0.25) < 1e-15
    assert make_W(0.0, 0.0).is_close(identity_channel(4))
    with pytest.raises(ChannelDomainError):
        make_W(0.6, 0.6)

@pytest.mark.yaml_test_file(__file__, 'ensembles.yml')
def test_noiseless_helstrom_bounds(get_yaml_test_file_dict):
    for tag, expected in get_yaml_test_file_dict.items():
        ensemble = make_ensemble(tag)
        assert ensemble.dim == 4 and ensemble.size == 2
        assert abs(helstrom_value(ensemble) - ast.literal_eval(expected)) < 1e-12

def test_ensemble_tags():
    assert make_ensemble('Ω3').name == 'omega3'
    assert make_ensemble('OMEGA2').name == 'omega2'
    with pytest.raises(ChannelDomainError):
        make_ensemble('omega4')

def test_local_noise_on_one_qubit_keeps_omega1_distinguishable():
    assert abs(helstrom_value(push_through(make_ensemble('omega1'), make_delta(1.0, 0.0))) - 1.0) < 1e-12

def test_delta_composition_is_local():
    composed = compose(make_delta(0.2, 0.5), make_delta(0.4, 0.1))
    assert composed.is_close(make_delta(0.2 + 0.4 - 0.08, 0.5 + 0.1 - 0.05), tol=1e-12)

def test_superswitch_orders_dimension_four():
    ensemble = make_ensemble('omega2')
    for channel in (make_delta(0.7, 0.3), make_W(0.2, 0.3), make_depolarizing_d4(0.9)):
        for distribution in superswitch_orders(channel, 2):
            assert abs(distribution.weights.sum() - 1.0) < 1e-10
            value = protocol_guessing(distribution, ensemble).value
            assert 0.5 - 1e-12 <= value <= 1.0

def test_delta_differs_from_depolarizing_inside_the_square():
    channel = make_delta(0.5, 0.5)
    assert np.max(np.abs(channel.probs - make_depolarizing_d4(0.5).probs)) > 1e-6
    # Unequal off-diagonal entries rule out every D_s
    assert np.ptp(channel.probs[1:]) > 1e-6

def test_constructors_on_parameter_grid():
    for p in np.linspace(0.0, 4.0 / 3.0, 50):
        for q in np.linspace(0.0, 4.0 / 3.0, 50):
            channel = make_delta(p, q)
            assert abs(channel.probs.sum() - 1.0) < 1e-12 and np.all(channel.probs >= 0.0)
    for s in np.linspace(0.0, 16.0 / 15.0, 50):
        assert abs(make_depolarizing_d4(s).probs.sum() - 1.0) < 1e-12
    for p in np.linspace(0.0, 1.0, 50):
        for q in np.linspace(0.0, 1.0, 50):
            if p + q <= 1.0 + 1e-12:
                channel = make_W(p, q)
                assert abs(channel.probs.sum() - 1.0) < 1e-12 and np.all(channel.probs >= 0.0)
            elif p + q > 1.0 + 1e-6:
                with pytest.raises(ChannelDomainError):
                    make_W(p, q)

@pytest.mark.slow
def test_sweeps_of_two_qubit_families():
    protocols = ('channel', 'switch', 'ss1', 'ss2')
    delta_table = sweep('delta', protocols, make_ensemble('omega1'),
                        {'p': (0.0, 4.0 / 3.0, 50), 'q': (0.0, 4.0 / 3.0, 50)}, max_order=2)
    w_table = sweep('W', protocols, make_ensemble('omega2'), {'p': (0.0, 1.0, 50), 'q': (0.0, 1.0, 50)}, max_order=2)
    assert len(delta_table.rows) == 2500
    assert 1250 <= len(w_table.rows) < 2500
    for table in (delta_table, w_table):
        for protocol in protocols:
            values = table.column(protocol)
            assert np.all(values >= 0.5 - 1e-12) and np.all(values <= 1.0 + 1e-12)
