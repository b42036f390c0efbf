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
from superswitch.modules.paulicorereslib import (BlochVectorCls, DensityMatrixCls, PauliChannelCls, apply_channel,
                                                 apply_channel_to_matrix, bloch_action, bloch_of, compose,
                                                 compose_power, identity_channel, make_bit_phase_flip,
                                                 make_depolarizing_d2, make_pauli_channel, make_Q_channel,
                                                 make_Qtilde_channel, mix_channels, pauli_basis, pauli_labels,
                                                 pauli_product_tables, state_from_ket, state_of)
from superswitch.utils.errorsreslib import ChannelDomainError, DimensionMismatchError

# ================
# Module Variables
# ================
CONSTRUCTORS = {'depolarizing2': make_depolarizing_d2,
                'bitphase': make_bit_phase_flip,
                'Q': make_Q_channel,
                'Qtilde': make_Qtilde_channel}

# =========
# Functions
# =========
def random_state(rng, dim):
    ginibre = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    entries = ginibre @ ginibre.conj().T
    return DensityMatrixCls(entries / np.trace(entries).real)

# ========
# Fixtures
# ========
@pytest.fixture
def random_channels(rng):
    return [PauliChannelCls(rng.dirichlet(np.ones(4))) for _ in range(20)]

# ==============
# Test Functions
# ==============
@pytest.mark.yaml_test_file(__file__, 'channel_constructors.yml')
def test_channel_constructors(get_yaml_test_file_dict):
    for family, cases in get_yaml_test_file_dict.items():
        for case in cases:
            parameters = [ast.literal_eval(elem) for elem in case['parameters']]
            expected = np.array([ast.literal_eval(elem) for elem in case['probs']])
            assert np.allclose(CONSTRUCTORS[family](*parameters).probs, expected, atol=1e-12)

def test_constructors_reject_parameters_out_of_range():
    with pytest.raises(ChannelDomainError):
        make_depolarizing_d2(1.5)
    with pytest.raises(ChannelDomainError):
        make_bit_phase_flip(-0.1)
    with pytest.raises(ChannelDomainError):
        make_Q_channel(0.6, 0.6)
    with pytest.raises(ChannelDomainError):
        make_Qtilde_channel(0.4)

def test_channel_validation():
    # Rounding noise is clamped to zero
    channel = PauliChannelCls([1.0 + 1e-13, -1e-13, 0.0, 0.0])
    assert channel.probs[1] == 0.0
    with pytest.raises(ChannelDomainError):
        PauliChannelCls([1.1, -0.1, 0.0, 0.0])
    with pytest.raises(ChannelDomainError):
        PauliChannelCls([0.5, 0.2, 0.2, 0.2])
    with pytest.raises(DimensionMismatchError):
        PauliChannelCls([0.2] * 5)
    with pytest.raises(DimensionMismatchError):
        PauliChannelCls([0.25] * 4, dim=4)

def test_channel_is_immutable():
    channel = make_depolarizing_d2(0.5)
    with pytest.raises(ValueError):
        channel.probs[0] = 0.0

def test_channel_as_dict():
    assert make_bit_phase_flip(0.25).as_dict() == {'I': 0.75, 'X': 0.0, 'Y': 0.25, 'Z': 0.0}
    assert pauli_labels(4)[4 * 1 + 3] == 'XZ'

def test_pauli_basis_tensor_order():
    basis_two, basis_four = pauli_basis(2), pauli_basis(4)
    for a in range(4):
        for b in range(4):
            assert np.allclose(basis_four[4 * a + b], np.kron(basis_two[a], basis_two[b]))

def test_pauli_product_tables():
    product_index, commuting = pauli_product_tables(2)
    assert product_index[1, 2] == 3 and product_index[2, 3] == 1 and product_index[3, 1] == 2
    assert not commuting[1, 2] and commuting[1, 1] and commuting[0, 3]
    product_index, commuting = pauli_product_tables(4)
    # XX and ZZ commute, XI and ZI do not
    assert commuting[5, 15] and not commuting[4, 12]
    assert product_index[5, 15] == 10

def test_apply_channel_matches_kraus_sum(random_channels):
    rho = state_from_ket([0.6, 0.8j])
    basis = pauli_basis(2)
    for channel in random_channels:
        expected = sum(prob * elem @ rho.entries @ elem.conj().T for prob, elem in zip(channel.probs, basis))
        output = apply_channel(channel, rho)
        assert np.allclose(output.entries, expected, atol=1e-12)
        assert abs(np.trace(output.entries) - 1.0) < 1e-12

def test_apply_channel_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        apply_channel(make_depolarizing_d2(0.5), state_from_ket([1.0, 0.0, 0.0, 0.0]))

def test_compose_depolarizing():
    # Bloch factors multiply: (1 - p)(1 - q) = 1 - (p + q - pq)
    for p, q in ((0.2, 0.3), (1.0, 0.5), (4.0 / 3.0, 4.0 / 3.0)):
        assert compose(make_depolarizing_d2(p), make_depolarizing_d2(q)).is_close(
            make_depolarizing_d2(p + q - p * q), tol=1e-12)

def test_compose_is_commutative_and_associative(random_channels):
    first, second, third = random_channels[:3]
    assert compose(first, second).is_close(compose(second, first), tol=1e-14)
    assert compose(compose(first, second), third).is_close(compose(first, compose(second, third)), tol=1e-14)

def test_compose_matches_sequential_application(rng):
    for dim in (2, 4):
        states = [random_state(rng, dim) for _ in range(10)]
        for _ in range(200):
            first = PauliChannelCls(rng.dirichlet(np.ones(dim ** 2)))
            second = PauliChannelCls(rng.dirichlet(np.ones(dim ** 2)))
            composed = compose(first, second)
            for rho in states:
                sequential = apply_channel(first, apply_channel(second, rho))
                assert np.allclose(apply_channel(composed, rho).entries, sequential.entries, atol=1e-12)

def test_apply_channel_preserves_states(rng):
    for dim in (2, 4):
        for _ in range(100):
            channel = PauliChannelCls(rng.dirichlet(np.full(dim ** 2, 0.3)))
            output = apply_channel_to_matrix(channel.probs, random_state(rng, dim).entries)
            assert np.allclose(output, output.conj().T, atol=1e-12)
            assert abs(np.trace(output) - 1.0) < 1e-12
            assert np.linalg.eigvalsh(output).min() >= -1e-10

def test_compose_power(random_channels):
    channel = random_channels[0]
    assert compose_power(channel, 0).is_close(identity_channel(2))
    assert compose_power(channel, 3).is_close(compose(channel, compose(channel, channel)), tol=1e-14)
    # Bit-phase flip: the Y weight of the n-th power is (1 - (1 - 2p)^n) / 2
    assert abs(compose_power(make_bit_phase_flip(0.1), 4).probs[2] - 0.5 * (1.0 - 0.8 ** 4)) < 1e-14
    with pytest.raises(ChannelDomainError):
        compose_power(channel, -1)

def test_mix_channels():
    mixed = mix_channels([0.25, 0.75], [identity_channel(2), make_depolarizing_d2(4.0 / 3.0)])
    assert mixed.is_close(make_depolarizing_d2(1.0), tol=1e-14)
    with pytest.raises(DimensionMismatchError):
        mix_channels([0.5, 0.5], [identity_channel(2), identity_channel(4)])

def test_bloch_round_trip(rng):
    for _ in range(100):
        r = rng.normal(size=3)
        r *= rng.random() / np.linalg.norm(r)
        assert np.allclose(bloch_of(state_of(BlochVectorCls(r))).r, r, atol=1e-12)

def test_bit_phase_flip_bloch_action():
    # p X rho X + (1 - p) Z rho Z maps r to (-(1 - 2p) r1, -r2, (1 - 2p) r3)
    for p in (0.0, 0.3, 0.5, 0.9):
        channel = make_pauli_channel([0.0, p, 0.0, 1.0 - p])
        assert np.allclose(bloch_action(channel), [-(1.0 - 2.0 * p), -1.0, 1.0 - 2.0 * p], atol=1e-15)
        for axis in range(3):
            for sign in (1.0, -1.0):
                r = sign * np.eye(3)[axis]
                expected = np.array([-(1.0 - 2.0 * p) * r[0], -r[1], (1.0 - 2.0 * p) * r[2]])
                output = bloch_of(apply_channel(channel, state_of(BlochVectorCls(r))))
                assert np.allclose(output.r, expected, atol=1e-12)

def test_bloch_action(random_channels):
    assert np.allclose(bloch_action(make_depolarizing_d2(0.4)), [0.6, 0.6, 0.6])
    rho = state_of(BlochVectorCls([0.3, -0.4, 0.5]))
    for channel in random_channels:
        expected = bloch_action(channel) * np.array([0.3, -0.4, 0.5])
        assert np.allclose(bloch_of(apply_channel(channel, rho)).r, expected, atol=1e-12)

def test_density_matrix_validation():
    with pytest.raises(ChannelDomainError):
        DensityMatrixCls([[0.5, 0.5], [0.0, 0.5]])
    with pytest.raises(ChannelDomainError):
        DensityMatrixCls([[0.7, 0.0], [0.0, 0.7]])
    with pytest.raises(ChannelDomainError):
        DensityMatrixCls([[1.5, 0.0], [0.0, -0.5]])
    with pytest.raises(DimensionMismatchError):
        DensityMatrixCls(np.eye(3) / 3.0)
    with pytest.raises(ChannelDomainError):
        BlochVectorCls([1.0, 1.0, 0.0])

def test_make_pauli_channel_dimension_four():
    channel = make_pauli_channel(np.full(16, 1.0 / 16.0))
    assert channel.dim == 4 and abs(channel.identity_weight - 1.0 / 16.0) < 1e-15
