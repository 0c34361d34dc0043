"""Kraus channels, the Choi representation, and the acceleration channel."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eur.channels import (
    UnruhParams,
    amplitude_damping,
    apply,
    apply_to_memory,
    choi,
    choi_output_marginal,
    kraus_from_choi,
    unruh_channel,
    unruh_r,
    validate_kraus,
)
from eur.linalg import partial_trace
from eur.states import validate_density_matrix
from helpers import (
    I2,
    PHI_PLUS,
    SX,
    SY,
    SZ,
    TOMO_INPUTS,
    apply_kraus,
    proj,
    random_choi,
    random_cptp_kraus,
    random_density_matrix,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
r_values = st.floats(0.0, np.pi / 4, allow_nan=False)


def expected_acceleration_choi(r: float) -> np.ndarray:
    c, s = np.cos(r), np.sin(r)
    return np.array(
        [[c * c, 0, 0, c], [0, s * s, 0, 0], [0, 0, 0, 0], [c, 0, 0, 1]],
        dtype=complex,
    )


def test_unruh_r_at_zero_acceleration_is_zero():
    assert unruh_r(UnruhParams(a=0.0, omega=0.1)) == 0.0


def test_unruh_r_saturates_at_high_acceleration():
    r = unruh_r(UnruhParams(a=1e9, omega=0.1))
    assert np.cos(r) == pytest.approx(1 / np.sqrt(2), abs=1e-9)
    assert r <= np.pi / 4


def test_unruh_r_known_ratio():
    # a = 2*pi*omega/ln 2 makes the exponential exactly 1/2
    omega = 0.1
    a = 2 * np.pi * omega / np.log(2)
    assert np.cos(unruh_r(UnruhParams(a=a, omega=omega))) == pytest.approx(
        np.sqrt(2.0 / 3.0), abs=1e-12
    )


@given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6), st.floats(1.01, 10.0))
@settings(max_examples=60, deadline=None)
def test_unruh_r_monotonic(a, omega, factor):
    base = unruh_r(UnruhParams(a=a, omega=omega))
    assert unruh_r(UnruhParams(a=a * factor, omega=omega)) >= base
    assert unruh_r(UnruhParams(a=a, omega=omega * factor)) <= base


def test_unruh_params_validation():
    with pytest.raises(ValueError):
        UnruhParams(a=-1.0, omega=0.1)
    with pytest.raises(ValueError):
        UnruhParams(a=1.0, omega=0.0)
    with pytest.raises(ValueError):
        UnruhParams(a=np.inf, omega=0.1)


def test_unruh_channel_at_zero_is_identity():
    k1, k2 = unruh_channel(0.0)
    assert np.allclose(k1, I2, atol=0.0)
    assert np.allclose(k2, 0.0, atol=0.0)


@given(r_values)
@settings(max_examples=50, deadline=None)
def test_unruh_channel_is_complete(r):
    validate_kraus(unruh_channel(r))


def test_unruh_channel_rejects_out_of_range():
    with pytest.raises(ValueError):
        unruh_channel(-0.01)
    with pytest.raises(ValueError):
        unruh_channel(1.0)


def test_unruh_channel_splits_ground_state_evenly_at_max_mixing():
    out = apply(unruh_channel(np.pi / 4), np.diag([1.0, 0.0]))
    assert np.allclose(out, np.diag([0.5, 0.5]), atol=1e-12)


def test_unruh_channel_leaves_excited_state_invariant():
    for r in (0.2, 0.5, np.pi / 4):
        out = apply(unruh_channel(r), np.diag([0.0, 1.0]))
        assert np.allclose(out, np.diag([0.0, 1.0]), atol=1e-12)


def test_unruh_channel_damps_ground_state():
    r = 0.3
    out = apply(unruh_channel(r), np.diag([1.0, 0.0]))
    assert np.allclose(out, np.diag([np.cos(r) ** 2, np.sin(r) ** 2]), atol=1e-12)


def test_amplitude_damping_endpoints():
    e0, e1 = amplitude_damping(0.0)
    assert np.allclose(e0, I2, atol=0.0) and np.allclose(e1, 0.0, atol=0.0)
    rng = np.random.default_rng(8)
    rho = random_density_matrix(rng, 2)
    assert np.allclose(apply(amplitude_damping(1.0), rho), np.diag([1.0, 0.0]), atol=1e-12)
    with pytest.raises(ValueError):
        amplitude_damping(1.5)


@given(seeds, r_values)
@settings(max_examples=60, deadline=None)
def test_unruh_equals_conjugated_amplitude_damping(seed, r):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng, 2)
    via_unruh = apply(unruh_channel(r), rho)
    via_ad = SX @ apply(amplitude_damping(np.sin(r) ** 2), SX @ rho @ SX) @ SX
    assert np.max(np.abs(via_unruh - via_ad)) < 1e-10


def test_apply_identity_channel_is_identity_map():
    rng = np.random.default_rng(9)
    rho = random_density_matrix(rng, 2)
    assert np.allclose(apply([I2], rho), rho, atol=0.0)
    with pytest.raises(ValueError):
        apply([I2], np.eye(4))


@given(seeds, r_values)
@settings(max_examples=50, deadline=None)
def test_apply_preserves_density_matrix_properties(seed, r):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng, 2)
    out = apply(unruh_channel(r), rho)
    assert abs(np.trace(out) - 1.0) < 1e-12
    assert np.max(np.abs(out - out.conj().T)) < 1e-12
    validate_density_matrix(out)


def test_apply_to_memory_identity_channel():
    rng = np.random.default_rng(10)
    rho = random_density_matrix(rng, 4)
    assert np.allclose(apply_to_memory([I2], rho), rho, atol=0.0)
    with pytest.raises(ValueError):
        apply_to_memory([I2], np.eye(2))


@pytest.mark.parametrize("r", [0.0, 0.3, np.pi / 4])
def test_apply_to_memory_on_maximal_entanglement_gives_half_choi(r):
    out = apply_to_memory(unruh_channel(r), proj(PHI_PLUS))
    assert np.max(np.abs(out - expected_acceleration_choi(r) / 2)) < 1e-12


@given(seeds, r_values)
@settings(max_examples=50, deadline=None)
def test_apply_to_memory_is_local(seed, r):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng, 4)
    ch = unruh_channel(r)
    out = apply_to_memory(ch, rho)
    # probe marginal untouched, memory marginal evolves under the channel
    assert np.max(np.abs(
        partial_trace(out, keep=[0], dims=[2, 2]) - partial_trace(rho, keep=[0], dims=[2, 2])
    )) < 1e-12
    assert np.max(np.abs(
        partial_trace(out, keep=[1], dims=[2, 2]) - apply(ch, partial_trace(rho, keep=[1], dims=[2, 2]))
    )) < 1e-12


def test_choi_of_identity_channel():
    assert np.allclose(choi([I2]), 2 * proj(PHI_PLUS), atol=0.0)


@pytest.mark.parametrize("r", [0.0, np.pi / 8, np.pi / 4])
def test_choi_of_acceleration_channel_matches_closed_form(r):
    assert np.max(np.abs(choi(unruh_channel(r)) - expected_acceleration_choi(r))) < 1e-12


def test_choi_of_depolarizing_channel():
    ops = [0.5 * I2, 0.5 * SX, 0.5 * SY, 0.5 * SZ]
    assert np.allclose(choi(ops), np.eye(4) / 2, atol=1e-15)


@given(r_values)
@settings(max_examples=40, deadline=None)
def test_choi_invariants(r):
    c = choi(unruh_channel(r))
    assert abs(np.trace(c) - 2.0) < 1e-12
    assert np.max(np.abs(choi_output_marginal(c) - I2)) < 1e-12
    assert np.linalg.eigvalsh(c)[0] > -1e-12


def test_kraus_from_choi_identity():
    ops = kraus_from_choi(2 * proj(PHI_PLUS))
    assert len(ops) == 1
    rng = np.random.default_rng(12)
    rho = random_density_matrix(rng, 2)
    assert np.max(np.abs(apply(ops, rho) - rho)) < 1e-12


def test_kraus_from_choi_depolarizing_action():
    ops = kraus_from_choi(np.eye(4) / 2)
    rng = np.random.default_rng(13)
    for _ in range(5):
        rho = random_density_matrix(rng, 2)
        assert np.max(np.abs(apply(ops, rho) - I2 / 2)) < 1e-12


@pytest.mark.parametrize("r", np.linspace(0.0, np.pi / 4, 10))
def test_kraus_from_choi_round_trip_acceleration(r):
    original = unruh_channel(r)
    rebuilt = kraus_from_choi(choi(original))
    for rho in TOMO_INPUTS:
        assert np.max(np.abs(apply(rebuilt, rho) - apply(original, rho))) < 1e-10


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_kraus_from_choi_round_trip_random_channels(seed):
    rng = np.random.default_rng(seed)
    original = random_cptp_kraus(rng)
    rebuilt = kraus_from_choi(choi(original))
    for rho in TOMO_INPUTS:
        assert np.max(np.abs(apply(rebuilt, rho) - apply_kraus(original, rho))) < 1e-10


def test_kraus_from_choi_rejects_non_positive():
    bad = np.diag([1.5, 0.5, 0.5, -0.5]).astype(complex)
    with pytest.raises(ValueError, match="not completely positive"):
        kraus_from_choi(bad)


def test_kraus_from_choi_rejects_non_trace_preserving():
    # positive, trace 2, but the output marginal is not the identity
    bad = np.diag([2.0, 0.0, 0.0, 0.0]).astype(complex)
    with pytest.raises(ValueError, match="trace preserving"):
        kraus_from_choi(bad)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_random_choi_generator_is_cptp(seed):
    # sanity of the test infrastructure itself
    rng = np.random.default_rng(seed)
    c = random_choi(rng)
    assert abs(np.trace(c) - 2.0) < 1e-10
    assert np.linalg.eigvalsh(c)[0] > -1e-10
    assert np.max(np.abs(choi_output_marginal(c) - I2)) < 1e-10
