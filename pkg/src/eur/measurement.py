"""Projective measurements on the probed qubit and what the memory learns.

Measurements only ever act on Alice's (most significant) qubit; the
memory is conditioned, never measured. This asymmetry is baked into the
API on purpose so subsystem-convention bugs cannot arise.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import partial_trace, tensor
from .states import memory_marginal, vn_entropy

ORTHONORMALITY_ATOL = 1e-12
PROBABILITY_FLOOR = 1e-12

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class ProjectiveObservable:
    """A qubit observable named by its orthonormal eigenbasis.

    `basis` is a 2x2 complex matrix whose columns are the eigenstates.
    Only the basis enters any computed quantity, so eigenvalues and
    global column phases are irrelevant by construction.
    """

    name: str
    basis: np.ndarray

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=complex)
        if basis.shape != (2, 2):
            raise ValueError(f"basis must be 2x2 with eigenstate columns, got shape {basis.shape}")
        gram = basis.conj().T @ basis
        deviation = float(np.max(np.abs(gram - np.eye(2))))
        if deviation > ORTHONORMALITY_ATOL:
            raise ValueError(f"basis of {self.name!r} is not orthonormal (deviation {deviation:.3e})")
        object.__setattr__(self, "basis", basis)

    def eigenstate(self, i: int) -> np.ndarray:
        return self.basis[:, i]

    def projector(self, i: int) -> np.ndarray:
        v = self.basis[:, i]
        return np.outer(v, v.conj())


def pauli_observable(axis: str) -> ProjectiveObservable:
    """Eigenbasis of a Pauli operator, +1 eigenvector first."""
    axis = axis.lower()
    if axis == "z":
        basis = np.array([[1, 0], [0, 1]], dtype=complex)
    elif axis == "x":
        basis = np.array([[1, 1], [1, -1]], dtype=complex) / _SQRT2
    elif axis == "y":
        basis = np.array([[1, 1], [1j, -1j]], dtype=complex) / _SQRT2
    else:
        raise ValueError(f"unknown Pauli axis {axis!r}; expected 'x', 'y' or 'z'")
    return ProjectiveObservable(f"sigma_{axis}", basis)


def complementarity(q: ProjectiveObservable, r: ProjectiveObservable) -> float:
    """Largest squared overlap between eigenstates of the two observables.

    Ranges from 1/2 (mutually unbiased bases) to 1 (identical bases).
    """
    overlaps = np.abs(q.basis.conj().T @ r.basis) ** 2
    return float(overlaps.max())


def _as_two_qubit(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit state, got shape {rho.shape}")
    return rho


def post_measurement_state(obs: ProjectiveObservable, rho: np.ndarray) -> np.ndarray:
    """Dephase the probed qubit in the observable's eigenbasis.

    Returns sum_i (P_i (x) I) rho (P_i (x) I): the classical-quantum
    state held once the outcome is recorded but not read out. Block
    diagonal in the measurement basis, and idempotent for a fixed
    observable.
    """
    rho = _as_two_qubit(rho)
    out = np.zeros((4, 4), dtype=complex)
    for i in (0, 1):
        lifted = tensor(obs.projector(i), np.eye(2))
        out += lifted @ rho @ lifted
    return out


def measurement_ensemble(obs: ProjectiveObservable, rho: np.ndarray):
    """Outcome probabilities with the memory states conditioned on them.

    Returns [(p_0, rho_B|0), (p_1, rho_B|1)]. An outcome whose probability
    is at or below PROBABILITY_FLOOR carries None in place of a
    conditional state; the normalizing division is suppressed rather than
    amplified into noise. The probability-weighted conditional states sum
    back to the memory marginal.
    """
    rho = _as_two_qubit(rho)
    ensemble = []
    for i in (0, 1):
        lifted = tensor(obs.projector(i), np.eye(2))
        unnormalized = lifted @ rho @ lifted
        p = float(np.trace(unnormalized).real)
        if p <= PROBABILITY_FLOOR:
            ensemble.append((max(p, 0.0), None))
        else:
            conditional = partial_trace(unnormalized, keep=[1], dims=[2, 2]) / p
            ensemble.append((p, conditional))
    return ensemble


def holevo_quantity(obs: ProjectiveObservable, rho: np.ndarray) -> float:
    """Accessible information about the outcome stored in the memory, in bits.

    I(O;B) = S(rho_B) - sum_i p_i S(rho_B|i); zero-probability outcomes
    contribute nothing and are skipped.
    """
    rho = _as_two_qubit(rho)
    result = vn_entropy(memory_marginal(rho))
    for p, conditional in measurement_ensemble(obs, rho):
        if conditional is not None:
            result -= p * vn_entropy(conditional)
    return result
