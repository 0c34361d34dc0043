"""Qubit channels in Kraus form, and the acceleration-induced noise channel.

A channel is a list of 2x2 complex Kraus operators K_j satisfying the
trace-preservation condition sum_j K_j^dag K_j = I. The Choi matrix uses
the unnormalized convention C = sum_ij |i><j| (x) E(|i><j|) with the
channel *input* index as the most significant subsystem, so tr C = 2 and
tracing out the channel output leaves the identity.
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eigensystem, partial_trace, tensor

COMPLETENESS_ATOL = 1e-10
KRAUS_WEIGHT_CUTOFF = 1e-12
R_MAX = math.pi / 4


@dataclass(frozen=True)
class UnruhParams:
    """Physical inputs of the accelerated-memory channel.

    Natural units (c = hbar = k_B = 1); only the ratio omega/a matters.

    Attributes:
        a: proper acceleration of the memory holder, >= 0
        omega: frequency of the detected Dirac field mode, > 0
    """

    a: float
    omega: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a >= 0.0):
            raise ValueError(f"acceleration must be finite and >= 0, got {self.a}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"mode frequency must be finite and > 0, got {self.omega}")


def unruh_r(params: UnruhParams) -> float:
    """Mixing angle r in [0, pi/4] for a uniformly accelerated observer.

    cos r = (1 + exp(-2 pi omega / a))^(-1/2). The formula divides by the
    acceleration, so a = 0 is defined by its limit r = 0 (the identity
    channel); a -> infinity approaches r = pi/4. Monotonically increasing
    in a and decreasing in omega.
    """
    if params.a == 0.0:
        return 0.0
    return math.acos(1.0 / math.sqrt(1.0 + math.exp(-2.0 * math.pi * params.omega / params.a)))


def unruh_channel(r: float) -> list[np.ndarray]:
    """Kraus pair of the fermionic acceleration channel at mixing angle r.

    K1 = [[cos r, 0], [0, 1]],  K2 = [[0, 0], [sin r, 0]]

    The channel leaks |0> toward |1> with probability sin^2 r and leaves
    |1> strictly invariant; at r = 0 it is the identity.
    """
    if not 0.0 <= r <= R_MAX:
        raise ValueError(f"r must lie in [0, pi/4], got {r}")
    k1 = np.array([[math.cos(r), 0.0], [0.0, 1.0]], dtype=complex)
    k2 = np.array([[0.0, 0.0], [math.sin(r), 0.0]], dtype=complex)
    return [k1, k2]


def amplitude_damping(gamma: float) -> list[np.ndarray]:
    """Standard amplitude-damping Kraus pair with decay probability gamma.

    E0 = [[1, 0], [0, sqrt(1-gamma)]],  E1 = [[0, sqrt(gamma)], [0, 0]]

    Decays |1> toward |0>; conjugating input and output by sigma_x turns
    it into the acceleration channel with gamma = sin^2 r.
    """
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    e0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - gamma)]], dtype=complex)
    e1 = np.array([[0.0, math.sqrt(gamma)], [0.0, 0.0]], dtype=complex)
    return [e0, e1]


def validate_kraus(channel: list[np.ndarray], atol: float = COMPLETENESS_ATOL) -> None:
    """Raise ValueError unless sum_j K_j^dag K_j = I within `atol`."""
    if not channel:
        raise ValueError("channel has no Kraus operators")
    total = np.zeros((2, 2), dtype=complex)
    for k in channel:
        k = np.asarray(k, dtype=complex)
        if k.shape != (2, 2):
            raise ValueError(f"Kraus operator has shape {k.shape}, expected (2, 2)")
        total += k.conj().T @ k
    deviation = float(np.max(np.abs(total - np.eye(2))))
    if deviation > atol:
        raise ValueError(
            f"Kraus family is not trace preserving: max |sum K^dag K - I| = {deviation:.3e}"
        )


def apply(channel: list[np.ndarray], rho: np.ndarray) -> np.ndarray:
    """Act with a Kraus channel on a single-qubit operator: sum_j K_j rho K_j^dag."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {rho.shape}")
    out = np.zeros((2, 2), dtype=complex)
    for k in channel:
        out += k @ rho @ k.conj().T
    return out


def apply_to_memory(channel: list[np.ndarray], rho: np.ndarray) -> np.ndarray:
    """Act with a channel on the memory (least significant) half of a two-qubit state.

    Returns sum_j (I (x) K_j) rho (I (x) K_j^dag); the probed qubit's
    marginal is untouched.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    out = np.zeros((4, 4), dtype=complex)
    for k in channel:
        lifted = tensor(np.eye(2), k)
        out += lifted @ rho @ lifted.conj().T
    return out


def choi(channel: list[np.ndarray]) -> np.ndarray:
    """Choi matrix C = sum_ij |i><j| (x) E(|i><j|), input index first.

    tr C = 2 for a qubit channel; complete positivity shows up as C >= 0
    and trace preservation as tr_out C = I.
    """
    c = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            unit = np.zeros((2, 2), dtype=complex)
            unit[i, j] = 1.0
            c += tensor(unit, apply(channel, unit))
    return c


def kraus_from_choi(c: np.ndarray, cutoff: float = KRAUS_WEIGHT_CUTOFF) -> list[np.ndarray]:
    """Extract a Kraus family from a Choi matrix by eigendecomposition.

    Each eigenpair (lam, v) with lam > `cutoff` becomes an operator via
    K[m, i] = sqrt(lam) * v[2*i + m] (input index i, output index m,
    matching the `choi` convention). Kraus families are unique only up to
    an isometric remixing, so two representations of the same channel
    must be compared on their action, not operator by operator.

    Raises ValueError for eigenvalues below -1e-10 (not completely
    positive) and when the reconstructed family fails the completeness
    check (input was not trace preserving).
    """
    c = np.asarray(c, dtype=complex)
    if c.shape != (4, 4):
        raise ValueError(f"expected a 4x4 Choi matrix, got shape {c.shape}")
    eigenvalues, eigenvectors = hermitian_eigensystem(c)
    if float(eigenvalues[0]) < -1e-10:
        raise ValueError(
            f"not completely positive: Choi eigenvalue {float(eigenvalues[0]):.3e}"
        )
    channel = []
    for lam, v in zip(eigenvalues, eigenvectors.T):
        if lam > cutoff:
            channel.append(math.sqrt(float(lam)) * v.reshape(2, 2).T)
    validate_kraus(channel)
    return channel


def choi_output_marginal(c: np.ndarray) -> np.ndarray:
    """Trace the channel-output subsystem out of a Choi matrix.

    Equals the identity exactly when the channel is trace preserving.
    """
    return partial_trace(c, keep=[0], dims=[2, 2])
