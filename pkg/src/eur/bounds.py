"""Uncertainty quantities for two measurements on a qubit with a quantum memory.

All quantities are in bits. The measured uncertainty is the sum of the
two post-measurement conditional entropies; it is bounded below both by
log2(1/c) + S(A|B) and by the tighter variant that adds max(0, delta),
where delta trades total correlations against the two Holevo quantities.
"""

import math
from dataclasses import dataclass

import numpy as np

from .measurement import (
    ProjectiveObservable,
    complementarity,
    holevo_quantity,
    post_measurement_state,
)
from .states import memory_marginal, probe_marginal, vn_entropy

HERMITICITY_ATOL = 1e-10
NORM_ATOL = 1e-12


def conditional_entropy(rho: np.ndarray) -> float:
    """S(A|B) = S(AB) - S(B) in bits; negative iff the state is entangled enough."""
    return vn_entropy(rho) - vn_entropy(memory_marginal(rho))


def mutual_information(rho: np.ndarray) -> float:
    """I(A;B) = S(A) + S(B) - S(AB) in bits."""
    return (
        vn_entropy(probe_marginal(rho))
        + vn_entropy(memory_marginal(rho))
        - vn_entropy(rho)
    )


def uncertainty_lhs(
    q: ProjectiveObservable, r: ProjectiveObservable, rho: np.ndarray
) -> float:
    """Total conditional uncertainty S(Q|B) + S(R|B) of the two measurements.

    Each term is S(rho_OB) - S(rho_B) with rho_OB the post-measurement
    classical-quantum state.
    """
    s_memory = vn_entropy(memory_marginal(rho))
    return (
        vn_entropy(post_measurement_state(q, rho))
        + vn_entropy(post_measurement_state(r, rho))
        - 2.0 * s_memory
    )


def maassen_uffink_bound(
    q: ProjectiveObservable, r: ProjectiveObservable, rho: np.ndarray = None
) -> float:
    """Memoryless lower bound log2(1/c), plus S(rho) when a single-qubit state is given."""
    bound = math.log2(1.0 / complementarity(q, r))
    if rho is not None:
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (2, 2):
            raise ValueError(f"expected a 2x2 state for the state-dependent variant, got {rho.shape}")
        bound += vn_entropy(rho)
    return bound


def berta_bound(
    q: ProjectiveObservable, r: ProjectiveObservable, rho: np.ndarray
) -> float:
    """Memory-assisted lower bound log2(1/c) + S(A|B)."""
    return math.log2(1.0 / complementarity(q, r)) + conditional_entropy(rho)


def delta(
    q: ProjectiveObservable, r: ProjectiveObservable, rho: np.ndarray
) -> float:
    """Correlation surplus I(A;B) - I(Q;B) - I(R;B); may be negative."""
    return (
        mutual_information(rho)
        - holevo_quantity(q, rho)
        - holevo_quantity(r, rho)
    )


def holevo_bound(
    q: ProjectiveObservable, r: ProjectiveObservable, rho: np.ndarray
) -> float:
    """Tightened lower bound log2(1/c) + S(A|B) + max(0, delta).

    Never looser than `berta_bound`: the correction is clipped at zero.
    """
    return berta_bound(q, r, rho) + max(0.0, delta(q, r, rho))


@dataclass(frozen=True)
class EurReport:
    """Every uncertainty quantity for one (Q, R, state) triple, in bits.

    Attributes:
        lhs: S(Q|B) + S(R|B), the measured uncertainty sum
        mu_bound: log2(1/c), the memoryless bound
        berta_bound: log2(1/c) + S(A|B)
        holevo_bound: berta_bound + max(0, delta); equals
            berta_bound + max(0.0, delta) exactly, by construction
        delta: I(A;B) - I(Q;B) - I(R;B), unclipped
        c: maximal squared eigenstate overlap of the two observables
        s_cond: conditional entropy S(A|B)
        i_ab: mutual information I(A;B)
        i_qb: Holevo quantity I(Q;B)
        i_rb: Holevo quantity I(R;B)
    """

    lhs: float
    mu_bound: float
    berta_bound: float
    holevo_bound: float
    delta: float
    c: float
    s_cond: float
    i_ab: float
    i_qb: float
    i_rb: float


def evaluate_eur(
    q: ProjectiveObservable, r: ProjectiveObservable, rho: np.ndarray
) -> EurReport:
    """Evaluate the uncertainty sum and every lower bound on one state."""
    berta = berta_bound(q, r, rho)
    d = delta(q, r, rho)
    return EurReport(
        lhs=uncertainty_lhs(q, r, rho),
        mu_bound=maassen_uffink_bound(q, r),
        berta_bound=berta,
        holevo_bound=berta + max(0.0, d),
        delta=d,
        c=complementarity(q, r),
        s_cond=conditional_entropy(rho),
        i_ab=mutual_information(rho),
        i_qb=holevo_quantity(q, rho),
        i_rb=holevo_quantity(r, rho),
    )


def robertson_bound(q_op: np.ndarray, r_op: np.ndarray, psi: np.ndarray):
    """Standard-deviation uncertainty product and its commutator bound.

    Returns (DeltaQ * DeltaR, |<[Q, R]>| / 2) for Hermitian operators and
    a normalized pure state, with DeltaX = sqrt(<X^2> - <X>^2). The first
    element is never below the second (up to roundoff).
    """
    q_op = _hermitian_operator(q_op, "Q")
    r_op = _hermitian_operator(r_op, "R")
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.shape != (2,):
        raise ValueError(f"expected a single-qubit state vector, got shape {psi.shape}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_ATOL:
        raise ValueError(f"state vector has norm {norm:.12g}, expected 1")

    def spread(op):
        mean = np.vdot(psi, op @ psi).real
        second = np.vdot(psi, op @ (op @ psi)).real
        return math.sqrt(max(second - mean * mean, 0.0))

    commutator = q_op @ r_op - r_op @ q_op
    rhs = 0.5 * abs(np.vdot(psi, commutator @ psi))
    return spread(q_op) * spread(r_op), float(rhs)


def unruh_temperature(a: float) -> float:
    """Thermal temperature a / (2 pi) perceived at proper acceleration a.

    Natural units (c = hbar = k_B = 1).
    """
    if not (math.isfinite(a) and a >= 0.0):
        raise ValueError(f"acceleration must be finite and >= 0, got {a}")
    return a / (2.0 * math.pi)


def _hermitian_operator(op: np.ndarray, name: str) -> np.ndarray:
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        raise ValueError(f"{name} must be a 2x2 operator, got shape {op.shape}")
    deviation = float(np.max(np.abs(op - op.conj().T)))
    if deviation > HERMITICITY_ATOL:
        raise ValueError(f"{name} is not Hermitian: max |M - M^dag| = {deviation:.3e}")
    return op
