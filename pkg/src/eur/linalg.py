"""Dense complex linear algebra for small multi-qubit objects.

Everything operates on plain numpy arrays. The tensor-product convention
puts the left factor on the most significant index: for A of dimension m
and B of dimension n, the composite basis index is n*i_A + i_B (numpy's
``kron`` ordering). Every other module relies on this convention.
"""

import numpy as np

HERMITICITY_ATOL = 1e-10


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with `a` as the most significant factor."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(m: np.ndarray, keep, dims) -> np.ndarray:
    """Trace out every subsystem not listed in `keep`.

    Args:
        m: square matrix on a tensor-product space
        keep: index or indices of the subsystems to retain (0 = most
            significant factor); the retained subsystems stay in their
            original order
        dims: dimension of each subsystem, most significant first

    Returns:
        The reduced matrix on the kept subsystems. The full trace is
        preserved.
    """
    m = np.asarray(m, dtype=complex)
    dims = [int(d) for d in dims]
    total = int(np.prod(dims))
    if m.ndim != 2 or m.shape != (total, total):
        raise ValueError(
            f"matrix shape {m.shape} does not match subsystem dims {dims}"
        )
    if isinstance(keep, int):
        keep = [keep]
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise ValueError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    t = m.reshape(dims + dims)
    n = len(dims)
    for idx in sorted(set(range(n)) - set(keep), reverse=True):
        t = np.trace(t, axis1=idx, axis2=idx + n)
        n -= 1
    kept_dim = int(np.prod([dims[k] for k in keep]))
    return t.reshape(kept_dim, kept_dim)


def hermitian_eigensystem(m: np.ndarray, atol: float = HERMITICITY_ATOL):
    """Full eigensystem of a Hermitian matrix, eigenvalues ascending.

    The input is symmetrized as (M + M†)/2 before solving, so roundoff
    accumulated by upstream products cannot leak into the eigenbasis;
    matrices further than `atol` from Hermitian are rejected outright.

    Returns:
        (eigenvalues, eigenvectors): a real 1-D array in ascending order
        and a unitary matrix whose k-th column is the eigenvector for
        eigenvalue k. Within a degenerate eigenspace the basis choice is
        arbitrary and callers must not rely on it.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    deviation = float(np.max(np.abs(m - m.conj().T)))
    if deviation > atol:
        raise ValueError(f"matrix is not Hermitian: max |M - M^dag| = {deviation:.3e}")
    eigenvalues, eigenvectors = np.linalg.eigh((m + m.conj().T) / 2.0)
    return eigenvalues, eigenvectors
