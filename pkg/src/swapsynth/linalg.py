"""Dense complex linear algebra on the fixed dimensions 2, 4 and 16.

Everything here works on plain ``numpy`` arrays of complex128.  Instead of
wrapping matrices in classes, functions validate their contracts on entry
(unitarity, hermiticity, symmetry) and raise :class:`ContractViolation` when
an argument breaks its contract, or :class:`NumericalError` when an internal
procedure misses its tolerance.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "ContractViolation",
    "NumericalError",
    "ATOL_UNITARY",
    "ATOL_EXACT",
    "ID2",
    "ID4",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "HADAMARD",
    "PHI_PLUS",
    "PHI_MINUS",
    "PSI_PLUS",
    "PSI_MINUS",
    "BELL_BASIS",
    "tensor_product",
    "phase_distance",
    "haar_random_unitary",
    "project_su",
    "diagonalize_complex_symmetric_unitary",
    "partial_trace_first",
]

# Admission tolerance for unitarity / hermiticity checks on inputs.
ATOL_UNITARY = 1e-10
# Tolerance for identities that should hold to machine precision.
ATOL_EXACT = 1e-12


class ContractViolation(ValueError):
    """An argument failed one of its documented preconditions."""


class NumericalError(RuntimeError):
    """An internal numerical procedure failed to reach its tolerance."""


ID2 = np.eye(2, dtype=complex)
ID4 = np.eye(4, dtype=complex)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Unitary Hadamard, 1/sqrt(2) normalization.
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)

# Bell states as column vectors in the computational basis |00>,|01>,|10>,|11>.
PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2.0)
PHI_MINUS = np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2.0)
PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2.0)
PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2.0)

# Columns ordered (phi+, phi-, psi+, psi-).
BELL_BASIS = np.column_stack([PHI_PLUS, PHI_MINUS, PSI_PLUS, PSI_MINUS])


def _as_square(a, name="matrix"):
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(f"{name} must be square, got shape {a.shape}")
    return a


def assert_unitary(u, atol=ATOL_UNITARY, name="matrix"):
    """Raise ContractViolation unless u @ u.conj().T == I within atol."""
    u = _as_square(u, name)
    dev = np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))
    if dev > atol:
        raise ContractViolation(
            f"{name} is not unitary: max deviation {dev:.3e} exceeds {atol:.1e}"
        )
    return u


def assert_hermitian(a, atol=ATOL_UNITARY, name="matrix"):
    a = _as_square(a, name)
    dev = np.max(np.abs(a - a.conj().T))
    if dev > atol:
        raise ContractViolation(
            f"{name} is not Hermitian: max deviation {dev:.3e} exceeds {atol:.1e}"
        )
    return a


def tensor_product(a, b):
    """Kronecker product with a guard on the result dimension (<= 16)."""
    a = _as_square(a, "left factor")
    b = _as_square(b, "right factor")
    n = a.shape[0] * b.shape[0]
    if n > 16:
        raise ContractViolation(f"tensor product dimension {n} exceeds 16")
    return np.kron(a, b)


def phase_distance(u, v):
    """Global-phase-invariant gate distance 1 - |tr(u^dag v)| / n.

    Zero exactly when u and v agree up to a global phase; 1/2 for the
    identity against SWAP.  Symmetric, and obeys the triangle inequality
    up to numerical slack.
    """
    u = assert_unitary(u, name="u")
    v = assert_unitary(v, name="v")
    if u.shape != v.shape:
        raise ContractViolation(f"shape mismatch {u.shape} vs {v.shape}")
    d = 1.0 - abs(np.trace(u.conj().T @ v)) / u.shape[0]
    return max(d, 0.0)


def haar_random_unitary(dim, seed):
    """Haar-distributed unitary of dimension 2 or 4, reproducible by seed.

    Orthonormalizes a complex standard-Gaussian matrix by QR and fixes the
    phase of each diagonal factor of R, which makes the distribution exactly
    Haar rather than QR-convention biased.
    """
    if dim not in (2, 4):
        raise ContractViolation(f"unsupported dimension {dim}, expected 2 or 4")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z / np.sqrt(2.0))
    diag = np.diagonal(r)
    phases = diag / np.abs(diag)
    return q * phases[np.newaxis, :]


def project_su(u):
    """Split u into (v, phi) with v = exp(-i phi) u of determinant one.

    phi = arg(det u) / n on the principal branch, so phi lies in
    (-pi/n, pi/n].
    """
    u = assert_unitary(u, name="u")
    n = u.shape[0]
    phi = np.angle(np.linalg.det(u)) / n
    return u * np.exp(-1j * phi), float(phi)


def _jacobi_real_symmetric(a, max_sweeps=100, off_tol=1e-13):
    """Cyclic Jacobi diagonalization of a small real symmetric matrix.

    Returns (eigenvalues, v) with a == v @ diag(w) @ v.T.  Sweeps over all
    upper-triangle pairs in a fixed order; raises NumericalError if the
    off-diagonal norm has not collapsed after max_sweeps sweeps.
    """
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n)
    scale = max(1.0, np.max(np.abs(a)))
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2.0)
        if off <= off_tol * scale:
            return np.diagonal(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                j = np.eye(n)
                j[p, p] = c
                j[q, q] = c
                j[p, q] = s
                j[q, p] = -s
                a = j.T @ a @ j
                v = v @ j
    raise NumericalError("Jacobi diagonalization failed to converge in 100 sweeps")


def _cluster_indices(values, gap):
    """Group indices of a 1-d array into clusters closer than gap."""
    order = np.argsort(values, kind="stable")
    clusters = [[order[0]]]
    for idx in order[1:]:
        if values[idx] - values[clusters[-1][-1]] < gap:
            clusters[-1].append(idx)
        else:
            clusters.append([idx])
    return clusters


def diagonalize_complex_symmetric_unitary(m, cluster_gap=1e-8):
    """Factor a complex symmetric unitary as m = Q diag(d) Q^T, Q real orthogonal.

    Such an m has commuting real and imaginary parts with Re^2 + Im^2 = I,
    so one real orthogonal Q diagonalizes both.  Re(m) is diagonalized by
    cyclic Jacobi first; within each cluster of its eigenvalues (gap below
    ``cluster_gap``) a secondary Jacobi pass on Im(m) resolves the remaining
    freedom.  Eigenpairs are sorted by the phase of d in (-pi, pi], and each
    eigenvector's first component above 1e-8 is made positive.
    """
    m = _as_square(m, "m")
    if m.shape[0] != 4:
        raise ContractViolation(f"expected a 4x4 matrix, got {m.shape}")
    sym_dev = np.max(np.abs(m - m.T))
    if sym_dev > ATOL_UNITARY:
        raise ContractViolation(
            f"matrix is not symmetric: max deviation {sym_dev:.3e}"
        )
    assert_unitary(m, name="m")

    a = np.ascontiguousarray((m.real + m.real.T) / 2.0)
    b = np.ascontiguousarray((m.imag + m.imag.T) / 2.0)

    wa, v = _jacobi_real_symmetric(a)
    for cluster in _cluster_indices(wa, cluster_gap):
        if len(cluster) < 2:
            continue
        sub = v[:, cluster].T @ b @ v[:, cluster]
        sub = (sub + sub.T) / 2.0
        _, w = _jacobi_real_symmetric(sub)
        v[:, cluster] = v[:, cluster] @ w

    d = np.diagonal(v.T @ a @ v) + 1j * np.diagonal(v.T @ b @ v)
    if np.max(np.abs(np.abs(d) - 1.0)) > 1e-8:
        raise NumericalError("joint diagonalization produced non-unimodular values")
    d = d / np.abs(d)

    order = np.argsort(np.angle(d), kind="stable")
    d = d[order]
    q = v[:, order]
    for j in range(4):
        col = q[:, j]
        lead = col[np.abs(col) > 1e-8]
        if lead.size and lead[0] < 0:
            q[:, j] = -col

    ortho_dev = np.max(np.abs(q.T @ q - np.eye(4)))
    if ortho_dev > 1e-10:
        raise NumericalError(f"eigenvector matrix lost orthogonality: {ortho_dev:.3e}")
    recon_dev = np.max(np.abs(q @ np.diag(d) @ q.T - m))
    if recon_dev > 1e-9:
        raise NumericalError(f"diagonalization residual {recon_dev:.3e} exceeds 1e-9")
    return d, q


def partial_trace_first(rho):
    """Reduced density matrix of qubit 1 (the second qubit traced out)."""
    rho = assert_hermitian(rho, name="rho")
    if rho.shape[0] != 4:
        raise ContractViolation(f"expected a 4x4 density matrix, got {rho.shape}")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > ATOL_UNITARY:
        raise ContractViolation(f"density matrix trace {tr} is not 1")
    r = rho.reshape(2, 2, 2, 2)
    return np.einsum("ikjk->ij", r)
