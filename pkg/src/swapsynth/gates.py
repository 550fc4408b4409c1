"""Two-qubit gate constructors and exchange-pulse evolution.

Convention: qubit 1 is the left tensor factor (most significant bit of the
computational index), qubit 2 the right.  CNOT defaults to qubit 1 as
control.  Fractional powers of SWAP interpolate along the one-parameter
group generated by the exchange interaction, with SWAP**0 = I and
SWAP**1 = SWAP.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .linalg import (
    ContractViolation,
    HADAMARD,
    ID2,
    ID4,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
)

__all__ = [
    "PLANCK_H",
    "HBAR",
    "SWAP",
    "CNOT",
    "CNOT_21",
    "CZ",
    "swap_pow",
    "reduce_exponent",
    "rz",
    "named_gate",
    "NAMED_GATES",
    "PulseSpec",
    "heisenberg_evolution",
]

# Exact SI value of the Planck constant (2019 redefinition), in J*s.
PLANCK_H = 6.62607015e-34
HBAR = PLANCK_H / (2.0 * np.pi)

SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)

CZ = np.diag([1, 1, 1, -1]).astype(complex)


def reduce_exponent(alpha):
    """Reduce a SWAP exponent modulo its period 2 into [0, 2)."""
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ContractViolation(f"exponent must be finite, got {alpha}")
    return alpha % 2.0


def swap_pow(alpha):
    """SWAP raised to a real power alpha.

    Acts as the identity on |00> and |11>; on the span of |01>, |10> it
    rotates through the one-parameter family

        [[ (1 + e^{i pi alpha}) / 2 , (1 - e^{i pi alpha}) / 2 ],
         [ (1 - e^{i pi alpha}) / 2 , (1 + e^{i pi alpha}) / 2 ]].

    Periodic in alpha with period 2.  alpha = 1/2 gives the square root
    of SWAP, the natural entangling primitive of an exchange pulse.
    """
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise ContractViolation(f"exponent must be finite, got {alpha}")
    p = (1.0 + np.exp(1j * np.pi * alpha)) / 2.0
    m = (1.0 - np.exp(1j * np.pi * alpha)) / 2.0
    u = np.zeros((4, 4), dtype=complex)
    u[0, 0] = 1.0
    u[3, 3] = 1.0
    u[1, 1] = p
    u[2, 2] = p
    u[1, 2] = m
    u[2, 1] = m
    return u


def rz(zeta):
    """Rotation about z: diag(e^{-i zeta}, e^{i zeta})."""
    return np.diag([np.exp(-1j * float(zeta)), np.exp(1j * float(zeta))]).astype(
        complex
    )


# CNOT with qubit 2 as control and qubit 1 as target.
CNOT_21 = np.array(
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex
)

NAMED_GATES = {
    "cnot": CNOT,
    "cz": CZ,
    "swap": SWAP,
    "identity2": ID2,
    "identity4": ID4,
    "x": PAULI_X,
    "y": PAULI_Y,
    "z": PAULI_Z,
    "hadamard": HADAMARD,
    # Extensions beyond the core set, both 4x4.
    "sqrt_swap": swap_pow(0.5),
    "iswap": np.array(
        [[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}


def named_gate(name):
    """Look up a built-in gate (2x2 or 4x4) by its lowercase name."""
    key = str(name).strip().lower()
    if key not in NAMED_GATES:
        known = ", ".join(sorted(NAMED_GATES))
        raise ContractViolation(f"unknown gate {name!r}; known gates: {known}")
    return NAMED_GATES[key].copy()


@dataclasses.dataclass(frozen=True)
class PulseSpec:
    """An isotropic exchange pulse described by its integrated strength.

    ``integrated_coupling`` is the time integral of the exchange coupling
    J(t) in joule-seconds; it may be negative for reverse evolution.  Only
    the integral matters for the final unitary, not the pulse shape.
    """

    integrated_coupling: float
    label: str = ""

    def __post_init__(self):
        if not np.isfinite(self.integrated_coupling):
            raise ContractViolation("pulse integral must be finite")


def heisenberg_evolution(pulse):
    """Unitary generated by an isotropic exchange pulse, and its SWAP power.

    The coupling J(t) S1.S2 between spin-1/2 operators S = sigma/2 gives,
    for phi = (integral of J dt) / hbar,

        U = e^{-i phi / 4} P_triplet + e^{3 i phi / 4} P_singlet,

    which equals SWAP**alpha up to the global phase theta = -phi/4 with

        alpha = (phi / pi) mod 2 = (2 * integral / h) mod 2.

    A pulse with integral h/2 therefore performs one full SWAP.  (With the
    other common normalization J sigma1.sigma2, alpha would be four times
    larger; this module consistently uses spin operators S = sigma/2.)

    Returns (u, alpha, theta) where u = e^{i theta} SWAP**alpha exactly and
    theta is reported on the principal branch (-pi, pi].
    """
    if not isinstance(pulse, PulseSpec):
        pulse = PulseSpec(float(pulse))
    phi = pulse.integrated_coupling / HBAR
    singlet = np.outer(
        np.array([0, 1, -1, 0]) / np.sqrt(2.0), np.array([0, 1, -1, 0]) / np.sqrt(2.0)
    ).astype(complex)
    triplet = ID4 - singlet
    u = np.exp(-1j * phi / 4.0) * triplet + np.exp(3j * phi / 4.0) * singlet
    alpha = (phi / np.pi) % 2.0
    theta = float(np.angle(np.exp(-1j * phi / 4.0)))
    return u, float(alpha), theta
