"""Wall-clock estimates for synthesized circuits.

Durations come from a hardware profile (built-in: exchange-coupled quantum
dots in GaAs or Si) and a greedy layering model: single-qubit gates on
distinct qubits run simultaneously, every two-qubit gate gets its own
layer, and the total is the sum of layer durations.

Single-qubit rotations are orders of magnitude slower than exchange pulses
on these devices, so the local layers dominate every schedule; that gap is
exactly what makes the three-SWAP backend attractive against the naive
six-half-SWAP substitution.
"""

from __future__ import annotations

import dataclasses
from typing import NamedTuple

import numpy as np

from .linalg import ContractViolation, NumericalError, assert_unitary, phase_distance
from .synthesis import (
    evaluate_circuit,
    expand_cnots_to_swaps,
    gate_counts,
    synthesize_cnot,
    synthesize_swap,
)

__all__ = [
    "HardwareProfile",
    "builtin_profile",
    "profile_from_dict",
    "Layer",
    "Schedule",
    "schedule_circuit",
    "compare_backends",
]

_POLICIES = ("fixed_pi", "proportional")


@dataclasses.dataclass(frozen=True)
class HardwareProfile:
    """Timing constants for one device family.

    ``swap_full_time_s`` is the duration of a full SWAP (exponent 1);
    fractional exponents scale it linearly.  ``local_rotation_policy``
    chooses between charging every single-qubit gate the pi-rotation time
    (fixed_pi) and scaling with the actual rotation angle (proportional).
    """

    name: str
    rabi_frequency_hz: float
    pi_rotation_time_s: float
    swap_full_time_s: float
    local_rotation_policy: str = "fixed_pi"

    def __post_init__(self):
        for field in ("rabi_frequency_hz", "pi_rotation_time_s", "swap_full_time_s"):
            value = getattr(self, field)
            if not (np.isfinite(value) and value > 0):
                raise ContractViolation(f"{field} must be positive, got {value}")
        if self.local_rotation_policy not in _POLICIES:
            raise ContractViolation(
                f"unknown local_rotation_policy {self.local_rotation_policy!r}; "
                f"expected one of {_POLICIES}"
            )
        implied = 1.0 / (2.0 * self.rabi_frequency_hz)
        if abs(self.pi_rotation_time_s - implied) > 0.1 * self.pi_rotation_time_s:
            raise ContractViolation(
                f"pi_rotation_time_s {self.pi_rotation_time_s:.3e} deviates more "
                f"than 10% from 1/(2 rabi_frequency) = {implied:.3e}"
            )


_BUILTIN = {
    "gaas": HardwareProfile(
        name="gaas",
        rabi_frequency_hz=6.2e6,
        pi_rotation_time_s=80e-9,
        swap_full_time_s=50e-12,
    ),
    "si": HardwareProfile(
        name="si",
        rabi_frequency_hz=28e6,
        pi_rotation_time_s=18e-9,
        swap_full_time_s=50e-12,
    ),
}


def builtin_profile(name):
    """Look up a built-in profile: 'gaas' or 'si'."""
    key = str(name).strip().lower()
    if key not in _BUILTIN:
        raise ContractViolation(
            f"unknown profile {name!r}; built-ins: {', '.join(sorted(_BUILTIN))}"
        )
    return _BUILTIN[key]


def profile_from_dict(doc):
    """Build a profile from its JSON form.

    Expected keys: name, rabi_frequency_hz, pi_rotation_time_s,
    swap_full_time_s, and optionally local_rotation_policy.
    """
    if not isinstance(doc, dict):
        raise ContractViolation("profile document must be a JSON object")
    try:
        return HardwareProfile(
            name=str(doc["name"]),
            rabi_frequency_hz=float(doc["rabi_frequency_hz"]),
            pi_rotation_time_s=float(doc["pi_rotation_time_s"]),
            swap_full_time_s=float(doc["swap_full_time_s"]),
            local_rotation_policy=str(doc.get("local_rotation_policy", "fixed_pi")),
        )
    except KeyError as exc:
        raise ContractViolation(f"profile document missing key {exc}") from None
    except (TypeError, ValueError) as exc:
        raise ContractViolation(f"malformed profile document: {exc}") from None


class Layer(NamedTuple):
    """One parallel step of a schedule."""

    duration_s: float
    op_indices: tuple
    kind: str


@dataclasses.dataclass(frozen=True)
class Schedule:
    """Layered timing of one circuit under one profile."""

    layers: tuple
    total_time_s: float
    profile_name: str


def _local_duration(op, profile):
    if profile.local_rotation_policy == "fixed_pi":
        return profile.pi_rotation_time_s
    # Rotation angle of a 2x2 unitary, ignoring global phase: |tr| = 2|cos(angle/2)|.
    cos_half = min(abs(np.trace(op.matrix)) / 2.0, 1.0)
    angle = 2.0 * np.arccos(cos_half)
    return profile.pi_rotation_time_s * angle / np.pi


def _swap_duration(alpha, profile):
    reduced = float(alpha) % 2.0
    return profile.swap_full_time_s * min(reduced, 2.0 - reduced)


def schedule_circuit(circuit, profile):
    """Greedy left-to-right layering of a circuit.

    Adjacent single-qubit gates on distinct qubits share a layer whose
    duration is the maximum of its members; each two-qubit gate stands
    alone.  swap_pow duration scales with the exponent's distance from an
    even integer, capped at the full-SWAP time.  cnot ops are costed at
    the full-SWAP time: on an exchange-only device a CNOT is not a native
    pulse, so this is an optimistic placeholder for comparisons.
    """
    layers = []
    pending = []
    used_qubits = set()

    def flush():
        if pending:
            duration = max(d for _, d in pending)
            layers.append(
                Layer(duration_s=duration, op_indices=tuple(i for i, _ in pending), kind="local")
            )
            pending.clear()
            used_qubits.clear()

    for idx, op in enumerate(circuit.ops):
        if op.kind == "local":
            if op.qubit in used_qubits:
                flush()
            pending.append((idx, _local_duration(op, profile)))
            used_qubits.add(op.qubit)
        elif op.kind == "swap_pow":
            flush()
            layers.append(
                Layer(duration_s=_swap_duration(op.alpha, profile), op_indices=(idx,), kind="swap_pow")
            )
        elif op.kind == "cnot":
            flush()
            layers.append(
                Layer(duration_s=profile.swap_full_time_s, op_indices=(idx,), kind="cnot")
            )
        else:
            raise ContractViolation(f"unknown op kind {op.kind!r}")
    flush()
    total = float(sum(layer.duration_s for layer in layers))
    return Schedule(layers=tuple(layers), total_time_s=total, profile_name=profile.name)


def _backend_entry(circuit, profile):
    swaps, cnots, locals_ = gate_counts(circuit)
    sched = schedule_circuit(circuit, profile)
    local_layers = sum(1 for layer in sched.layers if layer.kind == "local")
    return {
        "gate_counts": {"swap_pow": swaps, "cnot": cnots, "local": locals_},
        "layers": len(sched.layers),
        "local_layers": local_layers,
        "total_time_s": sched.total_time_s,
    }


def compare_backends(u, profile):
    """Synthesize u three ways and time each under the profile.

    Backends: the three-SWAP circuit, the three-CNOT circuit, and the
    naive variant with every CNOT expanded into two half-SWAP pulses.
    The naive expansion is verified against u before timing.  Returns a
    report dict with per-backend gate counts, layer counts, and totals.
    """
    u = assert_unitary(u, name="u")
    swap_circuit = synthesize_swap(u)
    cnot_circuit = synthesize_cnot(u)
    naive_circuit = expand_cnots_to_swaps(cnot_circuit)
    dev = phase_distance(evaluate_circuit(naive_circuit), u)
    if dev > 1e-9:
        raise NumericalError(f"naive expansion failed verification: {dev:.3e}")

    entries = {
        "swap": _backend_entry(swap_circuit, profile),
        "cnot": _backend_entry(cnot_circuit, profile),
        "naive": _backend_entry(naive_circuit, profile),
    }
    swap_locals = entries["swap"]["local_layers"]
    note = (
        f"Single-qubit layers dominate: the three-SWAP schedule runs "
        f"{swap_locals} sequential local layers (front pair, mid X, mid Z, "
        f"merged back pair), so its total is about {swap_locals} pi-rotation "
        f"times, one more layer than the three suggested by counting rotation "
        f"stages without the mid-circuit Paulis. cnot layers are costed at "
        f"the full-SWAP exchange time; a native CNOT does not exist on an "
        f"exchange-only device."
    )
    return {
        "profile": profile.name,
        "backends": entries,
        "naive_verification_phase_distance": float(dev),
        "note": note,
    }
