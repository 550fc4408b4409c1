import numpy as np
import pytest

from swapsynth.costmodel import (
    HardwareProfile,
    builtin_profile,
    compare_backends,
    profile_from_dict,
    schedule_circuit,
)
from swapsynth.gates import CNOT, SWAP
from swapsynth.linalg import ContractViolation, ID2, PAULI_X, haar_random_unitary
from swapsynth.synthesis import (
    Circuit,
    cnot_op,
    local_op,
    swap_op,
    synthesize_swap,
)


def test_builtin_profiles():
    gaas = builtin_profile("gaas")
    assert gaas.rabi_frequency_hz == pytest.approx(6.2e6)
    assert gaas.pi_rotation_time_s == pytest.approx(80e-9)
    assert gaas.swap_full_time_s == pytest.approx(50e-12)
    si = builtin_profile("si")
    assert si.rabi_frequency_hz == pytest.approx(28e6)
    assert si.pi_rotation_time_s == pytest.approx(18e-9)
    assert si.swap_full_time_s == pytest.approx(50e-12)
    # local rotations are three orders of magnitude slower than exchange
    assert gaas.pi_rotation_time_s / gaas.swap_full_time_s == pytest.approx(1600.0)
    with pytest.raises(ContractViolation):
        builtin_profile("germanium")


def test_profile_consistency_gate():
    with pytest.raises(ContractViolation):
        HardwareProfile(
            name="broken",
            rabi_frequency_hz=1e6,
            pi_rotation_time_s=80e-9,  # 1/(2f) would be 500 ns
            swap_full_time_s=50e-12,
        )
    with pytest.raises(ContractViolation):
        HardwareProfile(
            name="negative",
            rabi_frequency_hz=1e6,
            pi_rotation_time_s=-5e-7,
            swap_full_time_s=50e-12,
        )
    with pytest.raises(ContractViolation):
        HardwareProfile(
            name="policy",
            rabi_frequency_hz=1e6,
            pi_rotation_time_s=5e-7,
            swap_full_time_s=50e-12,
            local_rotation_policy="adiabatic",
        )


def test_profile_from_dict():
    doc = {
        "name": "lab",
        "rabi_frequency_hz": 1.0e7,
        "pi_rotation_time_s": 5.0e-8,
        "swap_full_time_s": 1.0e-10,
        "local_rotation_policy": "proportional",
    }
    p = profile_from_dict(doc)
    assert p.name == "lab"
    assert p.local_rotation_policy == "proportional"
    with pytest.raises(ContractViolation):
        profile_from_dict({"name": "incomplete"})
    with pytest.raises(ContractViolation):
        profile_from_dict("gaas")


def test_schedule_empty():
    sched = schedule_circuit(Circuit(ops=[]), builtin_profile("gaas"))
    assert sched.layers == ()
    assert sched.total_time_s == 0.0


def test_schedule_single_swap():
    sched = schedule_circuit(Circuit(ops=[swap_op(1.0)]), builtin_profile("gaas"))
    assert sched.total_time_s == pytest.approx(50e-12)
    sched = schedule_circuit(Circuit(ops=[swap_op(0.5)]), builtin_profile("gaas"))
    assert sched.total_time_s == pytest.approx(25e-12)
    # exponents fold modulo 2, symmetric about odd integers
    sched = schedule_circuit(Circuit(ops=[swap_op(1.5)]), builtin_profile("gaas"))
    assert sched.total_time_s == pytest.approx(25e-12)
    sched = schedule_circuit(Circuit(ops=[swap_op(-0.5)]), builtin_profile("gaas"))
    assert sched.total_time_s == pytest.approx(25e-12)


def test_schedule_local_packing():
    prof = builtin_profile("gaas")
    ops = [local_op(1, PAULI_X), local_op(2, PAULI_X), local_op(1, PAULI_X)]
    sched = schedule_circuit(Circuit(ops=ops), prof)
    # first two share a layer, the third cannot
    assert len(sched.layers) == 2
    assert sched.layers[0].op_indices == (0, 1)
    assert sched.total_time_s == pytest.approx(2 * 80e-9)


def test_schedule_two_qubit_gates_break_layers():
    prof = builtin_profile("gaas")
    ops = [local_op(1, PAULI_X), swap_op(0.5), local_op(2, PAULI_X)]
    sched = schedule_circuit(Circuit(ops=ops), prof)
    assert [layer.kind for layer in sched.layers] == ["local", "swap_pow", "local"]


def test_schedule_synthesized_cnot_target():
    # three-SWAP circuit for CNOT under the GaAs profile: four sequential
    # local layers plus 50 ps of exchange
    sched = schedule_circuit(synthesize_swap(CNOT), builtin_profile("gaas"))
    local_layers = [l for l in sched.layers if l.kind == "local"]
    assert len(local_layers) == 4
    assert sched.total_time_s == pytest.approx(320.05e-9, rel=1e-9)


def test_proportional_policy():
    prof = HardwareProfile(
        name="prop",
        rabi_frequency_hz=6.2e6,
        pi_rotation_time_s=80e-9,
        swap_full_time_s=50e-12,
        local_rotation_policy="proportional",
    )
    half_turn = schedule_circuit(Circuit(ops=[local_op(1, PAULI_X)]), prof)
    assert half_turn.total_time_s == pytest.approx(80e-9)
    idle = schedule_circuit(Circuit(ops=[local_op(1, ID2)]), prof)
    assert idle.total_time_s == pytest.approx(0.0, abs=1e-20)
    fixed = builtin_profile("gaas")
    assert schedule_circuit(
        Circuit(ops=[local_op(1, ID2)]), fixed
    ).total_time_s == pytest.approx(80e-9)


def test_schedule_layers_cover_all_ops():
    u = haar_random_unitary(4, seed=19)
    c = synthesize_swap(u)
    sched = schedule_circuit(c, builtin_profile("si"))
    seen = sorted(i for layer in sched.layers for i in layer.op_indices)
    assert seen == list(range(len(c.ops)))
    assert sched.total_time_s == pytest.approx(
        sum(layer.duration_s for layer in sched.layers)
    )


def test_compare_backends_report():
    rep = compare_backends(haar_random_unitary(4, seed=2), builtin_profile("gaas"))
    assert set(rep["backends"]) == {"swap", "cnot", "naive"}
    assert rep["backends"]["swap"]["gate_counts"] == {"swap_pow": 3, "cnot": 0, "local": 6}
    assert rep["backends"]["naive"]["gate_counts"]["swap_pow"] == 6
    assert rep["naive_verification_phase_distance"] < 1e-9
    assert "local layers" in rep["note"] or "local" in rep["note"]


def test_naive_never_beats_optimal():
    prof = builtin_profile("gaas")
    for seed in range(25):
        rep = compare_backends(haar_random_unitary(4, seed=seed), prof)
        naive = rep["backends"]["naive"]["total_time_s"]
        optimal = rep["backends"]["swap"]["total_time_s"]
        assert naive >= optimal - 1e-15


def test_compare_backends_swap_target():
    rep = compare_backends(SWAP, builtin_profile("si"))
    assert rep["backends"]["swap"]["total_time_s"] > 0
