"""Gate tables, gate algebra, circuits, and the teleportation identity.

The controlled-gate and single-bit tables are asserted line by line
against the published actions on basis combs, then the same gates are
checked as whole-state operators (involutions, norm and linearity).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combcube.algebra import Multivector, geometric_product
from combcube.coding import bell_carrier, comb, encode, LatticeMultivector
from combcube.gates import (
    Circuit,
    Gate,
    apply_circuit,
    apply_circuit_lattice,
    apply_cx,
    apply_cz,
    apply_gate,
    apply_h,
    apply_x,
    apply_z,
    circuit_from_json,
    circuit_to_json,
    teleport,
    teleport_network,
)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _basis_action(gate, word):
    """Where a permutation/sign gate sends one basis comb."""
    out = apply_gate(Multivector.blade(word, 3), gate)
    nonzero = np.nonzero(out.coeffs)[0]
    assert len(nonzero) == 1, "gate did not act as a signed permutation"
    return int(nonzero[0]), float(out.coeffs[nonzero[0]])


def test_controlled_x_target2_control1_table():
    gate = Gate("CX", target=2, control=1)
    assert _basis_action(gate, comb("100")) == (comb("110"), 1.0)
    assert _basis_action(gate, comb("101")) == (comb("111"), 1.0)
    assert _basis_action(gate, comb("110")) == (comb("100"), 1.0)
    assert _basis_action(gate, comb("111")) == (comb("101"), 1.0)
    # control bit clear: untouched
    for key in ("000", "010", "001", "011"):
        assert _basis_action(gate, comb(key)) == (comb(key), 1.0)


def test_controlled_x_target3_control2_table():
    gate = Gate("CX", target=3, control=2)
    assert _basis_action(gate, comb("010")) == (comb("011"), 1.0)
    assert _basis_action(gate, comb("011")) == (comb("010"), 1.0)
    assert _basis_action(gate, comb("110")) == (comb("111"), 1.0)
    assert _basis_action(gate, comb("111")) == (comb("110"), 1.0)
    for key in ("000", "100", "001", "101"):
        assert _basis_action(gate, comb(key)) == (comb(key), 1.0)


def test_controlled_z_target3_control1_table():
    gate = Gate("CZ", target=3, control=1)
    assert _basis_action(gate, comb("100")) == (comb("100"), 1.0)
    assert _basis_action(gate, comb("101")) == (comb("101"), -1.0)
    assert _basis_action(gate, comb("110")) == (comb("110"), 1.0)
    assert _basis_action(gate, comb("111")) == (comb("111"), -1.0)
    for key in ("000", "010", "001", "011"):
        assert _basis_action(gate, comb(key)) == (comb(key), 1.0)


@pytest.mark.parametrize("b", [0, 1])
@pytest.mark.parametrize("c", [0, 1])
def test_x1_x2_generic_lines(b, c):
    # c_1BC <-> c_0BC and c_A1C <-> c_A0C for every B, C / A, C
    x1 = Gate("X", 1)
    assert _basis_action(x1, comb((1, b, c))) == (comb((0, b, c)), 1.0)
    assert _basis_action(x1, comb((0, b, c))) == (comb((1, b, c)), 1.0)
    x2 = Gate("X", 2)
    assert _basis_action(x2, comb((b, 1, c))) == (comb((b, 0, c)), 1.0)
    assert _basis_action(x2, comb((b, 0, c))) == (comb((b, 1, c)), 1.0)


@pytest.mark.parametrize("b", [0, 1])
@pytest.mark.parametrize("c", [0, 1])
def test_z1_z2_generic_lines(b, c):
    # c_1BC -> -c_1BC and c_A1C -> -c_A1C; bit-clear combs untouched
    z1 = Gate("Z", 1)
    assert _basis_action(z1, comb((1, b, c))) == (comb((1, b, c)), -1.0)
    assert _basis_action(z1, comb((0, b, c))) == (comb((0, b, c)), 1.0)
    z2 = Gate("Z", 2)
    assert _basis_action(z2, comb((b, 1, c))) == (comb((b, 1, c)), -1.0)
    assert _basis_action(z2, comb((b, 0, c))) == (comb((b, 0, c)), 1.0)


@pytest.mark.parametrize("a", [0, 1])
@pytest.mark.parametrize("b", [0, 1])
def test_x3_z3_by_analogy(a, b):
    assert _basis_action(Gate("X", 3), comb((a, b, 0))) == (comb((a, b, 1)), 1.0)
    assert _basis_action(Gate("X", 3), comb((a, b, 1))) == (comb((a, b, 0)), 1.0)
    assert _basis_action(Gate("Z", 3), comb((a, b, 1))) == (comb((a, b, 1)), -1.0)


def test_blade_language_rows():
    # the same table rows said with blades
    b1, b12 = Multivector.blade(0b001, 3), Multivector.blade(0b011, 3)
    b2, b23 = Multivector.blade(0b010, 3), Multivector.blade(0b110, 3)
    b13, b123 = Multivector.blade(0b101, 3), Multivector.blade(0b111, 3)
    assert apply_cx(b1, 2, 1) == b12
    assert apply_cx(b12, 2, 1) == b1
    assert apply_cx(b13, 2, 1) == b123
    assert apply_cx(b123, 2, 1) == b13
    assert apply_cx(b2, 3, 2) == b23
    assert apply_cx(b23, 3, 2) == b2
    assert apply_cx(b12, 3, 2) == b123
    assert apply_cx(b123, 3, 2) == b12
    assert apply_cz(b13, 3, 1) == -b13
    assert apply_cz(b123, 3, 1) == -b123


def test_z1_on_example_table():
    table = {
        "000": -0.07, "100": 0.32, "010": -3.08, "001": 1.06,
        "110": -0.85, "101": 0.27, "011": -0.86, "111": 4.07,
    }
    flipped = apply_z(encode(table, 3), 1)
    expected = encode(
        {k: (-v if k[0] == "1" else v) for k, v in table.items()}, 3
    )
    assert flipped == expected


def test_x2_moves_payload_onto_bit2():
    # X_2 (alpha + beta b1) = alpha b2 + beta b1b2
    state = Multivector([0.6, 0.8, 0, 0, 0, 0, 0, 0], 3)
    out = apply_x(state, 2)
    expected = np.zeros(8)
    expected[0b010] = 0.6
    expected[0b011] = 0.8
    np.testing.assert_array_equal(out.coeffs, expected)


def test_h_examples():
    one = Multivector.scalar(1.0, 3)
    b1 = Multivector.blade(0b001, 3)
    plus = apply_h(one, 1)
    assert plus.coeffs[0b000] == INV_SQRT2 and plus.coeffs[0b001] == INV_SQRT2
    minus = apply_h(b1, 1)
    assert minus.coeffs[0b000] == INV_SQRT2 and minus.coeffs[0b001] == -INV_SQRT2


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=8, max_size=8))
def test_every_gate_is_an_involution(xs):
    state = Multivector(xs, 3)
    for gate in _full_gate_set():
        twice = apply_gate(apply_gate(state, gate), gate)
        assert np.max(np.abs(twice.coeffs - state.coeffs)) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=8, max_size=8))
def test_every_gate_preserves_coefficient_norm(xs):
    state = Multivector(xs, 3)
    for gate in _full_gate_set():
        assert abs(apply_gate(state, gate).norm() - state.norm()) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.floats(-1, 1), min_size=8, max_size=8),
    st.lists(st.floats(-1, 1), min_size=8, max_size=8),
    st.floats(-1, 1),
)
def test_gates_are_linear(xs, ys, scale):
    a, b = Multivector(xs, 3), Multivector(ys, 3)
    for gate in _full_gate_set():
        lhs = apply_gate(a * scale + b, gate)
        rhs = apply_gate(a, gate) * scale + apply_gate(b, gate)
        assert np.max(np.abs(lhs.coeffs - rhs.coeffs)) <= 1e-15


def _full_gate_set():
    single = [Gate(kind, k) for kind in ("X", "Z", "H") for k in (1, 2, 3)]
    controlled = [
        Gate(kind, t, c)
        for kind in ("CX", "CZ")
        for t in (1, 2, 3)
        for c in (1, 2, 3)
        if t != c
    ]
    return single + controlled


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("Y", 1)
    with pytest.raises(ValueError):
        Gate("CX", 2)
    with pytest.raises(ValueError):
        Gate("CX", 2, 2)
    with pytest.raises(ValueError):
        Gate("X", 0)
    with pytest.raises(ValueError):
        Gate("H", 1, 2)
    mv = Multivector.zero(3)
    with pytest.raises(ValueError):
        apply_x(mv, 4)
    with pytest.raises(ValueError):
        apply_cx(mv, 2, 9)
    with pytest.raises(ValueError):
        apply_gate(mv, Gate("X", 11))


def test_apply_circuit_runs_first_gate_first():
    # X then Z gives -c100 from c000; the reverse order gives +c100
    state = Multivector.blade(0b000, 3)
    out = apply_circuit([Gate("X", 1), Gate("Z", 1)], state)
    assert out.coeffs[0b001] == -1.0
    out = apply_circuit([Gate("Z", 1), Gate("X", 1)], state)
    assert out.coeffs[0b001] == 1.0
    assert apply_circuit([], state) == state


def test_teleport_network_sequence():
    net = teleport_network()
    assert len(net) == 6
    assert list(net) == [
        Gate("CX", 2, 1),
        Gate("H", 1),
        Gate("CX", 3, 2),
        Gate("CZ", 3, 1),
        Gate("H", 2),
        Gate("H", 1),
    ]


def test_teleport_moves_payload_to_bit3():
    out = teleport(1.0, 0.0)
    np.testing.assert_allclose(out.coeffs, [1, 0, 0, 0, 0, 0, 0, 0], atol=1e-12)
    out = teleport(0.0, 1.0)
    np.testing.assert_allclose(out.coeffs, [0, 0, 0, 0, 1, 0, 0, 0], atol=1e-12)
    out = teleport(0.6, 0.8)
    np.testing.assert_allclose(out.coeffs, [0.6, 0, 0, 0, 0.8, 0, 0, 0], atol=1e-12)


def test_teleport_random_unit_payloads():
    rng = np.random.default_rng(99)
    for _ in range(50):
        phi = rng.uniform(0.0, 2.0 * math.pi)
        alpha, beta = math.cos(phi), math.sin(phi)
        out = teleport(alpha, beta)
        expected = np.zeros(8)
        expected[0b000] = alpha
        expected[0b100] = beta
        assert np.max(np.abs(out.coeffs - expected)) <= 1e-12


def test_teleport_consumes_the_carrier():
    # applying the network to payload * carrier is what teleport does
    payload = Multivector([0.28, -0.96, 0, 0, 0, 0, 0, 0], 3)
    state = geometric_product(payload, bell_carrier())
    direct = apply_circuit(teleport_network(), state)
    assert direct == teleport(0.28, -0.96)


def test_apply_circuit_lattice_is_cellwise():
    a = encode({"000": 1.0}, 3)
    b = encode({"100": 1.0}, 3)
    lat = LatticeMultivector({(0,): a, (1,): b})
    flipped = apply_circuit_lattice([Gate("X", 1)], lat)
    assert flipped.get((0,)) == b
    assert flipped.get((1,)) == a
    assert len(flipped) == 2


def test_apply_circuit_lattice_commutes_with_set_order():
    rng = np.random.default_rng(5)
    circuit = [Gate("H", 1), Gate("CX", 2, 1), Gate("Z", 3)]
    cells = [((i, j), Multivector(rng.uniform(-1, 1, 8), 3)) for i in range(2) for j in range(2)]
    built_then_applied = apply_circuit_lattice(circuit, LatticeMultivector(dict(cells)))
    applied_then_built = LatticeMultivector(
        {cell: apply_circuit(circuit, mv) for cell, mv in cells}
    )
    assert built_then_applied == applied_then_built


def test_circuit_rejects_non_gates():
    with pytest.raises(TypeError):
        Circuit(("X1",))
    circuit = Circuit((Gate("X", 1), Gate("H", 2)))
    assert len(circuit) == 2
    assert circuit[1] == Gate("H", 2)


def test_circuit_json_roundtrip():
    net = teleport_network()
    text = circuit_to_json(net)
    assert circuit_from_json(text) == net
    assert '"control": 1' in text


def test_circuit_json_validation():
    with pytest.raises(ValueError):
        circuit_from_json('{"kind": "X"}')
    with pytest.raises(ValueError):
        circuit_from_json('[{"kind": "Q", "target": 1}]')
    with pytest.raises(ValueError):
        circuit_from_json('[{"kind": "X", "target": 1, "extra": 2}]')
    with pytest.raises(ValueError):
        circuit_from_json('[{"kind": "CX", "target": 2}]')
