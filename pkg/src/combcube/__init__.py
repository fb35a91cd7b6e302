"""Comb-coded Clifford multivectors with bitwise gates, a six-gate
teleportation network, a value-to-hue color map, and colored-cube SVG
rendering, cross-checked by an independent tensor-product simulator."""

from .algebra import (
    MAX_DIM,
    Multivector,
    blade_product,
    geometric_product,
    grade_projection,
    inner_product,
    outer_product,
)
from .coding import (
    LatticeMultivector,
    bell_basis,
    bell_carrier,
    bits_to_key,
    comb,
    comb_bits,
    decode,
    encode,
    lattice_from_json,
    lattice_get,
    lattice_set,
    lattice_to_json,
    multivector_from_json,
    multivector_to_json,
)
from .colorwheel import RgbColor, hue_to_rgb, nu_of_x, rgb_to_hex, x_of_nu
from .gates import (
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
from .render import (
    CubeStyle,
    Disc,
    ELEMENT_WORDS,
    Polygon,
    Scene,
    Segment,
    cube_scene,
    emit_svg,
    grid_placement,
    lattice_scene,
    scene_bbox,
    sine_warp,
)
from .statevector import (
    StateVector,
    equivalence_check,
    sv_apply_circuit,
    sv_apply_gate,
    sv_teleport,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "Multivector",
    "blade_product",
    "geometric_product",
    "grade_projection",
    "inner_product",
    "outer_product",
    "LatticeMultivector",
    "bell_basis",
    "bell_carrier",
    "bits_to_key",
    "comb",
    "comb_bits",
    "decode",
    "encode",
    "lattice_from_json",
    "lattice_get",
    "lattice_set",
    "lattice_to_json",
    "multivector_from_json",
    "multivector_to_json",
    "RgbColor",
    "hue_to_rgb",
    "nu_of_x",
    "rgb_to_hex",
    "x_of_nu",
    "Circuit",
    "Gate",
    "apply_circuit",
    "apply_circuit_lattice",
    "apply_cx",
    "apply_cz",
    "apply_gate",
    "apply_h",
    "apply_x",
    "apply_z",
    "circuit_from_json",
    "circuit_to_json",
    "teleport",
    "teleport_network",
    "CubeStyle",
    "Disc",
    "ELEMENT_WORDS",
    "Polygon",
    "Scene",
    "Segment",
    "cube_scene",
    "emit_svg",
    "grid_placement",
    "lattice_scene",
    "scene_bbox",
    "sine_warp",
    "StateVector",
    "equivalence_check",
    "sv_apply_circuit",
    "sv_apply_gate",
    "sv_teleport",
]
