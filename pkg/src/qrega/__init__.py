"""Quantum register algebra on a bitmask geometric algebra kernel."""

from .ga import (
    Algebra,
    Blade,
    Multivector,
    approx_equal,
    blade_from_index,
    canonical_index,
    format_blade,
    geometric_product,
    grade_projection,
    linear_combine,
    make_algebra,
    outer_product,
    scalar_part,
)
from .qra import (
    Gate,
    QraContext,
    RegisterState,
    amplitudes_from_state,
    apply,
    bra,
    dyad,
    gate_from_matrix,
    ket,
    new_context,
    not_gate,
    state_to_multivector,
    swap_gate,
)
from .script import evaluate, format_outputs, parse_definition, parse_script

__version__ = "0.1.0"
