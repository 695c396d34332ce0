"""Plain complex-matrix state-vector simulator.

Kept free of any geometric-algebra code so that agreement with the
multivector path is independent evidence. Qubit 1 is the most significant
bit of a basis index, so it is the leftmost Kronecker factor.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

GATE_NAMES = ("NOT", "SWAP", "H", "CNOT")


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def mat_apply(m, v) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if v.ndim != 1 or v.shape[0] != m.shape[1]:
        raise ValueError(
            f"state of length {v.shape[0] if v.ndim == 1 else v.shape} "
            f"does not match {m.shape[1]} columns"
        )
    return m @ v


def basis_state(n: int, index: int) -> np.ndarray:
    v = np.zeros(1 << n, dtype=complex)
    v[index] = 1.0
    return v


def single_qubit_gate(u, n: int, qubit: int) -> np.ndarray:
    """Place a 2x2 matrix on ``qubit`` (1-based) of an ``n``-qubit register."""
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range 1..{n}")
    factors = [I2] * n
    factors[qubit - 1] = np.asarray(u, dtype=complex)
    return reduce(kron, factors)


def _bit(index: int, qubit: int, n: int) -> int:
    return (index >> (n - qubit)) & 1


def permutation_gate(n: int, mapping) -> np.ndarray:
    """Matrix sending basis state ``j`` to ``mapping(j)``."""
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        m[mapping(j), j] = 1.0
    return m


def gate_matrix(name: str, n: int, targets=()) -> np.ndarray:
    """Standard gate on an ``n``-qubit register.

    ``targets`` are 1-based qubit numbers: one for NOT/H, two for SWAP,
    ``(control, target)`` for CNOT. Empty targets mean the natural default
    (qubit 1, or qubits 1 and 2).
    """
    name = name.upper()
    targets = tuple(targets)
    if n < 1:
        raise ValueError("need at least one qubit")
    if name in ("NOT", "H"):
        (q,) = targets or (1,)
        return single_qubit_gate(X if name == "NOT" else H, n, q)
    if name not in ("SWAP", "CNOT"):
        raise ValueError(f"unknown gate {name!r}; expected one of {GATE_NAMES}")
    if len(targets) not in (0, 2):
        raise ValueError(f"{name} needs two qubits, got {targets}")
    a, b = targets or (1, 2)
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError(f"bad qubit pair {(a, b)} for n={n}")
    if name == "SWAP":

        def swap(j: int) -> int:
            if _bit(j, a, n) == _bit(j, b, n):
                return j
            return j ^ (1 << (n - a)) ^ (1 << (n - b))

        return permutation_gate(n, swap)

    def cnot(j: int) -> int:
        return j ^ (1 << (n - b)) if _bit(j, a, n) else j

    return permutation_gate(n, cnot)
