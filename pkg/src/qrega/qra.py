"""Quantum register algebra: qubit registers hosted in a real geometric algebra.

An ``n``-qubit register lives in the algebra with generators
``e1..e{2n}, er1, er2``, all squaring to +1. The bivector ``er1*er2`` squares
to -1 and commutes with every ``e_k``, so it stands in for the imaginary unit.
States are multivectors of the form ``(sum of Witt monomials) * I`` and gates
act on them by the geometric product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import oracle
from .ga import Algebra, Multivector, geometric_product, make_algebra, product_of

MAX_QUBITS = 6


def qra_generator_names(n: int) -> list[str]:
    return [f"e{k}" for k in range(1, 2 * n + 1)] + ["er1", "er2"]


def bits_of(index: int, n: int) -> tuple[int, ...]:
    """Bits ``(a1, ..., an)`` of a basis index, ``a1`` most significant."""
    if not 0 <= index < (1 << n):
        raise ValueError(f"basis index {index} out of range for {n} qubits")
    return tuple((index >> (n - 1 - k)) & 1 for k in range(n))


def index_of(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out


@dataclass(frozen=True)
class QraContext:
    n: int
    algebra: Algebra
    iota: Multivector = field(compare=False, repr=False)
    witt_f: tuple[Multivector, ...] = field(compare=False, repr=False)
    witt_f_dagger: tuple[Multivector, ...] = field(compare=False, repr=False)
    proj_I: Multivector = field(compare=False, repr=False)

    def e(self, k: int) -> Multivector:
        return self.algebra.generator(k)

    def f(self, i: int) -> Multivector:
        return self.witt_f[i - 1]

    def f_dagger(self, i: int) -> Multivector:
        return self.witt_f_dagger[i - 1]

    def complex_scalar(self, z: complex) -> Multivector:
        """``re + im * iota`` as a multivector."""
        z = complex(z)
        return self.algebra.scalar(z.real) + self.iota.scaled(z.imag)


@lru_cache(maxsize=None)
def new_context(n: int) -> QraContext:
    if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {n!r}")
    names = qra_generator_names(n)
    alg = make_algebra([1] * len(names), names)
    iota = alg.generator("er1") * alg.generator("er2")
    f, fd = [], []
    for i in range(1, n + 1):
        ie = iota * alg.generator(i + n)
        f.append((alg.generator(i) + ie).scaled(0.5))
        fd.append((alg.generator(i) - ie).scaled(0.5))
    factors = []
    for i in range(n):
        factors += [f[i], fd[i]]
    proj = product_of(factors, alg)
    return QraContext(n, alg, iota, tuple(f), tuple(fd), proj)


def iota(ctx: QraContext) -> Multivector:
    return ctx.iota


def _check_bits(ctx: QraContext, bits: Sequence[int]) -> tuple[int, ...]:
    bits = tuple(bits)
    if len(bits) != ctx.n:
        raise ValueError(f"expected {ctx.n} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1, got {bits}")
    return bits


def ket(ctx: QraContext, bits: Sequence[int]) -> Multivector:
    bits = _check_bits(ctx, bits)
    factors = [ctx.witt_f_dagger[i] for i, a in enumerate(bits) if a]
    return product_of(factors + [ctx.proj_I], ctx.algebra)


def bra(ctx: QraContext, bits: Sequence[int]) -> Multivector:
    bits = _check_bits(ctx, bits)
    factors = [ctx.witt_f[i] for i in reversed(range(ctx.n)) if bits[i]]
    return product_of([ctx.proj_I] + factors, ctx.algebra)


@lru_cache(maxsize=None)
def _ket_at(ctx: QraContext, index: int) -> Multivector:
    return ket(ctx, bits_of(index, ctx.n))


@lru_cache(maxsize=None)
def _bra_at(ctx: QraContext, index: int) -> Multivector:
    return bra(ctx, bits_of(index, ctx.n))


@lru_cache(maxsize=None)
def _dyad_pair(ctx: QraContext, i: int, j: int) -> tuple[Multivector, Multivector]:
    d = geometric_product(_ket_at(ctx, i), _bra_at(ctx, j))
    return d, geometric_product(ctx.iota, d)


def dyad(ctx: QraContext, i: int, j: int) -> Multivector:
    """The operator ``|i><j|`` for 0-based basis indices."""
    dim = 1 << ctx.n
    if not (0 <= i < dim and 0 <= j < dim):
        raise ValueError(f"dyad indices ({i}, {j}) out of range 0..{dim - 1}")
    return _dyad_pair(ctx, i, j)[0]


@dataclass(frozen=True)
class RegisterState:
    context: QraContext
    amplitudes: tuple[complex, ...]

    def __post_init__(self) -> None:
        amps = tuple(complex(a) for a in self.amplitudes)
        if len(amps) != 1 << self.context.n:
            raise ValueError(
                f"{len(amps)} amplitudes given for {self.context.n} qubits"
            )
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, ctx: QraContext, bits: Sequence[int]) -> "RegisterState":
        amps = [0j] * (1 << ctx.n)
        amps[index_of(_check_bits(ctx, bits))] = 1
        return cls(ctx, tuple(amps))

    def to_multivector(self) -> Multivector:
        return state_to_multivector(self)


@dataclass(frozen=True)
class Gate:
    context: QraContext
    mv: Multivector

    def __call__(self, s: RegisterState) -> RegisterState:
        return apply(self, s)

    def then(self, other: "Gate") -> "Gate":
        """Gate applying ``self`` first and ``other`` second."""
        if other.context != self.context:
            raise ValueError("gates belong to different registers")
        return Gate(self.context, geometric_product(other.mv, self.mv))


def _accumulate(ctx: QraContext, weighted) -> Multivector:
    # weighted: iterable of (z, (mv, iota*mv)); adds re(z)*mv + im(z)*iota*mv
    out: dict[int, float] = {}
    for z, (plain, rotated) in weighted:
        for part, k in ((plain, z.real), (rotated, z.imag)):
            if k == 0.0:
                continue
            for b, c in part.terms.items():
                out[b] = out.get(b, 0.0) + k * c
    return Multivector(ctx.algebra, out)


def state_to_multivector(s: RegisterState) -> Multivector:
    ctx = s.context
    weighted = []
    for k, z in enumerate(s.amplitudes):
        if z != 0:
            kt = _ket_at(ctx, k)
            weighted.append((z, (kt, geometric_product(ctx.iota, kt))))
    return _accumulate(ctx, weighted)


def amplitudes_from_state(ctx: QraContext, mv: Multivector) -> list[complex]:
    """Read amplitudes back off a state multivector.

    Uses ``<k|psi> = (re_k + im_k iota) I`` together with
    ``scalar(I) = 2**-n`` and ``scalar(iota I) = 0``. Components outside the
    span of the embedded kets are projected away.
    """
    if mv.algebra != ctx.algebra:
        raise ValueError("multivector does not belong to this register's algebra")
    scale = float(1 << ctx.n)
    out = []
    for k in range(1 << ctx.n):
        c = geometric_product(_bra_at(ctx, k), mv)
        re = scale * c.scalar_part()
        im = -scale * geometric_product(c, ctx.iota).scalar_part()
        # + 0.0 turns -0.0 into 0.0
        out.append(complex(re + 0.0, im + 0.0))
    return out


def gate_from_matrix(ctx: QraContext, m) -> Gate:
    m = np.asarray(m, dtype=complex)
    dim = 1 << ctx.n
    if m.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
    weighted = [
        (complex(m[i, j]), _dyad_pair(ctx, i, j))
        for i in range(dim)
        for j in range(dim)
        if m[i, j] != 0
    ]
    return Gate(ctx, _accumulate(ctx, weighted))


def swap_gate(ctx: QraContext) -> Gate:
    """Closed-form two-qubit SWAP written in the Witt basis."""
    if ctx.n != 2:
        raise ValueError("closed-form SWAP is defined for 2 qubits; use gate_from_matrix")
    f1, f2 = ctx.witt_f
    f1d, f2d = ctx.witt_f_dagger
    mv = f1 * f1d * f2 * f2d + f1d * f2 - f1 * f2d + f1d * f1 * f2d * f2
    return Gate(ctx, mv)


def not_gate(ctx: QraContext, qubit: int = 1) -> Gate:
    if not 1 <= qubit <= ctx.n:
        raise ValueError(f"qubit {qubit} out of range 1..{ctx.n}")
    return gate_from_matrix(ctx, oracle.gate_matrix("NOT", ctx.n, (qubit,)))


def named_gate(ctx: QraContext, name: str, targets: Sequence[int] = ()) -> Gate:
    return gate_from_matrix(ctx, oracle.gate_matrix(name, ctx.n, targets))


def apply(g: Gate, s: RegisterState) -> RegisterState:
    if g.context != s.context:
        raise ValueError("gate and state belong to different registers")
    out = geometric_product(g.mv, state_to_multivector(s))
    return RegisterState(s.context, tuple(amplitudes_from_state(s.context, out)))


def identity_checks(ctx: QraContext):
    """Yield ``(label, holds)`` for the algebraic rules the register relies on.

    Every check is exact multivector equality.
    """
    alg = ctx.algebra
    one, zero = alg.scalar(1.0), alg.zero()
    I = ctx.proj_I
    io = ctx.iota
    yield "iota^2 = -1", io * io == -one
    # iota anticommutes with er1 and er2 alone; it commutes with the e-blades
    yield "iota central", all(
        io * b == b * io
        for b in (Multivector(alg, {m: 1.0}) for m in range(1 << (2 * ctx.n)))
    )
    yield "I^2 = I", I * I == I
    for i in range(1, ctx.n + 1):
        f, fd = ctx.f(i), ctx.f_dagger(i)
        yield f"f_{i} I = 0", f * I == zero
        yield f"f_{i} f_{i}^+ I = I", f * fd * I == I
        yield f"f_{i}^2 = 0", f * f == zero
        yield f"(f_{i}^+)^2 = 0", fd * fd == zero
        yield f"f_{i} f_{i}^+ f_{i} = f_{i}", f * fd * f == f
        yield f"f_{i}^+ f_{i} f_{i}^+ = f_{i}^+", fd * f * fd == fd
        for j in range(i + 1, ctx.n + 1):
            g, gd = ctx.f(j), ctx.f_dagger(j)
            yield f"f_{i} f_{j} = -f_{j} f_{i}", f * g == -(g * f)
            yield f"f_{i}^+ f_{j}^+ = -f_{j}^+ f_{i}^+", fd * gd == -(gd * fd)
