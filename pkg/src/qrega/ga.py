"""Geometric algebra kernel over an arbitrary diagonal signature.

Blades are encoded as integer bit masks: bit ``i`` set means generator
``i + 1`` is present. Generators inside a blade are always kept in ascending
order, so a mask fully identifies a basis element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Blade = int


class AlgebraMismatchError(ValueError):
    """Raised when combining multivectors from different algebras."""


@dataclass(frozen=True)
class Algebra:
    squares: tuple[int, ...]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.squares) == 0:
            raise ValueError("an algebra needs at least one generator")
        if len(self.squares) != len(self.names):
            raise ValueError(
                f"{len(self.squares)} squares given for {len(self.names)} names"
            )
        for sq in self.squares:
            if sq not in (1, -1):
                raise ValueError(f"generator square must be +1 or -1, got {sq!r}")
        for name in self.names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"invalid generator name {name!r}")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {list(self.names)}")

    @property
    def dimension(self) -> int:
        return len(self.squares)

    @property
    def size(self) -> int:
        """Number of basis blades, ``2**dimension``."""
        return 1 << self.dimension

    @property
    def signature(self) -> tuple[int, int]:
        p = sum(1 for s in self.squares if s == 1)
        return p, self.dimension - p

    def generator(self, name_or_index: str | int) -> "Multivector":
        """Grade-1 multivector for a generator, by name or 1-based index."""
        if isinstance(name_or_index, str):
            try:
                i = self.names.index(name_or_index)
            except ValueError:
                raise KeyError(f"unknown generator {name_or_index!r}") from None
        else:
            i = name_or_index - 1
            if not 0 <= i < self.dimension:
                raise IndexError(f"generator index {name_or_index} out of range")
        return Multivector(self, {1 << i: 1.0})

    def generators(self) -> list["Multivector"]:
        return [Multivector(self, {1 << i: 1.0}) for i in range(self.dimension)]

    def scalar(self, value: float) -> "Multivector":
        return Multivector(self, {0: float(value)})

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def blade(self, *names: str) -> "Multivector":
        """Unit blade from generator names, multiplied in the order given."""
        out = self.scalar(1.0)
        for name in names:
            out = out * self.generator(name)
        return out

    def basis(self) -> list[Blade]:
        """All blades in canonical display order."""
        return list(_index_tables(self.dimension)[1])


def make_algebra(squares: Sequence[int], names: Sequence[str]) -> Algebra:
    return Algebra(tuple(int(s) for s in squares), tuple(names))


def _reorder_sign(a: Blade, b: Blade) -> int:
    # Counts transpositions needed to merge the generator words of a and b
    # into ascending order: every generator of a sits left of each lower
    # generator of b.
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def _negative_mask(squares: tuple[int, ...]) -> int:
    return sum(1 << i for i, s in enumerate(squares) if s == -1)


def blade_product(a: Blade, b: Blade, algebra: Algebra) -> tuple[int, Blade]:
    """Sign and resulting blade of the geometric product of two unit blades."""
    sign = _reorder_sign(a, b)
    if (a & b & _negative_mask(algebra.squares)).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


def grade(b: Blade) -> int:
    return b.bit_count()


def blade_indices(b: Blade) -> tuple[int, ...]:
    """1-based generator numbers present in the blade, ascending."""
    out = []
    i = 1
    while b:
        if b & 1:
            out.append(i)
        b >>= 1
        i += 1
    return tuple(out)


def _check_blade(b: Blade, n: int) -> None:
    if not 0 <= b < (1 << n):
        raise ValueError(f"blade mask {b} invalid for {n} generators")


class Multivector:
    """Immutable sparse real combination of blades."""

    __slots__ = ("_algebra", "_terms")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, algebra: Algebra, terms: Mapping[Blade, float] | None = None):
        n = algebra.dimension
        clean: dict[Blade, float] = {}
        if terms:
            for b, c in terms.items():
                _check_blade(b, n)
                c = float(c)
                if c != 0.0:
                    clean[b] = c
        self._algebra = algebra
        self._terms = clean

    @classmethod
    def _trusted(cls, algebra: Algebra, terms: dict[Blade, float]) -> "Multivector":
        # Internal fast path; caller guarantees valid blades and no zeros.
        mv = object.__new__(cls)
        mv._algebra = algebra
        mv._terms = terms
        return mv

    @property
    def algebra(self) -> Algebra:
        return self._algebra

    @property
    def terms(self) -> Mapping[Blade, float]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, blade: Blade) -> float:
        return self._terms.get(blade, 0.0)

    def coordinates(self) -> list[tuple[int, float, Blade]]:
        """Nonzero ``(canonical index, coefficient, blade)`` in index order."""
        n = self._algebra.dimension
        rows = [(canonical_index(b, n), c, b) for b, c in self._terms.items()]
        rows.sort()
        return rows

    def _coerce(self, other: object) -> "Multivector | None":
        if isinstance(other, Multivector):
            if other._algebra != self._algebra:
                raise AlgebraMismatchError("operands belong to different algebras")
            return other
        if isinstance(other, (int, float)):
            return self._algebra.scalar(other)
        return None

    def __add__(self, other: object) -> "Multivector":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return linear_combine(1.0, self, 1.0, o)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Multivector":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return linear_combine(1.0, self, -1.0, o)

    def __rsub__(self, other: object) -> "Multivector":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return linear_combine(1.0, o, -1.0, self)

    def __neg__(self) -> "Multivector":
        return Multivector._trusted(
            self._algebra, {b: -c for b, c in self._terms.items()}
        )

    def __pos__(self) -> "Multivector":
        return self

    def __mul__(self, other: object) -> "Multivector":
        if isinstance(other, (int, float)):
            return self.scaled(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return geometric_product(self, o)

    def __rmul__(self, other: object) -> "Multivector":
        if isinstance(other, (int, float)):
            return self.scaled(other)
        return NotImplemented

    def __xor__(self, other: object) -> "Multivector":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return outer_product(self, o)

    def __rxor__(self, other: object) -> "Multivector":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return outer_product(o, self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, float)):
            other = self._algebra.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._algebra == other._algebra and self._terms == other._terms

    def scaled(self, k: float) -> "Multivector":
        k = float(k)
        if k == 0.0:
            return self._algebra.zero()
        return Multivector(self._algebra, {b: k * c for b, c in self._terms.items()})

    def pruned(self, tol: float = 0.0) -> "Multivector":
        """Drop coefficients with magnitude at or below ``tol``."""
        if tol < 0:
            raise ValueError("tolerance must be non-negative")
        return Multivector._trusted(
            self._algebra, {b: c for b, c in self._terms.items() if abs(c) > tol}
        )

    def grade(self, k: int) -> "Multivector":
        return grade_projection(self, k)

    def scalar_part(self) -> float:
        return self._terms.get(0, 0.0)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for _, c, b in self.coordinates():
            if b == 0:
                parts.append(repr(c))
            else:
                word = "".join(self._algebra.names[i - 1] for i in blade_indices(b))
                parts.append(f"{c!r}*{word}")
        return " + ".join(parts)


def _same_algebra(x: Multivector, y: Multivector) -> Algebra:
    if x.algebra != y.algebra:
        raise AlgebraMismatchError("operands belong to different algebras")
    return x.algebra


def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    alg = _same_algebra(x, y)
    neg = _negative_mask(alg.squares)
    out: dict[Blade, float] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            c = ca * cb
            if _reorder_sign(a, b) < 0:
                c = -c
            if (a & b & neg).bit_count() & 1:
                c = -c
            k = a ^ b
            out[k] = out.get(k, 0.0) + c
    return Multivector._trusted(alg, {b: c for b, c in out.items() if c != 0.0})


def outer_product(x: Multivector, y: Multivector) -> Multivector:
    alg = _same_algebra(x, y)
    out: dict[Blade, float] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            if a & b:
                continue
            c = ca * cb if _reorder_sign(a, b) > 0 else -(ca * cb)
            k = a | b
            out[k] = out.get(k, 0.0) + c
    return Multivector._trusted(alg, {b: c for b, c in out.items() if c != 0.0})


def linear_combine(
    coeff_x: float, x: Multivector, coeff_y: float, y: Multivector
) -> Multivector:
    alg = _same_algebra(x, y)
    out: dict[Blade, float] = {}
    for b, c in x._terms.items():
        out[b] = coeff_x * c
    for b, c in y._terms.items():
        out[b] = out.get(b, 0.0) + coeff_y * c
    return Multivector._trusted(alg, {b: c for b, c in out.items() if c != 0.0})


def grade_projection(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= x.algebra.dimension:
        raise ValueError(f"grade {k} out of range 0..{x.algebra.dimension}")
    return Multivector._trusted(
        x.algebra, {b: c for b, c in x._terms.items() if b.bit_count() == k}
    )


def scalar_part(x: Multivector) -> float:
    return x.scalar_part()


def approx_equal(x: Multivector, y: Multivector, tol: float = 1e-12) -> bool:
    _same_algebra(x, y)
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    diff = linear_combine(1.0, x, -1.0, y)
    return all(abs(c) <= tol for c in diff._terms.values())


def product_of(factors: Iterable[Multivector], algebra: Algebra) -> Multivector:
    """Left-folded geometric product; the empty product is 1."""
    out = algebra.scalar(1.0)
    for f in factors:
        out = geometric_product(out, f)
    return out


@lru_cache(maxsize=32)
def _index_tables(n: int) -> tuple[dict[Blade, int], tuple[Blade, ...]]:
    order: list[Blade] = []
    for g in range(n + 1):
        for combo in combinations(range(n), g):
            order.append(sum(1 << i for i in combo))
    return {b: i for i, b in enumerate(order)}, tuple(order)


def _combinatorial_rank(b: Blade, n: int) -> int:
    idx = blade_indices(b)
    k = len(idx)
    rank = sum(comb(n, g) for g in range(k))
    prev = 0
    for pos, v in enumerate(idx):
        for skipped in range(prev + 1, v):
            rank += comb(n - skipped, k - pos - 1)
        prev = v
    return rank


def _combinatorial_unrank(index: int, n: int) -> Blade:
    k = 0
    while index >= comb(n, k):
        index -= comb(n, k)
        k += 1
    mask = 0
    v = 1
    for pos in range(k):
        while index >= comb(n - v, k - pos - 1):
            index -= comb(n - v, k - pos - 1)
            v += 1
        mask |= 1 << (v - 1)
        v += 1
    return mask


def canonical_index(b: Blade, n: int) -> int:
    """Grade-major, lexicographic-minor rank of a blade among all ``2**n``."""
    _check_blade(b, n)
    if n <= 16:
        return _index_tables(n)[0][b]
    return _combinatorial_rank(b, n)


def blade_from_index(index: int, n: int) -> Blade:
    if not 0 <= index < (1 << n):
        raise ValueError(f"index {index} out of range for {n} generators")
    if n <= 16:
        return _index_tables(n)[1][index]
    return _combinatorial_unrank(index, n)


def format_blade(b: Blade, algebra: Algebra) -> str:
    """Right-nested wedge rendering, e.g. ``e1 ^ (e2 ^ e3)``; scalar is ``1.0``."""
    _check_blade(b, algebra.dimension)
    names = [algebra.names[i - 1] for i in blade_indices(b)]
    if not names:
        return "1.0"
    text = names[-1]
    for depth, name in enumerate(reversed(names[:-1])):
        text = f"{name} ^ {text}" if depth == 0 else f"{name} ^ ({text})"
    return text
