import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrega.ga import (
    AlgebraMismatchError,
    Multivector,
    _combinatorial_rank,
    _combinatorial_unrank,
    approx_equal,
    blade_from_index,
    blade_indices,
    blade_product,
    canonical_index,
    format_blade,
    geometric_product,
    grade_projection,
    linear_combine,
    make_algebra,
    outer_product,
    product_of,
    scalar_part,
)

from conftest import algebras, multivectors

QRA2 = make_algebra([1] * 6, ["e1", "e2", "e3", "e4", "er1", "er2"])


def word_product(word, squares):
    """Reduce a generator word by adjacent transpositions and cancellation.

    Independent of the bitmask kernel: bubble sort counts swaps of distinct
    neighbours, then equal neighbours collapse to their square.
    """
    word = list(word)
    sign = 1
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a > b:
                word[k], word[k + 1] = b, a
                sign = -sign
                changed = True
            elif a == b:
                sign *= squares[a - 1]
                del word[k : k + 2]
                changed = True
                break
    return sign, tuple(word)


def mask_of(indices):
    return sum(1 << (i - 1) for i in indices)


# --- construction ---------------------------------------------------------


def test_make_algebra_g11(g11):
    assert g11.dimension == 2
    assert g11.signature == (1, 1)
    assert [format_blade(b, g11) for b in g11.basis()] == ["1.0", "e1", "e2", "e1 ^ e2"]


def test_smallest_algebras():
    a = make_algebra([1], ["e1"])
    assert a.size == 2
    c = make_algebra([-1], ["e1"])
    e1 = c.generator("e1")
    assert e1 * e1 == c.scalar(-1)


@pytest.mark.parametrize(
    "squares, names",
    [
        ([1, 1], ["e1", "e1"]),
        ([1, 1], ["e1", ""]),
        ([1], ["e1", "e2"]),
        ([2], ["e1"]),
        ([], []),
    ],
)
def test_make_algebra_rejects(squares, names):
    with pytest.raises(ValueError):
        make_algebra(squares, names)


def test_zero_coefficients_are_dropped(g11):
    mv = Multivector(g11, {0: 0.0, 1: 2.0})
    assert dict(mv.terms) == {1: 2.0}
    with pytest.raises(TypeError):
        mv.terms[2] = 1.0


def test_invalid_blade_rejected(g11):
    with pytest.raises(ValueError):
        Multivector(g11, {4: 1.0})


# --- products ---------------------------------------------------------------


def test_worked_word_rewrite(g11):
    e1, e2 = g11.generators()
    assert product_of([e2, e1, e2, e1, e1, e2, e2], g11) == -e1


def test_worked_product(g11):
    e1, e2 = g11.generators()
    one = g11.scalar(1)
    lhs = (e1 + 2 * (e1 * e2)) * (one + e1 - 3 * e2)
    assert lhs == one + 7 * e1 - 2 * e2 - e1 * e2


def test_unit_is_neutral(g11):
    x = Multivector(g11, {0: 0.5, 1: -2.0, 3: 0.25})
    assert g11.scalar(1) * x == x
    assert x * g11.scalar(1) == x


def test_outer_examples(g11):
    e1, e2 = g11.generators()
    assert (e1 ^ e2) == Multivector(g11, {0b11: 1.0})
    assert not (e1 ^ e1)


def test_outer_of_vectors_matches_antisymmetric_part(g11):
    e1, e2 = g11.generators()
    a, b = e1 + e2, e2
    antisym = (a * b - b * a).scaled(0.5)
    assert outer_product(a, b) == antisym
    assert outer_product(a, b) == Multivector(g11, {0b11: 1.0})


def test_linear_combine_examples(g11):
    e1 = g11.generator("e1")
    x = Multivector(g11, {0: 1.5, 2: -0.25})
    assert len(linear_combine(1, x, -1, x)) == 0
    assert linear_combine(2, e1, 3, e1) == 5 * e1
    assert linear_combine(0.5, e1, 0.5, e1) == e1


def test_mismatched_algebras(g11):
    other = make_algebra([1, 1], ["e1", "e2"])
    x, y = g11.generator(1), other.generator(1)
    for op in (geometric_product, outer_product):
        with pytest.raises(AlgebraMismatchError):
            op(x, y)
    with pytest.raises(AlgebraMismatchError):
        linear_combine(1, x, 1, y)
    with pytest.raises(AlgebraMismatchError):
        approx_equal(x, y, 0.0)


@pytest.mark.parametrize("n", range(1, 7))
def test_blade_sign_matches_word_rewriting(n):
    squares = [(-1) ** (i * 7 % 3) for i in range(n)]  # mixed signature
    alg = make_algebra(squares, [f"g{i}" for i in range(n)])
    for a in range(1 << n):
        for b in range(1 << n):
            sign, word = word_product(blade_indices(a) + blade_indices(b), squares)
            assert blade_product(a, b, alg) == (sign, mask_of(word))


@pytest.mark.parametrize("n", range(1, 7))
def test_outer_exhaustive(n):
    alg = make_algebra([1] * (n - 1) + [-1], [f"g{i}" for i in range(n)])
    for a in range(1 << n):
        for b in range(1 << n):
            x, y = Multivector(alg, {a: 1.0}), Multivector(alg, {b: 1.0})
            expected = alg.zero() if a & b else geometric_product(x, y)
            assert outer_product(x, y) == expected


@given(st.data())
def test_generator_identities(data):
    alg = data.draw(algebras())
    gens = alg.generators()
    for i, gi in enumerate(gens):
        assert gi * gi == alg.scalar(alg.squares[i])
        for gj in gens[i + 1 :]:
            assert gi * gj == -(gj * gi)


@settings(max_examples=200)
@given(st.data())
def test_associativity(data):
    alg = data.draw(algebras())
    x, y, z = (data.draw(multivectors(alg)) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=200)
@given(st.data())
def test_distributivity(data):
    alg = data.draw(algebras())
    x, y, z = (data.draw(multivectors(alg)) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (y + z) * x == y * x + z * x


# --- grading and indexing -----------------------------------------------------


def test_grade_projection_examples():
    x = Multivector(QRA2, {0: 0.25, 0b1111: 0.25})
    assert grade_projection(x, 0) == QRA2.scalar(0.25)
    assert grade_projection(x, 4) == Multivector(QRA2, {0b1111: 0.25})
    assert not grade_projection(QRA2.scalar(3), 1)
    with pytest.raises(ValueError):
        grade_projection(x, 7)
    with pytest.raises(ValueError):
        grade_projection(x, -1)


def test_scalar_part(g11):
    assert scalar_part(Multivector(g11, {0: 0.25, 1: 0.75})) == 0.25
    assert scalar_part(Multivector(g11, {3: 1.0})) == 0.0


@pytest.mark.parametrize(
    "names, index",
    [
        ((), 0),
        (("e1",), 1),
        (("e2",), 2),
        (("e1", "e2"), 7),
        (("e3", "e4"), 16),
        (("e1", "e3", "e4"), 26),
        (("e2", "e3", "e4"), 32),
        (("e3", "er1", "er2"), 40),
        (("e4", "er1", "er2"), 41),
        (("e1", "e2", "e3", "e4"), 42),
        (("e1", "e3", "er1", "er2"), 50),
        (("e1", "e4", "er1", "er2"), 51),
        (("e2", "e3", "er1", "er2"), 54),
        (("e2", "e4", "er1", "er2"), 55),
        (("e1", "e2", "e3", "er1", "er2"), 59),
        (("e1", "e2", "e4", "er1", "er2"), 60),
    ],
)
def test_listing_indices(names, index):
    mask = sum(1 << QRA2.names.index(n) for n in names)
    assert canonical_index(mask, 6) == index
    assert blade_from_index(index, 6) == mask


@pytest.mark.parametrize("n", range(1, 9))
def test_index_bijection(n):
    idx = [canonical_index(b, n) for b in range(1 << n)]
    assert sorted(idx) == list(range(1 << n))
    assert all(blade_from_index(i, n) == b for b, i in zip(range(1 << n), idx))
    # grade-major: index never decreases with grade
    by_index = sorted(range(1 << n), key=lambda b: canonical_index(b, n))
    assert [b.bit_count() for b in by_index] == sorted(b.bit_count() for b in by_index)


@pytest.mark.parametrize("n", range(1, 11))
def test_combinatorial_rank_matches_table(n):
    for b in range(1 << n):
        r = canonical_index(b, n)
        assert _combinatorial_rank(b, n) == r
        assert _combinatorial_unrank(r, n) == b


def test_large_dimension_uses_combinatorial_path():
    n = 20
    b = (1 << 3) | (1 << 7) | (1 << 19)
    assert blade_from_index(canonical_index(b, n), n) == b
    assert canonical_index((1 << n) - 1, n) == (1 << n) - 1


def test_lexicographic_minor_order():
    order = [blade_indices(blade_from_index(i, 5)) for i in range(1, 1 << 5)]
    for k in range(1, 6):
        group = [t for t in order if len(t) == k]
        assert group == list(itertools.combinations(range(1, 6), k))


@pytest.mark.parametrize(
    "names, text",
    [
        ((), "1.0"),
        (("e2",), "e2"),
        (("e1", "e2"), "e1 ^ e2"),
        (("e1", "e3", "e4"), "e1 ^ (e3 ^ e4)"),
        (("e1", "e2", "e4", "er1", "er2"), "e1 ^ (e2 ^ (e4 ^ (er1 ^ er2)))"),
    ],
)
def test_format_blade(names, text):
    mask = sum(1 << QRA2.names.index(n) for n in names)
    assert format_blade(mask, QRA2) == text


def test_approx_equal(g11):
    e1, e2 = g11.generators()
    x = Multivector(g11, {0: 1.0, 3: -0.5})
    assert approx_equal(x, x, 0)
    assert approx_equal(e1, e1.scaled(1.0000000001), 1e-9)
    assert not approx_equal(e1, e2, 1e-9)


def test_pruned(g11):
    x = Multivector(g11, {0: 1e-17, 1: 1.0})
    assert x.pruned(1e-15) == g11.generator(1)
    assert x.pruned() == x
