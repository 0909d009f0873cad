import unittest
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhom.core.chains import (
    Chain,
    degenerate_tuples,
    is_degenerate,
    nondegenerate_count,
    nondegenerate_tuples,
    rank,
    tuples,
    unrank,
)
from qhom.core.errors import DegreeError


@st.composite
def sized_tuples(draw) -> tuple[int, tuple[int, ...]]:
    size = draw(st.integers(min_value=1, max_value=7))
    degree = draw(st.integers(min_value=1, max_value=4))
    entries = draw(st.lists(st.integers(min_value=0, max_value=size - 1), min_size=degree, max_size=degree))
    return size, tuple(entries)


@given(sized_tuples())
def test_unrank_inverts_rank(case: tuple[int, tuple[int, ...]]) -> None:
    size, t = case
    assert unrank(rank(t, size), size, len(t)) == t


def test_rank_follows_lexicographic_order() -> None:
    assert [rank(t, 4) for t in tuples(4, 3)] == list(range(64))
    assert unrank(7, 3, 2) == (2, 1)


def test_unrank_rejects_indices_outside_the_basis() -> None:
    with pytest.raises(IndexError):
        unrank(9, 3, 2)


@pytest.mark.parametrize(
    ("t", "expected"),
    [((0, 0, 1), True), ((0, 1, 0), False), ((4,), False), ((1, 2, 2), True)],
)
def test_is_degenerate(t: tuple[int, ...], expected: bool) -> None:
    assert is_degenerate(t) is expected


def test_degenerate_and_nondegenerate_tuples_partition_the_basis() -> None:
    for size, degree in product(range(1, 5), range(1, 4)):
        degenerate = set(degenerate_tuples(size, degree))
        nondegenerate = set(nondegenerate_tuples(size, degree))

        assert not degenerate & nondegenerate
        assert len(degenerate) + len(nondegenerate) == size**degree
        assert len(nondegenerate) == nondegenerate_count(size, degree)


class ChainTests(unittest.TestCase):
    def test_zero_coefficients_are_not_stored(self) -> None:
        chain = Chain(2, {(0, 1): 3, (1, 0): 0})

        self.assertEqual(len(chain), 1)
        self.assertEqual(chain.support(), [(0, 1)])
        self.assertEqual(chain.coefficient((1, 0)), 0)

    def test_arithmetic_cancels_terms(self) -> None:
        a = Chain(2, {(0, 1): 2, (1, 2): -1})
        b = Chain(2, {(0, 1): 2, (2, 2): 5})

        self.assertEqual(a - b, Chain(2, {(1, 2): -1, (2, 2): -5}))
        self.assertFalse(a - a)
        self.assertEqual(3 * a, a + a + a)
        self.assertEqual(-a + a, Chain.zero(2))

    def test_from_pairs_sums_repeated_tuples(self) -> None:
        chain = Chain.from_pairs(1, [((0,), 1), ((0,), 2), ((1,), -1), ((1,), 1)])

        self.assertEqual(chain.items(), [((0,), 3)])

    def test_mismatched_degrees_are_rejected(self) -> None:
        with self.assertRaises(DegreeError):
            Chain(2, {(0, 1, 2): 1})
        with self.assertRaises(DegreeError):
            Chain.basis((0, 1)) + Chain.basis((0,))
        with self.assertRaises(DegreeError):
            Chain(-1)

    def test_map_linear_extends_basis_images(self) -> None:
        chain = Chain(2, {(0, 1): 2, (1, 1): -1})

        image = chain.map_linear(1, lambda t: Chain.basis((t[0],)) - Chain.basis((t[1],)))

        self.assertEqual(image, Chain(1, {(0,): 2, (1,): -2}))

    def test_text_rendering(self) -> None:
        self.assertEqual(str(Chain(2, {(1, 2): -2, (0, 1): 1})), "(0,1) - 2(1,2)")
        self.assertEqual(str(Chain(3, {(2, 0, 1): -1})), "-(2,0,1)")
        self.assertEqual(str(Chain.zero(1)), "0")

    def test_to_dict_lists_sorted_terms(self) -> None:
        chain = Chain(1, {(2,): 1, (0,): -4})

        self.assertEqual(chain.to_dict(), {"degree": 1, "terms": [[[0], -4], [[2], 1]]})
