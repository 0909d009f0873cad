import unittest

from qhom.core.chains import SparseIntMatrix
from qhom.core.errors import ComposabilityError, TableError


class SparseIntMatrixTests(unittest.TestCase):
    def test_dense_round_trip_drops_zeros(self) -> None:
        matrix = SparseIntMatrix.from_dense([[0, 2, 0], [-1, 0, 0]])

        self.assertEqual(matrix.shape, (2, 3))
        self.assertEqual(matrix.nnz, 2)
        self.assertEqual(matrix.to_dense(), [[0, 2, 0], [-1, 0, 0]])

    def test_entries_are_sorted_by_row_then_column(self) -> None:
        matrix = SparseIntMatrix(3, 3, {(2, 0): 5, (0, 2): 1, (0, 1): -3})

        self.assertEqual(list(matrix.entries()), [(0, 1, -3), (0, 2, 1), (2, 0, 5)])

    def test_out_of_range_entries_are_rejected(self) -> None:
        with self.assertRaises(IndexError):
            SparseIntMatrix(2, 2, {(2, 0): 1})

    def test_multiply(self) -> None:
        a = SparseIntMatrix.from_dense([[1, 2], [0, 1]])
        b = SparseIntMatrix.from_dense([[3], [-1]])

        self.assertEqual((a @ b).to_dense(), [[1], [-1]])
        self.assertEqual(a.multiply(SparseIntMatrix.identity(2)), a)

    def test_incompatible_shapes_cannot_compose(self) -> None:
        with self.assertRaises(ComposabilityError):
            SparseIntMatrix(2, 3).multiply(SparseIntMatrix(2, 2))

    def test_first_nonzero_product_column(self) -> None:
        a = SparseIntMatrix.from_dense([[1, 1]])
        b = SparseIntMatrix.from_dense([[1, 1, 0], [-1, 0, 0]])

        self.assertEqual(a.first_nonzero_product_column(b), 1)
        self.assertIsNone(a.first_nonzero_product_column(SparseIntMatrix(2, 4)))

    def test_triplet_text(self) -> None:
        matrix = SparseIntMatrix(2, 3, {(1, 2): -7, (0, 0): 12345678901234567890})
        text = matrix.to_triplet_text()

        self.assertEqual(text, "2 3 2\n0 0 12345678901234567890\n1 2 -7\n")
        self.assertEqual(SparseIntMatrix.from_triplet_text(text), matrix)

    def test_triplet_text_with_wrong_entry_count(self) -> None:
        with self.assertRaises(TableError):
            SparseIntMatrix.from_triplet_text("2 2 2\n0 0 1\n")
