import hashlib
import unittest

import pytest

from qhom.core.algebra import (
    QUANDLE,
    QUASIGROUP,
    RACK,
    SHELF,
    FiniteQuandle,
    alexander,
    dihedral,
    from_table,
    trivial_op,
    validate,
)
from qhom.core.errors import AxiomError, TableError


class AxiomReportTests(unittest.TestCase):
    def test_dihedral_three_is_a_quasigroup_quandle(self) -> None:
        report = validate(dihedral(3).op)

        for name in (SHELF, RACK, QUANDLE, QUASIGROUP):
            self.assertTrue(report.passed(name), msg=name)
        self.assertIsNone(report.first_failure())

    def test_dihedral_four_fails_only_quasigroup(self) -> None:
        report = validate(dihedral(4).op)

        self.assertTrue(report.all_required_passed)
        check = report.get(QUASIGROUP)
        self.assertFalse(check.passed)
        self.assertFalse(check.required)
        self.assertEqual(check.witness, (0, 1))

    def test_constant_table_reports_first_rack_and_quandle_witness(self) -> None:
        op = from_table(2, [[0, 0], [0, 0]])
        report = validate(op)

        self.assertTrue(report.passed(SHELF))
        self.assertEqual(report.get(RACK).witness, (0, 1, 0))
        self.assertEqual(report.get(QUANDLE).witness, (1,))
        self.assertEqual(report.first_failure().name, RACK)

    def test_non_distributive_table_carries_shelf_witness(self) -> None:
        # a*b = a + 1 (mod 3) except 0*0 = 0
        op = from_table(3, [[0, 1, 1], [2, 2, 2], [0, 0, 0]])
        check = validate(op).get(SHELF)

        self.assertFalse(check.passed)
        a, b, c = check.witness
        self.assertNotEqual(op(op(a, b), c), op(op(a, c), op(b, c)))

    def test_report_serializes_every_check(self) -> None:
        data = validate(dihedral(4).op).to_dict()

        names = [entry["name"] for entry in data["checks"]]
        self.assertEqual(names, [SHELF, RACK, QUANDLE, QUASIGROUP])
        self.assertEqual(data["checks"][3]["witness"], [0, 1])


class FromTableTests(unittest.TestCase):
    def test_rejects_ragged_rows(self) -> None:
        with self.assertRaises(TableError) as caught:
            from_table(2, [[0, 1], [1]])
        self.assertIn("dimension mismatch", str(caught.exception))
        self.assertEqual(caught.exception.row, 1)

    def test_rejects_out_of_range_entries(self) -> None:
        with self.assertRaises(TableError) as caught:
            from_table(2, [[0, 1], [2, 1]])
        self.assertIn("entry out of range", str(caught.exception))
        self.assertEqual((caught.exception.row, caught.exception.col), (1, 0))

    def test_trivial_operation(self) -> None:
        op = trivial_op(3)
        self.assertTrue(op.is_trivial)
        self.assertEqual(op(2, 0), 2)


def test_quandle_constructor_rejects_non_quandles() -> None:
    with pytest.raises(AxiomError) as caught:
        FiniteQuandle.from_op(from_table(2, [[0, 0], [0, 0]]), "constant")
    assert caught.value.check is not None
    assert caught.value.check.name == RACK


def test_right_and_left_division() -> None:
    q = alexander(5, 2)
    for a in range(5):
        for b in range(5):
            assert q(q.right_divide(a, b), b) == a
            assert q(a, q.left_divide(a, b)) == b


def test_left_division_needs_a_quasigroup() -> None:
    with pytest.raises(AxiomError):
        dihedral(4).left_divide(0, 1)


def test_table_hash_binds_exact_entries() -> None:
    op = dihedral(3).op

    assert op.sha256 == hashlib.sha256(op.to_text().encode("utf-8")).hexdigest()
    assert op.sha256 != dihedral(5).op.sha256
