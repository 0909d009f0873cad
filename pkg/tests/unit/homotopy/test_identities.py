import unittest

import pytest

from qhom.core.algebra import alexander, dihedral
from qhom.core.chains import Chain, is_degenerate
from qhom.core.errors import BudgetError, DegreeError
from qhom.core.homotopy import (
    check_clause,
    plan_basis,
    summation_lemmas,
    verify_chain_maps,
    verify_composite_homotopy,
    verify_corollary_identities,
    verify_homotopy_identity_D,
    verify_homotopy_identity_F,
)

R3 = dihedral(3)
R4 = dihedral(4)
R5 = dihedral(5)


class QuasigroupIdentityTests(unittest.TestCase):
    def test_d_identity_holds_for_every_index(self) -> None:
        for q, top in ((R3, 4), (R5, 3)):
            for n in range(1, top + 1):
                for j in range(1, n + 1):
                    report = verify_homotopy_identity_D(q, j, n)
                    self.assertTrue(report.passed, (q.label, j, n))
                    self.assertFalse(report.sampled)
                    self.assertEqual(report.evaluated, q.size**n)

    def test_f_identity_and_its_anchors(self) -> None:
        for n in (3, 4):
            for j in range(1, n + 1):
                report = verify_homotopy_identity_F(R3, j, n)
                self.assertTrue(report.passed, (j, n))
                self.assertFalse(report.sampled)
                self.assertTrue(report.clause(f"anchor d_{j}^0 F^{j} = f_r^{j}").passed)
                self.assertTrue(report.clause(f"anchor d_{j}^1 F^{j} = f_s^{j - 1}").passed)

    def test_composite_identity(self) -> None:
        for q in (R3, R5, alexander(7, 3)):
            for n in (1, 2):
                self.assertTrue(verify_composite_homotopy(q, n).passed, (q.label, n))
        self.assertTrue(verify_composite_homotopy(R3, 4).passed)

    def test_f_r_and_f_s_are_chain_maps(self) -> None:
        report = verify_chain_maps(R3, 3)

        self.assertTrue(report.passed)
        self.assertEqual(len(report.clauses), 4)


class NonQuasigroupTests(unittest.TestCase):
    def test_left_translation_lemma_breaks(self) -> None:
        left, right = summation_lemmas(R4)

        self.assertFalse(left.passed)
        self.assertIsNotNone(left.witness)
        self.assertTrue(right.passed)

    def test_d_identity_fails_with_a_witness(self) -> None:
        report = verify_homotopy_identity_D(R4, 1, 2)

        self.assertFalse(report.passed)
        self.assertIsNotNone(report.first_witness())
        payload = report.to_dict()
        self.assertFalse(payload["passed"])
        self.assertEqual(payload["identity"], "D^1")


def test_corollary_ledger_and_index_variants() -> None:
    report = verify_corollary_identities(R3, 2)

    assert report.passed
    assert report.clause("faces collapse onto the D block").passed
    assert report.clause("faces collapse onto the F block").passed
    assert report.clause("star faces: d_(i+1)^1 D^i = d_(i+1)^1 F^(i+1)").passed
    assert report.clause("trivial faces: d_(i+1)^0 D^i = d_i^0 F^i").passed
    for name in ("variant: d_(i+1)^1 D^i = d_(i+1)^1 F^i", "variant: d_(i+1)^0 D^i = d_(i+1)^0 F^(i+1)"):
        variant = report.clause(name)
        assert not variant.asserted
        assert not variant.passed
        assert variant.witness is not None


def test_corollary_ledger_on_a_larger_quandle() -> None:
    assert verify_corollary_identities(R5, 3).passed


def test_check_clause_stops_at_the_first_failure() -> None:
    result = check_clause(
        "identity",
        [(0,), (1,), (2,)],
        [("id", lambda t: Chain.basis(t), lambda t: Chain.basis((0,)))],
    )

    assert not result.passed
    assert result.checked == 2
    assert result.witness is not None
    assert result.witness.basis_tuple == (1,)
    assert result.to_dict()["witness"]["lhs"] == {"degree": 1, "terms": [[[1], 1]]}


def test_degree_and_index_ranges() -> None:
    with pytest.raises(DegreeError):
        verify_homotopy_identity_D(R3, 3, 2)
    with pytest.raises(DegreeError):
        verify_composite_homotopy(R3, 0)


class SamplingTests(unittest.TestCase):
    def test_budget_without_sampling_refuses(self) -> None:
        with self.assertRaises(BudgetError):
            plan_basis(5, 6, budget=100)

    def test_seeded_sample_is_sorted_and_keeps_the_ends(self) -> None:
        plan = plan_basis(5, 6, budget=100, sample=True, seed=7)

        self.assertTrue(plan.sampled)
        self.assertEqual(len(plan.basis), 100)
        self.assertEqual(plan.basis[0], (0,) * 6)
        self.assertEqual(plan.basis[-1], (4,) * 6)
        self.assertEqual(list(plan.basis), sorted(plan.basis))
        self.assertEqual(plan, plan_basis(5, 6, budget=100, sample=True, seed=7))

    def test_sample_splits_evenly_between_degenerate_and_nondegenerate(self) -> None:
        plan = plan_basis(5, 6, budget=100, sample=True, seed=7)

        # both end tuples are constant, hence degenerate
        self.assertEqual(sum(is_degenerate(t) for t in plan.basis), 2 + 49)

    def test_small_stratum_is_taken_whole(self) -> None:
        plan = plan_basis(200, 2, budget=1000, sample=True, seed=3)

        self.assertEqual(len(plan.basis), 1000)
        self.assertEqual([t for t in plan.basis if is_degenerate(t)], [(x, x) for x in range(200)])

    def test_tiny_budget_cannot_sample(self) -> None:
        with self.assertRaises(BudgetError):
            plan_basis(5, 3, budget=1, sample=True)

    def test_sampled_verification_records_its_scope(self) -> None:
        report = verify_composite_homotopy(R5, 4, budget=50, sample=True)

        self.assertTrue(report.passed)
        self.assertTrue(report.sampled)
        self.assertEqual(report.evaluated, 50)
        self.assertEqual(report.basis_size, 625)
