import pytest

from qhom.core.algebra import DistributiveSet, alexander, dihedral
from qhom.core.chains import MultiTermSpec
from qhom.core.errors import DegreeError, HypothesisError
from qhom.core.homotopy import (
    hypothesis_failures,
    multi_term_homotopies,
    require_hypotheses,
    verify_composite_homotopy,
    verify_multi_term_homotopy,
)
from qhom.core.homotopy.multiterm import A0_ZERO, COEFFICIENT_SUM, FIRST_NOT_TRIVIAL

R3 = dihedral(3)
ALEX = DistributiveSet.from_quandles([alexander(5, 2), alexander(5, 3)])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_term_identities_hold(n: int) -> None:
    report = verify_multi_term_homotopy(MultiTermSpec.validated(ALEX, (2, -1, -1)), n)

    assert report.passed
    assert report.clause("dG + Gd").passed
    scaled = report.clause("scaled-by-coefficient-sum")
    assert not scaled.asserted
    assert not scaled.passed


def test_two_term_spec_matches_the_rack_homotopy() -> None:
    spec = MultiTermSpec.validated(DistributiveSet.from_quandles([R3]), (1, -1))

    assert verify_multi_term_homotopy(spec, 2).passed
    assert verify_composite_homotopy(R3, 2).passed


def test_homotopy_blocks_need_the_hypotheses() -> None:
    d, f = multi_term_homotopies(ALEX, (2, -1, -1), 1, (0, 3))

    assert d.degree == f.degree == 3
    with pytest.raises(HypothesisError):
        multi_term_homotopies(ALEX, (1, 1, 1), 1, (0, 3))


@pytest.mark.parametrize(
    ("coeffs", "expected"),
    [((1, -2), [COEFFICIENT_SUM]), ((1, 1), [COEFFICIENT_SUM]), ((0, 0), [A0_ZERO]), ((1, -1), [])],
)
def test_hypotheses_are_reported_in_order(coeffs: tuple[int, int], expected: list[str]) -> None:
    dset = DistributiveSet.from_quandles([R3])

    assert [failure.hypothesis for failure in hypothesis_failures(dset, coeffs)] == expected


def test_non_quasigroup_operations_break_a_hypothesis() -> None:
    failures = hypothesis_failures(DistributiveSet.from_quandles([dihedral(4)]), (1, -1))

    assert [failure.hypothesis for failure in failures] == ["operation 1 is not a quasigroup quandle"]
    assert "quasigroup" in str(failures[0])


def test_first_operation_must_be_trivial() -> None:
    dset = DistributiveSet(ops=(R3.op, R3.op), labels=("R3", "R3"))

    assert FIRST_NOT_TRIVIAL in [failure.hypothesis for failure in hypothesis_failures(dset, (1, -1))]


def test_require_hypotheses_raises_the_first_failure() -> None:
    with pytest.raises(HypothesisError) as caught:
        require_hypotheses(ALEX, (1, 1, 1))
    assert caught.value.hypothesis == COEFFICIENT_SUM


def test_coefficients_must_align() -> None:
    with pytest.raises(DegreeError):
        hypothesis_failures(ALEX, (1, -1))
