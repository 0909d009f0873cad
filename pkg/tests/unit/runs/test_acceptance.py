"""Larger runs of the annihilation bounds; enabled with ``--run-slow``."""

import pytest

from qhom.core.algebra import DistributiveSet, alexander, by_name, dihedral
from qhom.core.chains import ComplexTheory, MultiTermSpec
from qhom.core.runs import YES, Identity, RunConfig, VerifyOptions, multi_term_rows, theorem_rows, verify_identity

pytestmark = pytest.mark.slow


@pytest.mark.parametrize(
    ("name", "n_max"),
    [("R3", 5), ("R5", 4), ("Alex(5,2)", 4), ("Alex(7,3)", 3), ("T(3x3)", 3)],
)
@pytest.mark.parametrize("theory", [ComplexTheory.rack(), ComplexTheory.quandle()], ids=["rack", "quandle"])
def test_torsion_divides_order_of_quasigroup_quandles(name: str, n_max: int, theory: ComplexTheory) -> None:
    q = by_name(name)
    config = RunConfig(source=name, theory=theory, n_min=1, n_max=n_max)

    rows = theorem_rows([q], config)

    assert [row.record.degree for row in rows] == list(range(1, n_max + 1))
    for row in rows:
        assert row.quasigroup
        assert row.divides_q == YES, (row.record.degree, str(row.record.group))
        assert not row.violation


def test_dihedral_three_quandle_homology_through_degree_five() -> None:
    config = RunConfig(source="R3", theory=ComplexTheory.quandle(), n_min=1, n_max=5)
    groups = [str(row.record.group) for row in theorem_rows([dihedral(3)], config)]

    assert len(groups) == 5
    assert groups[:3] == ["Z", "0", "Z/3"]


def test_multi_term_bound_through_degree_three() -> None:
    spec = MultiTermSpec.validated(
        DistributiveSet.from_quandles([alexander(5, 2), alexander(5, 3)]),
        (2, -1, -1),
    )
    config = RunConfig(source=spec.label, theory=ComplexTheory.multi_term(spec), n_min=1, n_max=3)

    rows = multi_term_rows(spec, config)

    assert [row.bound for row in rows] == [10, 10, 10]
    assert all(row.divides_bound == YES for row in rows)


@pytest.mark.parametrize("identity", [Identity.D, Identity.F, Identity.G])
def test_homotopy_identities_on_alexander_seven(identity: Identity) -> None:
    report = verify_identity(alexander(7, 3), identity, 3, VerifyOptions(budget=10_000))

    assert report.passed, report.first_witness()
    assert not report.sampled
