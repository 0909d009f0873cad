import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhom.core.algebra import (
    DistributiveSet,
    FiniteQuandle,
    alexander,
    dihedral,
    from_function,
    takasaki,
    trivial_op,
)
from qhom.core.chains import (
    Chain,
    ComplexTheory,
    MultiTermSpec,
    boundary_matrix,
    face,
    multi_term_boundary,
    one_term_boundary,
    rack_boundary,
    rank,
    tuples,
)
from qhom.core.errors import BrokenComplexError, DegreeError, TableError

R3 = dihedral(3)
R5 = dihedral(5)

SINGLE_THEORIES = [
    ComplexTheory.rack(),
    ComplexTheory.degenerate(),
    ComplexTheory.quandle(),
    ComplexTheory.reduced_quandle(),
]


def test_star_faces_act_on_the_prefix() -> None:
    assert face(None, 2, (0, 1, 2)) == (0, 2)
    assert face(R3.op, 3, (0, 1, 2)) == (1, 0)
    assert face(R3.op, 1, (2, 1)) == (1,)


def test_face_index_must_lie_inside_the_tuple() -> None:
    with pytest.raises(DegreeError):
        face(None, 0, (0, 1))
    with pytest.raises(DegreeError):
        face(R3.op, 3, (0, 1))


@pytest.mark.parametrize("degree", [2, 3, 4])
@pytest.mark.parametrize("quandle", [R3, R5, takasaki([2, 2])], ids=lambda q: q.label)
def test_faces_satisfy_the_precubic_relations(quandle: FiniteQuandle, degree: int) -> None:
    ops = (None, quandle.op)
    for t in tuples(quandle.size, degree):
        for i in range(1, degree):
            for j in range(i + 1, degree + 1):
                for eps in ops:
                    for delta in ops:
                        assert face(eps, i, face(delta, j, t)) == face(delta, j - 1, face(eps, i, t))


def test_rack_boundary_of_a_pair() -> None:
    assert rack_boundary(R3, Chain.basis((0, 1))) == Chain(1, {(0,): 1, (2,): -1})
    assert rack_boundary(R3, Chain.basis((2,))) == Chain.zero(0)


def test_trivial_one_term_boundary_of_a_pair() -> None:
    assert one_term_boundary(None, Chain.basis((0, 1))) == Chain(1, {(0,): 1, (1,): -1})


def test_rack_boundary_is_the_difference_of_one_term_boundaries() -> None:
    for t in tuples(3, 3):
        c = Chain.basis(t)
        assert rack_boundary(R3, c) == one_term_boundary(None, c) - one_term_boundary(R3.op, c)


@settings(max_examples=50)
@given(
    st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3), st.integers(-5, 5), max_size=6),
    st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3), st.integers(-5, 5), max_size=6),
)
def test_rack_boundary_is_linear(left: dict, right: dict) -> None:
    a, b = Chain(3, left), Chain(3, right)

    assert rack_boundary(R5, 2 * a - b) == 2 * rack_boundary(R5, a) - rack_boundary(R5, b)


def test_rack_matrix_column_for_a_pair() -> None:
    matrix = boundary_matrix(R3, ComplexTheory.rack(), 2)
    column = rank((0, 1), 3)

    assert matrix.shape == (3, 9)
    assert matrix.get(0, column) == 1
    assert matrix.get(2, column) == -1
    assert matrix.column(column) == {0: 1, 2: -1}


def test_first_boundary_is_zero_or_augmentation() -> None:
    assert boundary_matrix(R3, ComplexTheory.rack(), 1).shape == (0, 3)
    assert boundary_matrix(R3, ComplexTheory.quandle(), 1).shape == (0, 3)
    reduced = boundary_matrix(R3, ComplexTheory.reduced_quandle(), 1)
    assert reduced.to_dense() == [[1, 1, 1]]


def test_restricted_shapes() -> None:
    assert boundary_matrix(R3, ComplexTheory.quandle(), 2).shape == (3, 6)
    assert boundary_matrix(R3, ComplexTheory.quandle(), 3).shape == (6, 12)
    assert boundary_matrix(R3, ComplexTheory.degenerate(), 2).shape == (0, 3)
    assert boundary_matrix(R3, ComplexTheory.degenerate(), 3).shape == (3, 15)


def test_quandle_matrix_keeps_nondegenerate_images() -> None:
    matrix = boundary_matrix(R3, ComplexTheory.quandle(), 2)

    assert matrix.column(0) == {0: 1, 2: -1}


@pytest.mark.parametrize("theory", SINGLE_THEORIES, ids=str)
@pytest.mark.parametrize("quandle", [R3, R5, alexander(5, 2), takasaki([3])], ids=lambda q: q.label)
def test_consecutive_boundaries_compose_to_zero(quandle: FiniteQuandle, theory: ComplexTheory) -> None:
    for n in (1, 2, 3):
        lower = boundary_matrix(quandle, theory, n)
        upper = boundary_matrix(quandle, theory, n + 1)
        assert lower.multiply(upper).is_zero()


def test_degree_zero_boundary_is_refused() -> None:
    with pytest.raises(DegreeError):
        boundary_matrix(R3, ComplexTheory.rack(), 0)


def test_degenerate_subcomplex_needs_idempotency() -> None:
    shift = from_function(2, lambda a, b: (a + 1) % 2)
    rack = FiniteQuandle(op=shift, label="shift", orbits=((0, 1),), quasigroup=False)

    with pytest.raises(BrokenComplexError) as caught:
        boundary_matrix(rack, ComplexTheory.degenerate(), 2)
    assert caught.value.column == 0


def _spec(quandles: list[FiniteQuandle], coeffs: tuple[int, ...]) -> MultiTermSpec:
    return MultiTermSpec.validated(DistributiveSet.from_quandles(quandles), coeffs)


@pytest.mark.parametrize("n", [2, 3])
def test_two_term_spec_reproduces_the_rack_complex(n: int) -> None:
    spec = _spec([R3], (1, -1))

    assert boundary_matrix(spec, ComplexTheory.multi_term(spec), n) == boundary_matrix(R3, ComplexTheory.rack(), n)


def test_trivial_only_spec() -> None:
    spec = MultiTermSpec(DistributiveSet(ops=(trivial_op(3),), labels=("*0",)), (1,))

    assert multi_term_boundary(spec, Chain.basis((0, 1))) == Chain(1, {(0,): 1, (1,): -1})


def test_multi_term_boundaries_compose_to_zero() -> None:
    spec = _spec([alexander(5, 2), alexander(5, 3)], (2, -1, -1))
    theory = ComplexTheory.multi_term(spec)

    for n in (2, 3):
        assert boundary_matrix(spec, theory, n).multiply(boundary_matrix(spec, theory, n + 1)).is_zero()


def test_spec_coefficients_must_align_with_operations() -> None:
    with pytest.raises(TableError):
        MultiTermSpec(DistributiveSet.from_quandles([R3]), (1,))


def test_single_quandle_theories_refuse_a_spec() -> None:
    spec = _spec([R3], (1, -1))

    with pytest.raises(TableError):
        boundary_matrix(spec, ComplexTheory.rack(), 2)
    with pytest.raises(TableError):
        ComplexTheory.parse("multiterm")
    assert ComplexTheory.parse("reduced-quandle") == ComplexTheory.reduced_quandle()
