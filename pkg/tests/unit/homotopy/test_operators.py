import pytest

from qhom.core.algebra import dihedral
from qhom.core.chains import Chain
from qhom.core.errors import DegreeError
from qhom.core.homotopy import composite_homotopy_G, d_operator, f_r, f_s, g_operator, homotopy_D, homotopy_F

R3 = dihedral(3)


def test_f_r_repeats_the_chosen_entry() -> None:
    assert f_r(R3, 2, (0, 1, 2)) == Chain(3, {(1, 1, 2): 3})
    assert f_r(R3, 1, (2, 0)) == Chain(2, {(2, 0): 3})


def test_f_s_sums_over_the_repeated_prefix() -> None:
    assert f_s(R3, 0, (0, 1)) == Chain(2, {(0, 1): 3})
    assert f_s(R3, 2, (0, 1)) == Chain(2, {(0, 0): 1, (1, 1): 1, (2, 2): 1})


def test_homotopy_blocks() -> None:
    assert homotopy_D(R3, 1, (0, 1)) == Chain(3, {(0, y, 1): 1 for y in range(3)})
    assert homotopy_D(R3, 2, (0, 1)) == Chain(3, {(1, 1, y): 1 for y in range(3)})
    assert homotopy_F(R3, 1, (0, 1)) == Chain(3, {(y, 0, 1): 1 for y in range(3)})
    assert homotopy_F(R3, 2, (0, 1)) == Chain(3, {(1, y, 1): 1 for y in range(3)})


def test_composite_on_a_single_entry() -> None:
    expected = -1 * (Chain(2, {(0, y): 1 for y in range(3)}) + Chain(2, {(y, 0): 1 for y in range(3)}))

    assert composite_homotopy_G(R3, 1, (0,)) == expected
    assert g_operator(R3)(Chain.basis((0,))) == expected


@pytest.mark.parametrize(
    "call",
    [
        lambda: f_r(R3, 0, (0, 1)),
        lambda: f_s(R3, 3, (0, 1)),
        lambda: homotopy_D(R3, 3, (0, 1)),
        lambda: homotopy_F(R3, 0, (0,)),
        lambda: composite_homotopy_G(R3, 2, (0,)),
    ],
)
def test_indices_outside_the_tuple_are_rejected(call) -> None:
    with pytest.raises(DegreeError):
        call()


def test_operator_form_vanishes_below_its_index() -> None:
    assert not d_operator(R3, 3)(Chain.basis((0, 1)))
