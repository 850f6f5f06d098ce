from fractions import Fraction as F

import pytest

from quaternary.forms import FORMS_BY_CHARACTER, QuadForm
from quaternary.numtheory import DirichletChar
from quaternary.qseries import QSeries
from quaternary.spaces import (
    SPACES,
    NotInSpaceError,
    basis_rank,
    build_basis,
    classify_form,
    cusp_series,
    gamma0_index,
    solve_in_basis,
    sturm_bound,
    theta_product,
)
from quaternary.linalg import rank, solve_square, independent_rows, SingularMatrixError

C0, C1, C2, C3 = DirichletChar


def test_sturm_bound():
    assert sturm_bound(40, 2) == 12
    assert gamma0_index(40) == 72
    assert gamma0_index(1) == 1
    assert sturm_bound(1, 2) == 0
    assert sturm_bound(1, 12) == 1


def test_basis_sizes_and_order():
    assert len(build_basis(SPACES[C0], 30)) == 10
    assert len(build_basis(SPACES[C2], 30)) == 8
    b1 = build_basis(SPACES[C1], 30)
    assert [g.name for g in b1.generators][:4] == [
        "E[chi0,chi1](q)", "E[chi0,chi1](q^2)", "E[chi0,chi1](q^4)", "E[chi0,chi1](q^8)"
    ]
    assert [g.name for g in b1.cusp_part] == ["B1", "B2"]
    with pytest.raises(ValueError):
        build_basis(SPACES[C0], 12)


def test_ranks():
    assert [basis_rank(SPACES[c]) for c in (C0, C1, C2, C3)] == [10, 10, 8, 8]


def test_classify_form_examples():
    assert classify_form(QuadForm((1, 1, 1, 2))).character is C2
    assert classify_form(QuadForm((2, 5, 10, 10))).character is C3
    assert classify_form(QuadForm((2, 2, 5, 5))).character is C0


@pytest.mark.parametrize("chi", list(DirichletChar))
def test_classify_all_forms(chi):
    for form in FORMS_BY_CHARACTER[chi]:
        assert classify_form(form).character is chi


def test_solve_2255_matches_proof_values():
    dec = solve_in_basis(theta_product((2, 2, 5, 5), 500), SPACES[C0])
    x = dec.eisenstein_coeffs
    y = dec.cusp_coeffs
    third = F(1, 3)
    assert x == (third, -third, -2 * third, 2 * third, third, -third, 2 * third)
    assert y == (-2 * third, 8 * third, F(-4))
    assert dec.verified_to == 500


def test_solve_four_squares():
    dec = solve_in_basis(theta_product((1, 1, 1, 1), 200), SPACES[C0])
    assert dec.coefficients == {
        "L(q)-2L(q^2)": 0, "L(q)-4L(q^4)": 8, "L(q)-5L(q^5)": 0, "L(q)-8L(q^8)": 0,
        "L(q)-10L(q^10)": 0, "L(q)-20L(q^20)": 0, "L(q)-40L(q^40)": 0, "A1": 0, "A2": 0, "A3": 0,
    }


def test_solve_zero():
    dec = solve_in_basis(QSeries.zero(100), SPACES[C3])
    assert all(c == 0 for c in dec.eisenstein_coeffs + dec.cusp_coeffs)


def test_not_in_space_reports_first_mismatch():
    # a weight-2 form with the wrong character
    target = theta_product((1, 1, 1, 2), 100)
    with pytest.raises(NotInSpaceError) as info:
        solve_in_basis(target, SPACES[C0])
    assert info.value.index is not None and info.value.index >= 0
    # right space up to the Sturm bound but perturbed later
    bumped = theta_product((1, 1, 1, 1), 100) + QSeries.monomial(57, 1, 100)
    with pytest.raises(NotInSpaceError) as info:
        solve_in_basis(bumped, SPACES[C0])
    assert info.value.index == 57


def test_solve_requires_precision():
    with pytest.raises(ValueError):
        solve_in_basis(theta_product((1, 1, 1, 1), 24), SPACES[C0])


def test_recombination():
    for chi, forms in FORMS_BY_CHARACTER.items():
        for form in forms:
            target = theta_product(form, 300)
            dec = solve_in_basis(target, SPACES[chi], form)
            assert dec.recombine(300) == target


def test_corollary_identity():
    p = 500
    lhs = theta_product((1, 1, 10, 10), p) - theta_product((2, 2, 5, 5), p)
    assert lhs == 4 * cusp_series("A1", p) + 8 * cusp_series("A3", p)


def test_decomposition_json_shape():
    dec = solve_in_basis(theta_product((1, 1, 1, 5), 100), SPACES[C1], QuadForm((1, 1, 1, 5)))
    d = dec.to_dict()
    assert list(d) == ["form", "space", "eisenstein", "cusp", "verified_to"]
    assert d["eisenstein"][0] == {"generator": "E[chi0,chi1](q)", "coeff": "1/1"}
    assert d["cusp"] == [{"generator": "B1", "coeff": "0/1"}, {"generator": "B2", "coeff": "0/1"}]


def test_linalg_helpers():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert independent_rows([[0, 0], [1, 2], [2, 4], [0, 1]]) == [1, 3]
    assert solve_square([[2, 1], [1, 3]], [3, 5]) == [F(4, 5), F(7, 5)]
    with pytest.raises(SingularMatrixError):
        solve_square([[1, 2], [2, 4]], [1, 2])
