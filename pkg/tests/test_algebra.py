from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hamlie.algebra import (
    BarElement,
    HElement,
    bracket,
    bracket_bar,
    element_from_dict,
    grade_decompose,
    jacobi_defect,
    leibniz_defect,
    product,
    project_to_H,
    t,
    t_sigma,
    tbar,
)
from hamlie.errors import DimensionError
from hamlie.exponent import grade, grade_add

from conftest import bar_elements, exponents, h_elements
from oracles import poisson_oracle, same_function, to_function


def test_product_examples():
    assert product(tbar(0, 1), tbar(0, 1)) == tbar(0, 2)
    u = tbar(1, 0) + tbar(0, 3, coeff="1/2")
    assert product(BarElement.one(1), u) == u
    lhs = (tbar(1, 0) - tbar(0, 1)) * (tbar(1, 0) + tbar(0, 1))
    assert lhs == tbar(2, 0) - tbar(0, 2)


def test_bracket_bar_examples():
    assert bracket_bar(tbar(2, 0), tbar(0, 2)) == tbar(1, 1, coeff=4)
    a = tbar(1, "1/2") + tbar(-2, 3)
    assert bracket_bar(a, a).is_zero()
    assert bracket_bar(tbar(1, 0), tbar(0, 1)) == BarElement.one(1)


def test_bracket_examples():
    assert bracket(t(1, 0), t(0, 1)).is_zero()
    assert bracket(t(3, 0, 0, 0), t(0, 1, 1, 0)) == t(2, 1, 0, 0, coeff=3)
    assert bracket(t_sigma(1, 1), t(0, 1)) == t(0, 1)
    assert bracket(t_sigma(1, 1), t(1, 0)) == t(1, 0, coeff=-1)


def test_project_to_h():
    assert project_to_H(BarElement.one(1)).is_zero()
    assert project_to_H(tbar(1, 0) + tbar(0, 0, coeff=5)) == t(1, 0)
    assert project_to_H(bracket_bar(tbar(1, 0), tbar(0, 1))).is_zero()


def test_h_element_drops_unit():
    assert HElement(1, {(0, 0): 3, (1, 0): 2}) == t(1, 0, coeff=2)


def test_canonical_form_prunes_zeros():
    x = t(1, 0) + t(0, 1)
    assert (x - t(0, 1)) == t(1, 0)
    assert (x - x).terms == {}
    assert HElement(1, [((1, 0), 2), ((1, 0), -2)]).is_zero()


def test_grade_decompose():
    parts = grade_decompose(t(1, 0) + t(0, 1))
    assert parts == {(Fraction(-1),): t(1, 0), (Fraction(1),): t(0, 1)}
    s = t(1, 1) + t(2, 2)
    assert grade_decompose(s) == {(Fraction(0),): s}
    assert grade_decompose(HElement.zero(1)) == {}


def test_jacobi_examples():
    assert jacobi_defect(t(1, 0), t(0, 1), t(1, 1)).is_zero()
    x, y = t(2, "1/2") + t(-1, 3), t(1, 1, coeff=2)
    assert jacobi_defect(x, x, y).is_zero()
    assert jacobi_defect(t(2, 0), t(0, 2), t(1, 2)).is_zero()


def test_leibniz_examples():
    assert leibniz_defect(tbar(2, 0), tbar(0, 1), tbar(0, 1)).is_zero()
    u, w = tbar(1, 3) - tbar(0, "1/2"), tbar(-1, 1)
    assert leibniz_defect(u, BarElement.one(1), w).is_zero()
    assert leibniz_defect(tbar(1, 1), tbar(1, 0), tbar(0, 1)).is_zero()


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        bracket(t(1, 0), t(1, 0, 0, 0))
    with pytest.raises(DimensionError):
        product(tbar(1, 0), tbar(1, 0, 0, 0))


def test_parse_rejects_unit_in_h():
    from hamlie.errors import ParseError

    with pytest.raises(ParseError):
        element_from_dict({"n": 1, "terms": [{"c": "1", "e": ["0", "0"]}]})
    bar = element_from_dict({"n": 1, "kind": "bar", "terms": [{"c": "1", "e": ["0", "0"]}]})
    assert bar == BarElement.one(1)


@given(bar_elements(2), bar_elements(2))
def test_bracket_bar_matches_poisson_oracle(u, v):
    expected = poisson_oracle(list(u.terms.items()), list(v.terms.items()), 2)
    got = to_function(list(bracket_bar(u, v).terms.items()), 2)
    assert same_function(got, expected)


@given(h_elements(2), h_elements(2), st.sampled_from([Fraction(2), Fraction(-1, 3)]))
def test_bracket_bilinear_alternating(x, y, k):
    assert bracket(x, x).is_zero()
    assert (bracket(x, y) + bracket(y, x)).is_zero()
    assert bracket(x.scale(k) + y, y) == bracket(x, y).scale(k)


@given(h_elements(2), h_elements(2), h_elements(2))
def test_jacobi_random(x, y, z):
    assert jacobi_defect(x, y, z).is_zero()


@given(bar_elements(2), bar_elements(2), bar_elements(2))
def test_leibniz_random(u, v, w):
    assert leibniz_defect(u, v, w).is_zero()


@given(exponents(2), st.integers(1, 2))
def test_sigma_eigenvalue_law(alpha, p):
    x = HElement.monomial(alpha)
    assert bracket(t_sigma(2, p), x) == x.scale(grade(alpha)[p - 1])


@given(bar_elements(2), bar_elements(2))
def test_projection_is_lie_map(u, v):
    assert project_to_H(bracket_bar(u, v)) == bracket(project_to_H(u), project_to_H(v))
    assert project_to_H(u + v) == project_to_H(u) + project_to_H(v)


@given(h_elements(2), h_elements(2))
def test_grading_compatibility(x, y):
    for mu, xm in grade_decompose(x).items():
        for nu, yn in grade_decompose(y).items():
            for e in bracket(xm, yn).terms:
                assert grade(e) == grade_add(mu, nu)
            for e in product(xm.lift(), yn.lift()).terms:
                assert grade(e) == grade_add(mu, nu)


@given(h_elements(2))
def test_grade_decompose_sums_back(x):
    total = HElement.zero(2)
    for part in grade_decompose(x).values():
        total = total + part
    assert total == x
