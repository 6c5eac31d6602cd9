from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hamlie.errors import DimensionError, HamLieError, ParseError, SlotIndexError
from hamlie.exponent import (
    GammaSpec,
    epsilon,
    epsilon_bar,
    exp_add,
    exp_neg,
    exp_scale,
    exponent,
    format_rational,
    grade,
    grade_add,
    is_nondegenerate,
    parse_rational,
    sigma,
    spread,
    zero_exponent,
)

from conftest import exponents


def test_sigma_is_sum_of_conjugate_units():
    assert exp_add(epsilon(1, 1), epsilon_bar(1, 1)) == sigma(1, 1)
    assert sigma(1, 1) == exponent(1, 1)
    assert sigma(2, 2) == exponent(0, 1, 0, 1)
    assert sigma(GammaSpec(2), 1) == exponent(1, 0, 1, 0)


def test_exp_add_examples():
    a = exponent("1/2", 0, 1, 0)
    assert exp_add(a, zero_exponent(2)) == a
    assert exp_add(a, exponent("1/2", 0, -1, 0)) == exponent(1, 0, 0, 0)


def test_length_mismatch():
    with pytest.raises(DimensionError):
        exp_add(exponent(1, 0), exponent(1, 0, 0, 0))
    with pytest.raises(DimensionError):
        exponent(1, 2, 3)


@pytest.mark.parametrize("n,p", [(1, 0), (1, 2), (2, 3)])
def test_sigma_index_error(n, p):
    with pytest.raises(SlotIndexError):
        sigma(n, p)


def test_grade_examples():
    assert grade(sigma(2, 1)) == (0, 0)
    assert grade(exponent(0, 1)) == (1,)
    assert grade(exponent(1, 0)) == (-1,)
    assert grade(exponent(2, "1/2", 0, 3)) == (Fraction(-2), Fraction(5, 2))


@pytest.mark.parametrize(
    "gens,expected",
    [
        ([(1, 0), (0, 1)], True),
        ([(1, 1), (2, 2)], False),
        ([(1, 0), ("1/2", "1/3")], True),
        ([(1, 0)], False),
    ],
)
def test_is_nondegenerate(gens, expected):
    assert is_nondegenerate(GammaSpec(1, gens)) is expected


def test_nondegenerate_invariance():
    gens = [(1, 0, 0, 0), (0, 1, 0, 0), ("1/2", 1, 1, 0), (0, 0, 0, 3)]
    spec = GammaSpec(2, gens)
    assert is_nondegenerate(spec)
    assert is_nondegenerate(GammaSpec(2, gens[::-1]))
    combo = exp_add(exp_scale(exponent(gens[0]), 3), exponent(gens[2]))
    assert is_nondegenerate(GammaSpec(2, gens + [combo]))
    degenerate = gens[:3] + [exp_add(exponent(gens[0]), exponent(gens[1]))]
    assert not is_nondegenerate(GammaSpec(2, degenerate))


def test_gamma_spec_rejects_n_zero():
    with pytest.raises(HamLieError):
        GammaSpec(0)


def test_default_generators_are_standard_basis():
    spec = GammaSpec(2)
    assert spec.generators == tuple(epsilon(2, p) for p in range(1, 5))
    assert spec.is_standard()


@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), ("0", Fraction(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "a", "1//2", "+-1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_format_rational_canonical():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_spread():
    assert spread([exponent(1, "-5/2"), exponent(0, 2)]) == 3
    assert spread([]) == 0


@given(exponents(2), exponents(2), exponents(2))
def test_group_laws(a, b, c):
    assert exp_add(a, b) == exp_add(b, a)
    assert exp_add(exp_add(a, b), c) == exp_add(a, exp_add(b, c))
    assert exp_add(a, exp_neg(a)) == zero_exponent(2)
    assert exp_add(exp_neg(a), a) == zero_exponent(2)


@given(exponents(2), exponents(2), st.integers(1, 2))
def test_grade_additive(a, b, i):
    assert grade(exp_add(a, b)) == grade_add(grade(a), grade(b))
    shifted = tuple(x - y for x, y in zip(exp_add(a, b), sigma(2, i)))
    assert grade(shifted) == grade_add(grade(a), grade(b))


def test_gamma_sampling_respects_generators():
    import random

    from hamlie.sampling import random_gamma_exponent

    spec = GammaSpec(1, [(1, 0), ("1/2", "1/3")])
    rng = random.Random(1)
    for _ in range(20):
        a, b = random_gamma_exponent(rng, spec)
        # a = i + j/2, b = j/3 for integers i, j
        j = 3 * b
        assert j.denominator == 1 and (a - j / 2).denominator == 1
    with pytest.raises(HamLieError):
        random_gamma_exponent(rng, GammaSpec(1, [(1, 1), (2, 2)]))


def test_fraction_inputs_interoperate():
    from hamlie.algebra import HElement

    x = HElement(1, {(Fraction(1, 2), 0): Fraction(2, 4)})
    assert x == HElement(1, {("1/2", "0"): "1/2"})
    assert x.coefficient((Fraction(1, 2), 0)) == Fraction(1, 2)
    assert x.scale(Fraction(2)) == HElement(1, {("1/2", "0"): 1})
