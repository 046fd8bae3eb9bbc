from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wcore.errors import ConfigError, DomainError, NotInvertible, ParseError
from wcore.scalar import (
    GAUSSIAN_RATIONALS,
    RATIONAL_FIELD,
    GaussianRational,
    Residue,
    ScalarDomain,
    conjugate,
    invert,
    is_prime,
    mod_p,
    parse_scalar,
    render_scalar,
)

Q, QI = RATIONAL_FIELD, GAUSSIAN_RATIONALS


def g(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_conjugate_examples():
    assert conjugate(g("3/4", "1/2"), QI) == g("3/4", "-1/2")
    assert conjugate(Fraction(5), Q) == 5
    assert conjugate(g(0), QI) == 0


def test_invert_examples():
    assert invert(Residue(2, 5)) == Residue(3, 5)
    assert invert(g("1/2", "1/2")) == g(1, -1)
    with pytest.raises(NotInvertible):
        invert(Fraction(0))
    with pytest.raises(NotInvertible):
        invert(Residue(0, 7))


def test_parse_examples():
    assert parse_scalar("1/2", Q) == Fraction(1, 2)
    s = parse_scalar("3/4-1/2i", QI)
    assert (s.real, s.imag) == (Fraction(3, 4), Fraction(-1, 2))
    assert parse_scalar("7", mod_p(5)) == Residue(2, 5)


@pytest.mark.parametrize("text, domain", [("i", Q), ("1/0", Q), ("1/5", mod_p(5)), ("2+i", mod_p(3))])
def test_parse_domain_errors(text, domain):
    with pytest.raises(DomainError):
        parse_scalar(text, domain)


@pytest.mark.parametrize("text", ["", "abc", "1//2", "1/2/3", "1+", "i+i"])
def test_parse_malformed(text):
    with pytest.raises(ParseError):
        parse_scalar(text, QI)


def test_lenient_imaginary_forms():
    assert parse_scalar("i", QI) == g(0, 1)
    assert parse_scalar("-i", QI) == g(0, -1)
    assert parse_scalar("2i", QI) == g(0, 2)
    assert parse_scalar("1/2i", QI) == g(0, "1/2")


def test_canonical_render():
    assert render_scalar(g(0, 1), QI) == "0+1i"
    assert render_scalar(g("3/4", "-1/2"), QI) == "3/4-1/2i"
    assert render_scalar(g(2), QI) == "2"
    assert render_scalar(Fraction(-6, 4), Q) == "-3/2"
    assert render_scalar(Residue(9, 7), mod_p(7)) == "2"


def test_domain_validation():
    with pytest.raises((ConfigError, DomainError, ValueError)):
        mod_p(4)
    with pytest.raises((ConfigError, DomainError, ValueError)):
        ScalarDomain("rationals", involution="conjugation")
    assert ScalarDomain.from_name("mod_p:3") == mod_p(3)
    assert ScalarDomain.from_name(QI.name) == QI
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_fractions_stay_reduced():
    s = g("2/4", "-6/8")
    assert s.real.denominator == 2 and s.imag == Fraction(-3, 4)
    assert hash(g("1/2")) == hash(Fraction(1, 2))


small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(lambda a, b: GaussianRational(a, b), small, small)
residues = st.integers(0, 6).map(lambda v: Residue(v, 7))


@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(s, t, u):
    assert (s + t) + u == s + (t + u)
    assert (s * t) * u == s * (t * u)
    assert s * (t + u) == s * t + s * u
    assert s * t == t * s
    if s:
        assert s * invert(s) == 1


@given(residues, residues, residues)
def test_residue_field_axioms(s, t, u):
    assert (s + t) * u == s * u + t * u
    assert (s * t) * u == s * (t * u)
    if s:
        assert s * invert(s) == 1


@given(gauss, gauss)
def test_involution_axioms(s, t):
    c = lambda x: conjugate(x, QI)  # noqa: E731
    assert c(c(s)) == s
    assert c(s + t) == c(s) + c(t)
    assert c(s * t) == c(s) * c(t)


@given(gauss)
def test_gaussian_positivity(s):
    n = conjugate(s, QI) * s
    if s:
        assert n.imag == 0 and n.real > 0


@given(gauss)
def test_render_parse_roundtrip(s):
    text = render_scalar(s, QI)
    assert parse_scalar(text, QI) == s
    assert render_scalar(parse_scalar(text, QI), QI) == text
