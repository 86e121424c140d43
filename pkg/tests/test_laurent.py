import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tqubit.laurent import A, LOOP, LaurentPoly


def test_constructors():
    assert LaurentPoly.zero().is_zero
    assert LaurentPoly.one() == 1
    assert LaurentPoly.variable() == LaurentPoly.monomial(1, 1)
    assert LaurentPoly.monomial(0, 5).is_zero


def test_loop_value():
    assert LOOP == LaurentPoly({2: -1, -2: -1})
    assert str(LOOP) == "-1*A^-2 + -1*A^2"


def test_str_is_ascending_and_stable():
    p = LaurentPoly({3: 2, -1: -1, 0: 7})
    assert str(p) == "-1*A^-1 + 7*A^0 + 2*A^3"
    assert str(LaurentPoly.zero()) == "0"


def test_arithmetic_identities():
    p = A + LaurentPoly.monomial(1, -1)
    assert p * p == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert p - p == 0
    assert -p + p == 0
    assert p * 0 == 0
    assert (p * 3).coeff(1) == 3
    assert p.shift(2) == A**3 + A


def test_pow():
    assert LOOP**0 == 1
    assert LOOP**1 == LOOP
    assert LOOP**2 == LOOP * LOOP
    with pytest.raises(ValueError):
        LOOP ** (-1)


def test_int_equality_and_hash():
    assert LaurentPoly({0: 4}) == 4
    assert LaurentPoly({1: 1}) != 1
    d = {LOOP: "loop", LaurentPoly.one(): "one"}
    assert d[LaurentPoly({2: -1, -2: -1})] == "loop"


coeff_dicts = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
)


@given(coeff_dicts, coeff_dicts)
def test_evaluate_is_a_ring_map(cx, cy):
    p, q = LaurentPoly(cx), LaurentPoly(cy)
    a = cmath.exp(0.3j)
    assert cmath.isclose((p + q).evaluate(a), p.evaluate(a) + q.evaluate(a), abs_tol=1e-9)
    assert cmath.isclose((p * q).evaluate(a), p.evaluate(a) * q.evaluate(a), abs_tol=1e-9)


@given(coeff_dicts)
def test_sympy_round_trip(cx):
    sympy = pytest.importorskip("sympy")
    p = LaurentPoly(cx)
    sym = sympy.Symbol("A")
    expr = p.to_sympy(sym)
    val = complex(expr.subs(sym, sympy.exp(sympy.I * sympy.Rational(1, 5))))
    assert cmath.isclose(val, p.evaluate(cmath.exp(0.2j)), abs_tol=1e-9)


def test_evaluate_unknot_values():
    # the loop value at the quantum and classical parameter points
    assert cmath.isclose(LOOP.evaluate(cmath.exp(1j * cmath.pi / 8)), -2**0.5, abs_tol=1e-12)
    assert LOOP.evaluate(1) == -2
    assert LOOP.evaluate(1j) == 2
