import cmath
import math

import numpy as np
import numpy.testing as npt
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tqubit.diagrams import (
    TangleDiagram,
    bridge_connector,
    cup_tangle,
    double_cups,
    hat_one_tangle,
    hat_zero_tangle,
    nested_connector,
    threaded_kink_tangle,
)
from tqubit.errors import DegenerateQubit, HasCrossings
from tqubit.laurent import LOOP, LaurentPoly
from tqubit.qubit import (
    ChernSimonsParams,
    computational_coefficients,
    gram_matrix,
    hat_to_on,
    on_basis_vectors,
    on_to_hat,
    pairing_overlaps,
    transpose_pairing,
    wire_state,
)

A = sympy.Symbol("A")
D = -(A**2) - A ** (-2)


# -- parameter points ---------------------------------------------------------


def test_from_level_values():
    p2 = ChernSimonsParams.from_level(2)
    assert cmath.isclose(p2.a, cmath.exp(1j * cmath.pi / 8))
    assert math.isclose(p2.d, -math.sqrt(2))
    p3 = ChernSimonsParams.from_level(3)
    assert math.isclose(p3.d, -(1 + math.sqrt(5)) / 2)  # negative golden ratio
    pm = ChernSimonsParams.from_level(-1)
    assert pm.a == 1j and pm.d == 2
    pc = ChernSimonsParams.classical_limit()
    assert pc.a == 1 and pc.d == -2


def test_from_level_rejects_nonlevels():
    for k in (0, -2, -5):
        with pytest.raises(ValueError):
            ChernSimonsParams.from_level(k)


def test_degenerate_level_is_constructible_but_flagged():
    p1 = ChernSimonsParams.from_level(1)
    assert p1.degenerate
    assert math.isclose(p1.d, -1)
    assert not ChernSimonsParams.from_level(2).degenerate


def test_labels():
    assert ChernSimonsParams.from_level(7).label == "7"
    assert ChernSimonsParams.from_level(-1).label == "-1"
    assert ChernSimonsParams.classical_limit().label == "inf"


def test_d_follows_a():
    for k in (2, 3, 4, 10, 50):
        p = ChernSimonsParams.from_level(k)
        assert cmath.isclose(-(p.a**2) - p.a**-2, p.d, abs_tol=1e-12)


# -- bases --------------------------------------------------------------------


def test_gram_matrix_exact():
    g = gram_matrix()
    d = LOOP
    assert g[0][0] == d * d
    assert g[0][1] == d
    assert g[1][0] == d
    assert g[1][1] == d * d
    assert g[0][0] == LaurentPoly({4: 1, 0: 2, -4: 1})


hatpairs = st.tuples(
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
)


@given(hatpairs, st.sampled_from([2, 3, 5, 17, -1, 0]))
@settings(max_examples=80)
def test_hat_on_round_trip(pair, level):
    alpha, beta = pair
    p = ChernSimonsParams.from_level(level) if level else ChernSimonsParams.classical_limit()
    c0, c1 = hat_to_on(alpha, beta, p.d)
    back = on_to_hat(c0, c1, p.d)
    assert cmath.isclose(back[0], alpha, abs_tol=1e-9)
    assert cmath.isclose(back[1], beta, abs_tol=1e-9)


def test_degenerate_conversion_raises():
    with pytest.raises(DegenerateQubit):
        on_to_hat(1, 0, -1.0)
    with pytest.raises(DegenerateQubit):
        on_basis_vectors(cmath.exp(1j * cmath.pi / 6))  # k = 1 point


def test_wire_state_of_single_cup():
    a = ChernSimonsParams.from_level(2).a
    v = wire_state(cup_tangle(), a)
    assert v.shape == (4,)
    npt.assert_allclose(v, [0, 1j / a, -1j * a, 0], atol=1e-12)


def test_wire_state_rejects_crossings():
    from tqubit.diagrams import braid_tangle

    with pytest.raises(HasCrossings):
        wire_state(braid_tangle((1,), 2), 1j)


def test_wire_state_gram_reproduces_diagram_gram(unit_points):
    """The bilinear pairing of hat wire states equals the glued-diagram bracket."""
    g = gram_matrix()
    tangles = (hat_zero_tangle(), hat_one_tangle())
    for a in unit_points[:4]:
        for i in (0, 1):
            for j in (0, 1):
                lhs = transpose_pairing(wire_state(tangles[i], a), wire_state(tangles[j], a))
                assert cmath.isclose(lhs, g[i][j].evaluate(a), abs_tol=1e-10)


def test_on_basis_is_bilinear_orthonormal(unit_points):
    for a in unit_points[:4]:
        v0, v1 = on_basis_vectors(a)
        assert cmath.isclose(transpose_pairing(v0, v0), 1, abs_tol=1e-10)
        assert cmath.isclose(transpose_pairing(v1, v1), 1, abs_tol=1e-10)
        assert abs(transpose_pairing(v0, v1)) < 1e-10


# -- connector states ---------------------------------------------------------


def _on_coefficients(diagram: TangleDiagram, a: complex) -> np.ndarray:
    """Numeric orthonormal-basis coefficients of an eight-point wiring."""
    v = wire_state(diagram, a)
    v0, v1 = on_basis_vectors(a)
    basis = (v0, v1)
    return np.array(
        [[transpose_pairing(np.kron(basis[i], basis[j]), v) for j in (0, 1)] for i in (0, 1)]
    )


def test_nested_connector_is_bell():
    c = computational_coefficients(pairing_overlaps(nested_connector()))
    assert sympy.simplify(c - sympy.eye(2)) == sympy.zeros(2)
    p = ChernSimonsParams.from_level(4)
    num = _on_coefficients(nested_connector(), p.a)
    npt.assert_allclose(num, np.eye(2), atol=1e-12)
    state = num.reshape(4) / np.linalg.norm(num)
    rho = np.outer(state, state.conj()).reshape(2, 2, 2, 2)
    reduced = np.einsum("ijkj->ik", rho)
    npt.assert_allclose(reduced, np.eye(2) / 2, atol=1e-12)


def test_bridge_connector_is_separable():
    c = computational_coefficients(pairing_overlaps(bridge_connector()))
    target = sympy.Matrix([[D, 0], [0, 0]])
    assert sympy.simplify(c - target) == sympy.zeros(2)
    p = ChernSimonsParams.from_level(3)
    num = _on_coefficients(bridge_connector(), p.a)
    npt.assert_allclose(num, [[p.d, 0], [0, 0]], atol=1e-12)


def test_double_cups_factorize():
    c = computational_coefficients(pairing_overlaps(double_cups()))
    target = sympy.Matrix([[D**2, 0], [0, 0]])
    assert sympy.simplify(c - target) == sympy.zeros(2)


def test_threaded_kink_overlaps():
    m = pairing_overlaps(threaded_kink_tangle())
    assert m[0][0] == LaurentPoly({-12: 1, -8: 2, -4: 3, 0: 4, 4: 3, 8: 2, 12: 1})
    off = LaurentPoly({-10: -1, -6: -1, -2: -2, 2: -2, 6: -1, 10: -1})
    assert m[0][1] == off
    assert m[1][0] == off
    assert m[1][1] == LaurentPoly({-4: 1, 0: 2, 4: 1})


def test_threaded_kink_coefficients():
    c = computational_coefficients(pairing_overlaps(threaded_kink_tangle()))
    c00 = (A**4 + A ** (-4)) ** 2
    c11 = -((A**2 - A ** (-2)) ** 2)
    assert sympy.simplify(c[0, 0] - c00) == 0
    assert sympy.simplify(c[0, 1]) == 0
    assert sympy.simplify(c[1, 0]) == 0
    assert sympy.simplify(c[1, 1] - c11) == 0
