"""The two-sphere qubit: parameters, diagrammatic basis, and spin-chain states.

A qubit lives in the two-dimensional space of crossingless tangles on four
punctures. The diagrammatic (hat) basis is the adjacent-cup and nested-cup
wiring; its Gram matrix under the bilinear bracket pairing is
[[d^2, d], [d, d^2]]. The orthonormal basis is obtained by Gram-Schmidt:

    |0> = |0hat>/d,    |1> = (|1hat> - |0hat>/d) / sqrt(d^2 - 1)

so hat coordinates (alpha, beta) map to orthonormal coordinates
(alpha*d + beta, beta*sqrt(d^2 - 1)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bracket import bracket_of_tangle_pairing
from .diagrams import TangleDiagram, hat_one_tangle, hat_zero_tangle
from .errors import DegenerateQubit, HasCrossings, SizeMismatch
from .laurent import LaurentPoly

_DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class ChernSimonsParams:
    """Evaluation point of the bracket variable A and the loop value d.

    mode is one of "integer" (A = exp(i pi / (2(k+2))), d = -2 cos(pi/(k+2))),
    "minus-one" (A = i, d = 2), or "classical" (A = 1, d = -2).
    """

    mode: str
    k: int | None
    a: complex
    d: float

    def __post_init__(self):
        expected = -(self.a**2 + self.a**-2)
        if abs(expected - self.d) > 1e-9:
            raise ValueError(f"inconsistent parameters: d={self.d} but -A^2-A^-2={expected}")

    @classmethod
    def from_level(cls, k: int) -> "ChernSimonsParams":
        """Parameters at integer level k >= 1, or the special point k = -1."""
        if k == -1:
            return cls("minus-one", -1, 1j, 2.0)
        if k < 1:
            raise ValueError(f"level must be a positive integer or -1, got {k}")
        a = cmath.exp(1j * math.pi / (2 * (k + 2)))
        d = -2.0 * math.cos(math.pi / (k + 2))
        return cls("integer", k, a, d)

    @classmethod
    def classical_limit(cls) -> "ChernSimonsParams":
        """The A = 1 point, where the braid generator degenerates to a swap."""
        return cls("classical", None, 1.0 + 0j, -2.0)

    @property
    def delta(self) -> float:
        """d^2 - 1, the squared norm ratio of the basis change."""
        return self.d * self.d - 1.0

    @property
    def degenerate(self) -> bool:
        return abs(self.delta) <= _DEGENERACY_TOL

    @property
    def label(self) -> str:
        if self.mode == "classical":
            return "inf"
        return str(self.k)


def unit_a_params(a: complex) -> tuple[complex, complex]:
    """The pair (a, d) for a raw evaluation point of the bracket variable."""
    if a == 0:
        raise ValueError("A must be nonzero")
    return a, -(a**2 + a**-2)


def coerce_params(p: "ChernSimonsParams | complex") -> tuple[complex, complex]:
    """Accept either a parameter bundle or a bare value of A."""
    if isinstance(p, ChernSimonsParams):
        return p.a, complex(p.d)
    return unit_a_params(complex(p))


# -- basis and coordinates ---------------------------------------------------


def gram_matrix() -> list[list[LaurentPoly]]:
    """Exact 2x2 overlap matrix of the hat basis under the bracket pairing."""
    basis = [hat_zero_tangle(), hat_one_tangle()]
    return [[bracket_of_tangle_pairing(x, y) for y in basis] for x in basis]


def hat_to_on(alpha: complex, beta: complex, d: complex) -> tuple[complex, complex]:
    """Orthonormal coordinates of alpha |0hat> + beta |1hat>."""
    delta = d * d - 1
    return alpha * d + beta, beta * cmath.sqrt(delta)


def on_to_hat(c0: complex, c1: complex, d: complex) -> tuple[complex, complex]:
    """Hat coordinates of c0 |0> + c1 |1>; fails at the degenerate level."""
    delta = d * d - 1
    if abs(delta) <= _DEGENERACY_TOL:
        raise DegenerateQubit("d^2 == 1 (the k=1 level): the qubit space collapses")
    beta = c1 / cmath.sqrt(delta)
    return (c0 - beta) / d, beta


# -- concrete spin-chain vectors ----------------------------------------------


def cup_coefficients(a: complex) -> np.ndarray:
    """The 2x2 coefficient tensor of a single cup in the spin-1/2 chain.

    Fixed to (c01, c10) = (i/A, -i A), the unique (up to a sign shared by
    both entries) tensor that gives each closed loop the value d and makes
    the zigzag identity hold.
    """
    c = np.zeros((2, 2), dtype=complex)
    c[0, 1] = 1j / a
    c[1, 0] = -1j * a
    return c


def wire_state(diagram: TangleDiagram, a: complex) -> np.ndarray:
    """The 2^(2n)-component spin vector of a crossingless tangle on 2n points.

    Component order follows the boundary tuple with position 0 the most
    significant bit. Free loops multiply the vector by d each.
    """
    if diagram.crossings:
        raise HasCrossings("wire_state requires a crossingless tangle")
    m = len(diagram.boundary)
    if m % 2:
        raise SizeMismatch("a crossingless tangle needs an even boundary")
    _, d = unit_a_params(a)
    cup = cup_coefficients(a)
    pairs = sorted(tuple(sorted(p)) for p in diagram.pairing())
    v = np.zeros(1 << m, dtype=complex)
    for idx in range(1 << m):
        bits = [(idx >> (m - 1 - pos)) & 1 for pos in range(m)]
        amp = 1.0 + 0j
        for i, j in pairs:
            amp *= cup[bits[i], bits[j]]
            if amp == 0:
                break
        v[idx] = amp
    return v * (d ** diagram.free_loops)


def transpose_pairing(u: np.ndarray, v: np.ndarray) -> complex:
    """Bilinear pairing sum_i u_i v_i, the spin-chain image of diagram gluing."""
    if u.shape != v.shape:
        raise SizeMismatch(f"shapes differ: {u.shape} vs {v.shape}")
    return complex(np.dot(u, v))


def on_basis_vectors(a: complex) -> tuple[np.ndarray, np.ndarray]:
    """Spin-chain vectors of the orthonormal qubit basis on four strands."""
    _, d = unit_a_params(a)
    delta = d * d - 1
    if abs(delta) <= _DEGENERACY_TOL:
        raise DegenerateQubit("d^2 == 1 (the k=1 level): the qubit space collapses")
    h0 = wire_state(hat_zero_tangle(), a)
    h1 = wire_state(hat_one_tangle(), a)
    v0 = h0 / d
    v1 = (h1 - h0 / d) / cmath.sqrt(delta)
    return v0, v1


def hat_pair_tangle(q1: int, q2: int) -> TangleDiagram:
    """The eight-point product wiring |q1 hat> (x) |q2 hat>."""
    first = hat_zero_tangle() if q1 == 0 else hat_one_tangle()
    second = hat_zero_tangle() if q2 == 0 else hat_one_tangle()
    shift = 10
    return TangleDiagram(
        (),
        0,
        first.boundary + tuple(x + shift for x in second.boundary),
    )


def pairing_overlaps(ket: TangleDiagram) -> list[list[LaurentPoly]]:
    """Exact overlaps of an eight-point tangle against the hat product basis."""
    return [
        [bracket_of_tangle_pairing(hat_pair_tangle(i, j), ket) for j in (0, 1)]
        for i in (0, 1)
    ]


def computational_coefficients(overlaps) -> "object":
    """Solve the hat-overlap system for orthonormal two-qubit coefficients.

    Takes the 2x2 matrix of overlaps <qhat q'hat | psi> as Laurent
    polynomials or sympy expressions and returns a sympy 2x2 Matrix in the
    symbol A with c[m, m'] the coefficient of |m>|m'> in the orthonormal
    basis. Exact: M = S c S^T with S = [[d, 0], [1, r]].
    """
    import sympy

    A = sympy.Symbol("A")
    d = -(A**2) - A**-2
    r = sympy.sqrt(d**2 - 1)
    s = sympy.Matrix([[d, 0], [1, r]])
    m = sympy.Matrix(
        [
            [
                x.to_sympy(A) if isinstance(x, LaurentPoly) else sympy.sympify(x)
                for x in row
            ]
            for row in overlaps
        ]
    )
    c = s.inv() * m * s.inv().T
    return sympy.simplify(c)
