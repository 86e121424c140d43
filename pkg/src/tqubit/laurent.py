"""Exact Laurent polynomials in the variable A with integer coefficients.

The skein recursion only ever multiplies by monomials A**m and by the loop
value d = -A**2 - A**-2, so integer coefficients are closed under everything
the bracket engine does. Keeping the type tiny and hashable lets diagrams
memoize on exact values and lets tests assert Laurent identities literally.
"""

from __future__ import annotations

from typing import Iterator, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial sum(c_e * A**e) with c_e in Z.

    Instances are hashable and compare by value. The string form lists
    terms in ascending exponent order, e.g. ``-1*A^-2 + -1*A^2``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                if c:
                    clean[int(exp)] = int(c)
        self._coeffs: dict[int, int] = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        """The single term coeff * A**exp."""
        return cls({exp: coeff})

    @classmethod
    def variable(cls) -> "LaurentPoly":
        """The generator A itself."""
        return cls({1: 1})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for LaurentPoly")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by A**m."""
        return LaurentPoly({e + m: c for e, c in self._coeffs.items()})

    # -- evaluation --------------------------------------------------------

    def evaluate(self, a: complex) -> complex:
        """Numeric value at A = a."""
        return sum(c * a**e for e, c in self._coeffs.items()) if self._coeffs else 0j

    def to_sympy(self, symbol):
        """The same polynomial as a sympy expression in `symbol`."""
        import sympy

        return sympy.Add(*(c * symbol**e for e, c in self._coeffs.items()), sympy.Integer(0))

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({} if other == 0 else {0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in sorted(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"


A = LaurentPoly.variable()

#: The loop value d = -A**2 - A**-2; every closed circle contributes one factor.
LOOP = LaurentPoly({2: -1, -2: -1})
