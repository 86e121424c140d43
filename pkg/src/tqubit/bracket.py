"""Kauffman bracket evaluation by skein recursion with memoization.

Conventions: the empty diagram evaluates to 1, a single circle to the loop
value delta = -A^2 - A^-2, and a crossing splits as A times its A-smoothing
plus A^-1 times its B-smoothing. All results are exact Laurent polynomials
in A with integer coefficients.
"""

from __future__ import annotations

from .diagrams import LinkDiagram, TangleDiagram, pair_tangles
from .errors import DiagramTooLarge, OpenBoundary
from .laurent import LOOP, LaurentPoly

MAX_CROSSINGS = 24


def kauffman_bracket(diagram: LinkDiagram, *, max_crossings: int = MAX_CROSSINGS) -> LaurentPoly:
    """Exact bracket polynomial of a closed diagram.

    Raises DiagramTooLarge beyond max_crossings (default 24) and
    OpenBoundary for tangles.
    """
    if not diagram.is_closed:
        raise OpenBoundary("the bracket is defined for closed diagrams")
    if len(diagram.crossings) > max_crossings:
        raise DiagramTooLarge(
            f"{len(diagram.crossings)} crossings exceeds the cap of {max_crossings}"
        )
    memo: dict[TangleDiagram, LaurentPoly] = {}
    return _bracket(diagram, memo)


def _bracket(d: TangleDiagram, memo: dict[TangleDiagram, LaurentPoly]) -> LaurentPoly:
    if not d.crossings:
        return LOOP ** d.free_loops
    # Free loops factor straight out, so the memo key ignores them.
    key = TangleDiagram(d.crossings, 0, d.boundary).canonical()
    cached = memo.get(key)
    if cached is None:
        smooth_a, smooth_b = key.resolve_crossing(0)
        cached = LaurentPoly.monomial(1, 1) * _bracket(smooth_a, memo) + LaurentPoly.monomial(1, -1) * _bracket(smooth_b, memo)
        memo[key] = cached
    return cached * (LOOP ** d.free_loops)


def state_sum_bracket(diagram: LinkDiagram) -> LaurentPoly:
    """Brute-force bracket: sum A^(a-b) delta^loops over all 2^c smoothing states.

    An independent oracle for the memoized recursion; practical to about
    eight crossings.
    """
    if not diagram.is_closed:
        raise OpenBoundary("the bracket is defined for closed diagrams")
    c = len(diagram.crossings)
    total = LaurentPoly.zero()
    for state in range(1 << c):
        d = diagram
        exponent = 0
        for i in range(c):
            smooth_a, smooth_b = d.resolve_crossing(0)
            if (state >> i) & 1:
                d = smooth_b
                exponent -= 1
            else:
                d = smooth_a
                exponent += 1
        total = total + LaurentPoly.monomial(1, exponent) * (LOOP ** d.free_loops)
    return total


def bracket_of_tangle_pairing(ket: TangleDiagram, bra: TangleDiagram) -> LaurentPoly:
    """Bracket of the closed diagram obtained by gluing two tangles point to point.

    This realizes the bilinear (transpose) pairing of tangle states: no
    coefficient conjugation is implied.
    """
    return kauffman_bracket(pair_tangles(ket, bra))


def expand_tangle(
    diagram: TangleDiagram, *, max_crossings: int = MAX_CROSSINGS
) -> dict[frozenset[tuple[int, int]], LaurentPoly]:
    """Resolve every crossing of a tangle into crossingless boundary pairings.

    Returns a map from boundary-position pairings to their exact Laurent
    coefficients, with each leaf's closed circles already folded in as
    powers of the loop value.
    """
    if len(diagram.crossings) > max_crossings:
        raise DiagramTooLarge(
            f"{len(diagram.crossings)} crossings exceeds the cap of {max_crossings}"
        )
    out: dict[frozenset[tuple[int, int]], LaurentPoly] = {}
    _expand(diagram, LaurentPoly.one(), out)
    return {k: v for k, v in out.items() if not v.is_zero()}


def _expand(d: TangleDiagram, coeff: LaurentPoly, out: dict) -> None:
    if not d.crossings:
        key = d.pairing()
        term = coeff * (LOOP ** d.free_loops)
        out[key] = out.get(key, LaurentPoly.zero()) + term
        return
    smooth_a, smooth_b = d.resolve_crossing(0)
    _expand(smooth_a, coeff * LaurentPoly.monomial(1, 1), out)
    _expand(smooth_b, coeff * LaurentPoly.monomial(1, -1), out)
