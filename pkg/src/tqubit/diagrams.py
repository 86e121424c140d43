"""Planar diagram data structures: links, tangles, and Temperley-Lieb matchings.

A diagram is stored PD-style: each crossing is a 4-tuple of arc identifiers
listed counterclockwise starting from the incoming under-strand, so the tuple
positions are (bottom-left, bottom-right, top-right, top-left). The two
smoothings of a crossing (a, b, c, d) are

    A-smoothing:  join (a, d) and (b, c)   (vertical wiring)
    B-smoothing:  join (a, b) and (c, d)   (horizontal wiring)

Tangles carry an ordered boundary tuple of arc identifiers; each arc id
appears exactly twice across crossing slots and boundary slots combined
(an arc has two endpoints). Crossingless circles that carry no arcs at all
are tracked by an explicit free_loops counter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import (
    BoundaryMismatch,
    HasCrossings,
    IndexOutOfRange,
    OpenBoundary,
    SizeMismatch,
)

Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class TangleDiagram:
    """A planar tangle: crossings, free loops, and an ordered boundary.

    With an empty boundary this is a closed link diagram; the alias
    LinkDiagram exists for that reading.
    """

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    boundary: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "boundary", tuple(int(x) for x in self.boundary))
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        for c in self.crossings:
            if len(c) != 4:
                raise ValueError(f"crossing {c!r} is not a 4-tuple")
        counts: dict[int, int] = {}
        for c in self.crossings:
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        for a in self.boundary:
            counts[a] = counts.get(a, 0) + 1
        bad = {a: n for a, n in counts.items() if n != 2}
        if bad:
            raise ValueError(f"arc ids must occur exactly twice, got {bad}")

    # -- basic structure ----------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return not self.boundary

    @property
    def arc_count(self) -> int:
        ids = {a for c in self.crossings for a in c} | set(self.boundary)
        return len(ids)

    def canonical(self) -> "TangleDiagram":
        """A relabeled, deterministically ordered equivalent diagram.

        Used as a memoization key: the map is a pure function of the
        diagram, two diagrams with the same canonical form differ at most
        by arc relabeling (which never changes the bracket), and the map is
        idempotent. Renaming rounds are iterated until they revisit a
        state; the smallest state on that cycle is the canonical form,
        so re-canonicalizing lands on the same diagram.
        """
        seen: set[tuple] = set()
        trail: list[tuple] = []
        state = (
            tuple(sorted(_rotate(c) for c in self.crossings)),
            tuple(self.boundary),
        )
        while state not in seen:
            seen.add(state)
            trail.append(state)
            state = _rename_round(state)
        crossings, boundary = min(trail[trail.index(state):])
        return TangleDiagram(crossings, self.free_loops, boundary)

    # -- skein --------------------------------------------------------------

    def resolve_crossing(self, index: int) -> tuple["TangleDiagram", "TangleDiagram"]:
        """The (A-smoothing, B-smoothing) pair at one crossing.

        Each result has one crossing fewer; circles closed by the smoothing
        are absorbed into free_loops.
        """
        if not 0 <= index < len(self.crossings):
            raise IndexOutOfRange(f"no crossing {index} in a {len(self.crossings)}-crossing diagram")
        a, b, c, d = self.crossings[index]
        rest = self.crossings[:index] + self.crossings[index + 1 :]
        smooth_a = _merge(rest, self.boundary, self.free_loops, [(a, d), (b, c)])
        smooth_b = _merge(rest, self.boundary, self.free_loops, [(a, b), (c, d)])
        return smooth_a, smooth_b

    def pairing(self) -> frozenset[tuple[int, int]]:
        """Boundary positions paired by arcs, for a crossingless tangle."""
        if self.crossings:
            raise HasCrossings("pairing is defined for crossingless tangles")
        where: dict[int, list[int]] = {}
        for pos, a in enumerate(self.boundary):
            where.setdefault(a, []).append(pos)
        return frozenset((p[0], p[1]) for p in where.values())


LinkDiagram = TangleDiagram


def _rotate(c: Sequence[int]) -> Crossing:
    """Pick the smaller of the two under-strand-preserving writings."""
    t = tuple(c)
    u = (t[2], t[3], t[0], t[1])
    return t if t <= u else u


def _rename_round(state: tuple) -> tuple:
    """One pass of first-appearance arc renaming on a sorted crossing list."""
    crossings, boundary = state
    rename: dict[int, int] = {}
    for c in crossings:
        for a in c:
            rename.setdefault(a, len(rename))
    for a in boundary:
        rename.setdefault(a, len(rename))
    return (
        tuple(sorted(_rotate(tuple(rename[a] for a in c)) for c in crossings)),
        tuple(rename[a] for a in boundary),
    )


def _merge(
    crossings: Iterable[Crossing],
    boundary: Sequence[int],
    loops: int,
    pairs: list[tuple[int, int]],
) -> TangleDiagram:
    """Identify arc pairs, counting circles that close in the process.

    When both members of a pair are already the same arc, its two endpoints
    are being joined to each other; since every id occurs exactly twice,
    that arc must be a bare circle, so free_loops grows by one.
    """
    cs = [list(c) for c in crossings]
    bd = list(boundary)
    todo = [list(p) for p in pairs]
    for i, (x, y) in enumerate(todo):
        if x == y:
            loops += 1
            continue
        for c in cs:
            for j in range(4):
                if c[j] == y:
                    c[j] = x
        for j in range(len(bd)):
            if bd[j] == y:
                bd[j] = x
        for later in todo[i + 1 :]:
            for j in range(2):
                if later[j] == y:
                    later[j] = x
    return TangleDiagram(tuple(tuple(c) for c in cs), loops, tuple(bd))


def count_loops(d: TangleDiagram) -> int:
    """Number of circles in a crossingless closed diagram."""
    if d.crossings:
        raise HasCrossings("count_loops requires a crossingless diagram")
    if not d.is_closed:
        raise OpenBoundary("count_loops requires an empty boundary")
    return d.free_loops


def compose(top: TangleDiagram, bottom: TangleDiagram, joined: int | None = None) -> TangleDiagram:
    """Stack two tangles, gluing a suffix of top.boundary to a prefix of bottom.boundary.

    Position len(top.boundary)-joined+i of the top meets position i of the
    bottom. The result's boundary is the unglued top prefix followed by the
    unglued bottom suffix. Defaults to the largest possible overlap.
    """
    if joined is None:
        joined = min(len(top.boundary), len(bottom.boundary))
    if joined > len(top.boundary) or joined > len(bottom.boundary):
        raise BoundaryMismatch(
            f"cannot join {joined} points of boundaries with "
            f"{len(top.boundary)} and {len(bottom.boundary)} points"
        )
    offset = (max((a for c in top.crossings for a in c), default=-1),
              max(top.boundary, default=-1))
    shift = max(offset) + 1
    bot_cross = tuple(tuple(a + shift for a in c) for c in bottom.crossings)
    bot_bd = [a + shift for a in bottom.boundary]
    pairs = [
        (top.boundary[len(top.boundary) - joined + i], bot_bd[i])
        for i in range(joined)
    ]
    merged = _merge(
        top.crossings + bot_cross,
        top.boundary[: len(top.boundary) - joined] + tuple(bot_bd[joined:]),
        top.free_loops + bottom.free_loops,
        pairs,
    )
    return merged.canonical()


def pair_tangles(ket: TangleDiagram, bra: TangleDiagram) -> TangleDiagram:
    """Glue two tangles boundary-position-to-boundary-position into a closed diagram.

    This is the transpose pairing: position j of the ket is identified with
    position j of the bra, and both PD tuples are kept verbatim.
    """
    if len(ket.boundary) != len(bra.boundary):
        raise SizeMismatch(
            f"boundary lengths differ: {len(ket.boundary)} vs {len(bra.boundary)}"
        )
    shift = max(
        [a for c in ket.crossings for a in c] + list(ket.boundary), default=-1
    ) + 1
    bra_cross = tuple(tuple(a + shift for a in c) for c in bra.crossings)
    bra_bd = [a + shift for a in bra.boundary]
    pairs = list(zip(ket.boundary, bra_bd))
    return _merge(
        ket.crossings + bra_cross, (), ket.free_loops + bra.free_loops, pairs
    )


# -- braid-word builders ----------------------------------------------------


def braid_tangle(word: Sequence[int], n: int) -> TangleDiagram:
    """The open tangle of a braid word on n strands.

    Letters are nonzero integers: +i is the positive generator crossing
    strands i and i+1 (1-indexed), -i its inverse. Boundary order is the
    n bottom points left to right, then the n top points left to right.
    """
    if n < 1:
        raise ValueError("need at least one strand")
    cur = list(range(n))
    nxt = n
    crossings: list[Crossing] = []
    for letter in word:
        i = abs(letter) - 1
        if letter == 0 or i >= n - 1:
            raise IndexOutOfRange(f"letter {letter} does not fit on {n} strands")
        x, y = cur[i], cur[i + 1]
        x2, y2 = nxt, nxt + 1
        nxt += 2
        if letter > 0:
            crossings.append((x, y, y2, x2))
        else:
            crossings.append((y, y2, x2, x))
        cur[i], cur[i + 1] = x2, y2
    return TangleDiagram(tuple(crossings), 0, tuple(range(n)) + tuple(cur))


def braid_closure(word: Sequence[int], n: int) -> TangleDiagram:
    """The trace closure of a braid word: top point i is joined to bottom point i."""
    open_tangle = braid_tangle(word, n)
    bottom = open_tangle.boundary[:n]
    top = open_tangle.boundary[n:]
    return _merge(
        open_tangle.crossings, (), open_tangle.free_loops, list(zip(bottom, top))
    )


def writhe(word: Sequence[int]) -> int:
    """Sum of letter signs of a braid word."""
    return sum(1 if s > 0 else -1 for s in word)


# -- crossingless wiring fixtures -------------------------------------------


def cup_tangle() -> TangleDiagram:
    """Two boundary points joined by a single arc."""
    return TangleDiagram((), 0, (0, 0))


def hat_zero_tangle() -> TangleDiagram:
    """Adjacent cups on four points: the first diagrammatic basis vector."""
    return TangleDiagram((), 0, (0, 0, 1, 1))


def hat_one_tangle() -> TangleDiagram:
    """Nested cups on four points: the second diagrammatic basis vector."""
    return TangleDiagram((), 0, (0, 1, 1, 0))


def nested_connector() -> TangleDiagram:
    """Eight points, position i tied to position 7-i (two spheres, four lines)."""
    return TangleDiagram((), 0, (0, 1, 2, 3, 3, 2, 1, 0))


def double_cups() -> TangleDiagram:
    """Eight points paired adjacently: the product of two hat-zero states."""
    return TangleDiagram((), 0, (0, 0, 1, 1, 2, 2, 3, 3))


def bridge_connector() -> TangleDiagram:
    """Eight points: cups at each end, two lines across the middle.

    Pairs (0,1), (2,5), (3,4), (6,7).
    """
    return TangleDiagram((), 0, (0, 0, 1, 2, 2, 1, 3, 3))


def folded_clasp_core() -> TangleDiagram:
    """A four-crossing tangle on four points: one strand folds back on itself
    and the other threads the resulting loop.

    Built from bottom to top: a cup opens a fold at the far left, the four
    crossings weave the fold through both strands, and a cap closes it.
    Boundary order is (bottom-left, bottom-right, top-left, top-right).
    Its Temperley-Lieb content is exactly

        -(A^6 + A^-6) * identity  -  (A^2 - A^-2)^2 * cup-cap,

    the unique four-crossing decomposition class with those magnitudes.
    """
    return TangleDiagram(
        (((2, 0, 4, 3), (3, 6, 5, 2), (4, 1, 10, 7), (7, 10, 9, 6))),
        0,
        (0, 1, 5, 9),
    )


def threaded_kink_tangle() -> TangleDiagram:
    """The four-crossing two-sphere tangle whose skein expansion is computed in full.

    The folded clasp sits across the two outer lines of the nested
    connector (rotated a quarter turn); the two inner lines run straight.
    Expanding every crossing gives

        -(A^2 - A^-2)^2 * nested_connector  -  (A^6 + A^-6) * bridge_connector,

    which in the orthonormal two-qubit basis is the state
    (A^4 + A^-4)^2 |00> - (A^2 - A^-2)^2 |11>.
    """
    core = folded_clasp_core()
    b0, b1, t0, t1 = core.boundary
    s, t = 900, 901
    # Quarter-turn placement: circular order (b1, t1, t0, b0) meets the
    # sphere punctures (A-side outer, A-side next, B-side next, B-side outer).
    return TangleDiagram(core.crossings, 0, (b1, t1, s, t, t, s, t0, b0))


def partial_closure_right(t: TangleDiagram, n: int) -> TangleDiagram:
    """Close the last strand of an n-strand braid-style tangle around the right.

    The tangle's boundary must be (bottom 0..n-1, top 0..n-1); the result
    keeps boundary (bottom 0..n-2, top 0..n-2).
    """
    if len(t.boundary) != 2 * n:
        raise SizeMismatch("boundary does not look like an n-strand tangle")
    bottom = t.boundary[:n]
    top = t.boundary[n:]
    merged = _merge(
        t.crossings,
        bottom[: n - 1] + top[: n - 1],
        t.free_loops,
        [(bottom[n - 1], top[n - 1])],
    )
    return merged


# -- Temperley-Lieb matchings ------------------------------------------------


def catalan_dim(n: int) -> int:
    """dim TL_n, the n-th Catalan number."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class Matching:
    """A non-crossing perfect matching of 2n points on a circle.

    Points 0..n-1 are the bottom row left to right; points n..2n-1 continue
    counterclockwise, so top slot j (left to right) is point 2n-1-j.
    """

    n: int
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        norm = frozenset(tuple(sorted(p)) for p in self.pairs)
        object.__setattr__(self, "pairs", norm)
        seen = [x for p in self.pairs for x in p]
        if sorted(seen) != list(range(2 * self.n)):
            raise ValueError("pairs must cover 0..2n-1 exactly once")
        for a, b in self.pairs:
            for c, d in self.pairs:
                if a < c < b < d:
                    raise ValueError(f"matching crosses: ({a},{b}) and ({c},{d})")

    def partner(self, x: int) -> int:
        for a, b in self.pairs:
            if a == x:
                return b
            if b == x:
                return a
        raise IndexOutOfRange(f"no point {x}")


def tl_identity(n: int) -> Matching:
    return Matching(n, frozenset((i, 2 * n - 1 - i) for i in range(n)))


def tl_generator(n: int, i: int) -> Matching:
    """The cup-cap generator e_i, 1-indexed, i in 1..n-1."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"e_{i} does not exist in TL_{n}")
    pairs = {(i - 1, i), (2 * n - 1 - i, 2 * n - i)}
    for j in range(n):
        if j not in (i - 1, i):
            pairs.add((j, 2 * n - 1 - j))
    return Matching(n, frozenset(pairs))


def tl_multiply(x: Matching, y: Matching) -> tuple[Matching, int]:
    """Stack y on top of x, returning the resulting matching and closed-loop count."""
    if x.n != y.n:
        raise SizeMismatch(f"TL sizes differ: {x.n} vs {y.n}")
    n = x.n
    # Combined node space: x's points are 0..2n-1, y's are offset by 2n.
    adj: dict[int, list[int]] = {}

    def link(u: int, v: int):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for a, b in x.pairs:
        link(a, b)
    for a, b in y.pairs:
        link(a + 2 * n, b + 2 * n)
    for j in range(n):
        link(2 * n - 1 - j, j + 2 * n)  # x's top slot j meets y's bottom slot j

    external = [j for j in range(n)] + [j + 2 * n for j in range(n, 2 * n)]
    seen: set[int] = set()
    pairs = set()
    for start in external:
        if start in seen:
            continue
        # Walk the path from one external point to the other.
        prev, cur = None, start
        seen.add(cur)
        while True:
            nbrs = adj[cur]
            nxt = nbrs[0] if nbrs[0] != prev else nbrs[-1]
            prev, cur = cur, nxt
            seen.add(cur)
            if cur in external and cur != start:
                break
        a = start if start < 2 * n else start - 2 * n
        b = cur if cur < 2 * n else cur - 2 * n
        pairs.add((a, b))
    loops = 0
    interior = {x for x in adj if x not in external}
    todo = interior - seen
    while todo:
        loops += 1
        node = next(iter(todo))
        comp = {node}
        stack = [node]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        todo -= comp
    return Matching(n, frozenset(pairs)), loops
