"""Built-in consistency checks, runnable via the command line.

Each check prints one PASS/FAIL line with a descriptive label. The checks
re-derive key identities numerically and exactly, so a corrupted matrix or
table entry anywhere in the package makes at least one of them fail.
"""

from __future__ import annotations

import math
import sys
from typing import Callable, TextIO

import numpy as np

from . import bracket as _bracket
from . import diagrams as _diagrams
from . import protocols as _protocols
from . import qubit as _qubit
from . import rep as _rep
from .laurent import LOOP, LaurentPoly

_RNG_SEED = 20240811


def _random_unit_a(rng) -> complex:
    return complex(np.exp(1j * rng.uniform(0, 2 * math.pi)))


def check_catalan_dims() -> None:
    expected = [1, 2, 5, 14, 42, 132, 429, 1430]
    got = [_diagrams.catalan_dim(n) for n in range(1, 9)]
    assert got == expected, got


def check_unknot_bracket() -> None:
    d = _diagrams.braid_closure([], 1)
    assert _bracket.kauffman_bracket(d) == LOOP


def check_kinked_unknot_bracket() -> None:
    d = _diagrams.braid_closure([1], 2)
    assert _bracket.kauffman_bracket(d) == LaurentPoly.monomial(-1, 3) * LOOP


def check_hopf_bracket() -> None:
    d = _diagrams.braid_closure([1, 1], 2)
    expected = LOOP * LaurentPoly({4: -1, -4: -1})
    assert _bracket.kauffman_bracket(d) == expected


def check_trefoil_bracket() -> None:
    d = _diagrams.braid_closure([1, 1, 1], 2)
    expected = LOOP * LaurentPoly({5: -1, -3: -1, -7: 1})
    assert _bracket.kauffman_bracket(d) == expected


def check_skein_splits_locally() -> None:
    a_poly = LaurentPoly.monomial(1, 1)
    b_poly = LaurentPoly.monomial(1, -1)
    for word, n in (([1, 1], 2), ([1, 1, 1], 2), ([1, -2, 1, -2], 3)):
        d = _diagrams.braid_closure(word, n)
        whole = _bracket.kauffman_bracket(d)
        for i in range(len(d.crossings)):
            sa, sb = d.resolve_crossing(i)
            split = a_poly * _bracket.kauffman_bracket(sa) + b_poly * _bracket.kauffman_bracket(sb)
            assert split == whole, (word, i)


def check_memo_matches_state_sum() -> None:
    samples = [
        _diagrams.braid_closure([1], 2),
        _diagrams.braid_closure([1, 1, 1], 2),
        _diagrams.braid_closure([1, -2, 1, -2], 3),
        _diagrams.braid_closure([1, 1, 2, 2], 3),
        _diagrams.pair_tangles(_diagrams.threaded_kink_tangle(), _diagrams.double_cups()),
    ]
    for d in samples:
        assert _bracket.kauffman_bracket(d) == _bracket.state_sum_bracket(d)


def check_gram_matrix() -> None:
    g = _qubit.gram_matrix()
    d2 = LOOP * LOOP
    assert g[0][0] == d2 and g[1][1] == d2 and g[0][1] == LOOP and g[1][0] == LOOP


def check_nested_connector_state() -> None:
    rng = np.random.default_rng(_RNG_SEED)
    a = _random_unit_a(rng)
    psi = _qubit.wire_state(_diagrams.nested_connector(), a)
    v0, v1 = _qubit.on_basis_vectors(a)
    c = np.array(
        [[np.dot(np.kron(x, y), psi) for y in (v0, v1)] for x in (v0, v1)]
    )
    assert np.allclose(c, np.eye(2), atol=1e-9), c
    rho = c @ c.conj().T
    rho /= np.trace(rho)
    assert np.allclose(rho, np.eye(2) / 2, atol=1e-9)


def check_bridge_connector_state() -> None:
    rng = np.random.default_rng(_RNG_SEED + 1)
    a = _random_unit_a(rng)
    _, d = _qubit.unit_a_params(a)
    psi = _qubit.wire_state(_diagrams.bridge_connector(), a)
    v0, v1 = _qubit.on_basis_vectors(a)
    c = np.array(
        [[np.dot(np.kron(x, y), psi) for y in (v0, v1)] for x in (v0, v1)]
    )
    assert np.allclose(c, np.array([[d, 0], [0, 0]]), atol=1e-9), c


def check_folded_clasp_expansion() -> None:
    terms = _bracket.expand_tangle(_diagrams.threaded_kink_tangle())
    nested = _diagrams.nested_connector().pairing()
    bridge = _diagrams.bridge_connector().pairing()
    p = -1 * (LaurentPoly({2: 1, -2: -1}) ** 2)
    q = -1 * LaurentPoly({6: 1, -6: 1})
    assert set(terms) == {nested, bridge}
    assert terms[nested] == p and terms[bridge] == q


def check_hat_vectors_match_wire_states() -> None:
    rng = np.random.default_rng(_RNG_SEED + 2)
    a = _random_unit_a(rng)
    for bit, tangle in ((0, _diagrams.hat_zero_tangle()), (1, _diagrams.hat_one_tangle())):
        assert np.allclose(
            _rep.hat_vector(bit, a), _qubit.wire_state(tangle, a), atol=1e-12
        )


def check_r_matrix_skein_split() -> None:
    rng = np.random.default_rng(_RNG_SEED + 3)
    a = _random_unit_a(rng)
    r = _rep.braid_r_matrix(a)
    u = _rep.tl_e_matrix(a)
    _, d = _qubit.unit_a_params(a)
    assert np.allclose(r, a * np.eye(4) + (1 / a) * u, atol=1e-12)
    assert np.allclose(u @ u, d * u, atol=1e-12)
    assert abs(np.trace(u) - d) < 1e-12
    assert np.allclose(r @ _rep.braid_r_matrix(a, inverse=True), np.eye(4), atol=1e-12)


def check_braid_and_tl_relations() -> None:
    rng = np.random.default_rng(_RNG_SEED + 4)
    a = _random_unit_a(rng)
    n = 4
    g = [None] + [_rep.braid_generator_matrix(n, i, a) for i in range(1, n)]
    e = [None] + [_rep.tl_generator_matrix(n, i, a) for i in range(1, n)]
    _, d = _qubit.unit_a_params(a)
    assert np.allclose(g[1] @ g[2] @ g[1], g[2] @ g[1] @ g[2], atol=1e-9)
    assert np.allclose(g[1] @ g[3], g[3] @ g[1], atol=1e-12)
    assert np.allclose(e[1] @ e[1], d * e[1], atol=1e-9)
    assert np.allclose(e[1] @ e[2] @ e[1], e[1], atol=1e-9)
    assert np.allclose(e[2] @ e[1] @ e[2], e[2], atol=1e-9)


def check_pseudounitarity() -> None:
    rng = np.random.default_rng(_RNG_SEED + 5)
    a = _random_unit_a(rng)
    r = _rep.braid_r_matrix(a)
    assert np.allclose(
        _rep.pseudounitary_conjugate(r), _rep.braid_r_matrix(a, inverse=True), atol=1e-12
    )
    word = [1, -2, 3, 1]
    m = _rep.word_matrix(word, 4, a)
    m_inv = _rep.word_matrix([-s for s in reversed(word)], 4, a)
    assert np.allclose(_rep.pseudounitary_conjugate(m), m_inv, atol=1e-9)


def check_unitary_points() -> None:
    for a in (1, -1, 1j, -1j):
        r = _rep.braid_r_matrix(a)
        assert np.allclose(r.conj().T @ r, np.eye(4), atol=1e-12), a
    swap = np.eye(4)[[0, 2, 1, 3]]
    assert np.allclose(_rep.braid_r_matrix(1), swap, atol=1e-12)


def check_markov_vs_bracket() -> None:
    rng = np.random.default_rng(_RNG_SEED + 6)
    a = _random_unit_a(rng)
    fixtures = (([1], 2), ([1, 1], 2), ([1, 1, 1], 2), ([-1], 2), ([1, -2, 1, -2], 3))
    for word, n in fixtures:
        tr = _rep.markov_trace(_rep.word_matrix(word, n, a), a)
        br = _bracket.kauffman_bracket(_diagrams.braid_closure(word, n)).evaluate(a)
        assert abs(tr - br) < 1e-9, (word, tr, br)
    # Writhe normalization: (-A^3)^(-w) removes the kink dependence.
    kinked = _rep.markov_trace(_rep.word_matrix([1], 2, a), a) / (-(a**3))
    plain = _rep.markov_trace(np.eye(2, dtype=complex), a)
    assert abs(kinked - plain) < 1e-9


def check_coefficient_factorization() -> None:
    rng = np.random.default_rng(_RNG_SEED + 7)
    params = _qubit.ChernSimonsParams.from_level(int(rng.integers(2, 12)))
    alpha, beta = rng.normal(size=2)
    enc = _protocols.encode_stochastic(alpha, beta, params)
    block = enc.coefficients[:, 0, 0, :]
    sv = np.linalg.svd(block, compute_uv=False)
    assert sv[1] < 1e-10 * sv[0], sv
    d = params.d
    r = math.sqrt(params.delta)
    col = np.array([alpha * d + beta, r * beta])
    row = np.array([1 / d**3, r / d**3])
    assert np.allclose(block, np.outer(col, row), atol=1e-12)


def check_pattern_probabilities_sum() -> None:
    rng = np.random.default_rng(_RNG_SEED + 8)
    params = _qubit.ChernSimonsParams.from_level(int(rng.integers(2, 30)))
    alpha, beta = rng.normal(size=2)
    enc = _protocols.encode_stochastic(alpha, beta, params)
    total = sum(o.probability for o in _protocols.all_outcomes(enc))
    assert abs(total - 1.0) < 1e-10, total


def check_level_two_probability_flat() -> None:
    params = _qubit.ChernSimonsParams.from_level(2)
    for i in range(36):
        phi = 2 * math.pi * i / 36
        p = _protocols.success_probability(phi, params)
        assert abs(p - 0.25) < 1e-12, (phi, p)


def check_classical_probability_peak() -> None:
    params = _qubit.ChernSimonsParams.classical_limit()
    values = [
        _protocols.success_probability(2 * math.pi * i / 720, params) for i in range(720)
    ]
    assert abs(max(values) - 9 / 28) < 1e-6, max(values)
    spread = max(values) - min(values)
    assert spread < 1e-12, spread


def check_minus_one_equals_classical() -> None:
    pm = _qubit.ChernSimonsParams.from_level(-1)
    pc = _qubit.ChernSimonsParams.classical_limit()
    for i in range(180):
        phi = 2 * math.pi * i / 180
        assert abs(
            _protocols.success_probability(phi, pm) - _protocols.success_probability(phi, pc)
        ) < 1e-9


def check_large_level_probability_floor() -> None:
    params = _qubit.ChernSimonsParams.from_level(1000)
    values = [
        _protocols.success_probability(2 * math.pi * i / 180, params) for i in range(180)
    ]
    assert min(values) >= 0.29, min(values)
    assert max(values) - min(values) <= 0.03


def check_schmidt_ranks_by_pattern() -> None:
    rng = np.random.default_rng(_RNG_SEED + 9)
    for _ in range(10):
        params = _qubit.ChernSimonsParams.from_level(int(rng.integers(2, 40)))
        phi = rng.uniform(0, 2 * math.pi)
        alpha, beta = _qubit.on_to_hat(math.sin(phi), math.cos(phi), complex(params.d))
        enc = _protocols.encode_stochastic(alpha, beta, params)
        ranks = {
            o.pattern: _protocols.schmidt_rank(o.post_state)
            for o in _protocols.all_outcomes(enc)
        }
        assert ranks == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 2}, ranks


def check_stochastic_recovery_roundtrip() -> None:
    params = _qubit.ChernSimonsParams.from_level(3)
    enc = _protocols.encode_stochastic(1.0, 0.0, params)
    rec = _protocols.recover_after_00(_protocols.measure_top_bottom(enc, (0, 0)))
    assert abs(rec.alpha - 1.0) < 1e-9 and abs(rec.beta) < 1e-9
    assert abs(rec.fidelity - 1.0) < 1e-10


def check_braiding_recovery_fidelity() -> None:
    rng = np.random.default_rng(_RNG_SEED + 10)
    for a in (1, -1, 1j, -1j):
        alpha, beta = rng.normal(size=2)
        fid = _protocols.recovery_fidelity(alpha, beta, a)
        assert abs(fid - 1.0) < 1e-10, (a, fid)


def check_recovery_unitary_is_unitary() -> None:
    rng = np.random.default_rng(_RNG_SEED + 11)
    for a in (1, -1, 1j, -1j, _random_unit_a(rng)):
        u = _protocols.recovery_unitary(a)
        assert np.allclose(u.conj().T @ u, np.eye(8), atol=1e-12), a


CHECKS: list[tuple[str, Callable[[], None]]] = [
    ("Temperley-Lieb dimensions 1..8 are the Catalan numbers", check_catalan_dims),
    ("unknot bracket equals the loop value", check_unknot_bracket),
    ("single positive kink multiplies the bracket by -A^3", check_kinked_unknot_bracket),
    ("Hopf link bracket", check_hopf_bracket),
    ("trefoil bracket", check_trefoil_bracket),
    ("skein relation holds at every crossing of sample links", check_skein_splits_locally),
    ("memoized bracket equals the brute-force state sum", check_memo_matches_state_sum),
    ("hat-basis Gram matrix is [[d^2, d], [d, d^2]]", check_gram_matrix),
    ("nested connector carries the maximally entangled two-qubit state", check_nested_connector_state),
    ("bridge connector carries d |00>", check_bridge_connector_state),
    ("folded clasp expands to its exact Temperley-Lieb decomposition", check_folded_clasp_expansion),
    ("hat basis vectors match crossingless wire states", check_hat_vectors_match_wire_states),
    ("R matrix splits as A I + A^-1 U with U^2 = d U", check_r_matrix_skein_split),
    ("braid and Temperley-Lieb relations hold on four sites", check_braid_and_tl_relations),
    ("spin-flip conjugation inverts braid words", check_pseudounitarity),
    ("R matrix is unitary at the four special points and swaps at A=1", check_unitary_points),
    ("Markov trace matches the bracket of braid closures", check_markov_vs_bracket),
    ("favorable-pattern coefficients factorize as a product state", check_coefficient_factorization),
    ("measurement pattern probabilities sum to one", check_pattern_probabilities_sum),
    ("success probability is exactly 1/4 at level two", check_level_two_probability_flat),
    ("classical-limit success probability peaks at 9/28", check_classical_probability_peak),
    ("level minus-one matches the classical limit pointwise", check_minus_one_equals_classical),
    ("success probability stays above 0.29 at level 1000", check_large_level_probability_floor),
    ("Schmidt ranks by pattern are 1, 1, 1, 2", check_schmidt_ranks_by_pattern),
    ("measuring 00 recovers the source qubit exactly", check_stochastic_recovery_roundtrip),
    ("braiding protocol has unit fidelity at the four special points", check_braiding_recovery_fidelity),
    ("recovery unitary satisfies U' U = I", check_recovery_unitary_is_unitary),
]


def run(stream: TextIO | None = None) -> int:
    """Run every check, print one line each, and return a process exit code."""
    out = stream if stream is not None else sys.stdout
    failures = 0
    for label, fn in CHECKS:
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - a failed check is a failed check
            failures += 1
            out.write(f"FAIL  {label}  ({type(exc).__name__}: {exc})\n")
        else:
            out.write(f"PASS  {label}\n")
    out.write(f"{len(CHECKS) - failures}/{len(CHECKS)} checks passed\n")
    return 1 if failures else 0
