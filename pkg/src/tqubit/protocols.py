"""Erasure recovery protocols for the four-puncture sphere qubit.

Two schemes are implemented. The stochastic one encodes a source qubit
(hat coordinates alpha, beta) into four qubits, loses the last one, and
measures the middle two; on outcome 00 the post-measurement state is
separable and the source is recovered exactly. The deterministic one
braids the source into a four-spin chain state; a recovery unitary on the
last three spins turns it into a GHZ factor times the source qubit at the
four values of A where the braid representation is honestly unitary.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateQubit,
    NonUnitaryPoint,
    NotApplicable,
    NotSeparable,
    ZeroVector,
)
from .qubit import ChernSimonsParams, coerce_params, hat_to_on, on_to_hat

Pattern = tuple[int, int]

_PATTERNS: tuple[Pattern, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


def coefficient_table(alpha, beta, d, a, root=None):
    """The sixteen encoding coefficients a[target, top, bottom, lost].

    Works with any arithmetic that supports +, *, / and powers: floats,
    complex numbers, or sympy expressions (pass the matching square root of
    d^2 - 1 as root when exactness matters).
    """
    delta = d * d - 1
    if root is None:
        root = cmath.sqrt(complex(delta))
    r = root
    a8 = a**8
    d3 = d**3
    s = alpha * d + beta
    t = alpha * d - beta / a8
    return {
        (0, 0, 0, 0): s / d3,
        (0, 0, 0, 1): r * s / d3,
        (0, 0, 1, 0): a8 * r * s / d3,
        (0, 0, 1, 1): -a8 * s / d3,
        (0, 1, 0, 0): r * beta / (a8 * d3),
        (0, 1, 0, 1): -beta / (a8 * d3),
        (0, 1, 1, 0): delta * beta / d3,
        (0, 1, 1, 1): beta / (r * d3),
        (1, 0, 0, 0): r * beta / d3,
        (1, 0, 0, 1): delta * beta / d3,
        (1, 0, 1, 0): -a8 * beta / d3,
        (1, 0, 1, 1): a8 * beta / (r * d3),
        (1, 1, 0, 0): t / d3,
        (1, 1, 0, 1): -t / (r * d3),
        (1, 1, 1, 0): -a8 * t / (r * d3),
        (1, 1, 1, 1): -(a**2 * alpha - beta) / d - (a**4 * alpha * d + beta) / (delta * d3),
    }


@dataclass(frozen=True)
class EncodedFourQubit:
    """Stochastic encoding of a source qubit across four sphere qubits.

    coefficients[i, j, k, l] multiplies |i>|j>|k>|l| in the orthonormal
    basis, with axes (target, top, bottom, lost).
    """

    coefficients: np.ndarray
    params: ChernSimonsParams
    source: tuple[complex, complex]

    @property
    def total_weight(self) -> float:
        return float(np.sum(np.abs(self.coefficients) ** 2))


@dataclass(frozen=True)
class MeasurementOutcome:
    """Result of measuring the middle two qubits of an encoded state."""

    pattern: Pattern
    post_state: np.ndarray  # 4 components on (target, lost), index 2*i + l
    probability: float
    params: ChernSimonsParams
    source: tuple[complex, complex]


def encode_stochastic(
    alpha: complex, beta: complex, params: ChernSimonsParams
) -> EncodedFourQubit:
    """Encode alpha |0hat> + beta |1hat> into the four-qubit state."""
    if params.degenerate:
        raise DegenerateQubit("d^2 == 1 (the k=1 level): the qubit space collapses")
    table = coefficient_table(alpha, beta, complex(params.d), params.a)
    coeffs = np.zeros((2, 2, 2, 2), dtype=complex)
    for idx, val in table.items():
        coeffs[idx] = val
    return EncodedFourQubit(coeffs, params, (alpha, beta))


def measure_top_bottom(enc: EncodedFourQubit, pattern: "Pattern | str") -> MeasurementOutcome:
    """Project the top and bottom qubits onto a computational pattern.

    The post-measurement state is left unnormalized; the probability is the
    trace ratio of the projected density matrix to the full one.
    """
    if isinstance(pattern, str):
        if len(pattern) != 2 or any(ch not in "01" for ch in pattern):
            raise ValueError(f"pattern must be two bits, got {pattern!r}")
        pattern = (int(pattern[0]), int(pattern[1]))
    j, k = pattern
    if (j, k) not in _PATTERNS:
        raise ValueError(f"pattern must be two bits, got {pattern!r}")
    post = enc.coefficients[:, j, k, :].reshape(4).copy()
    weight = float(np.sum(np.abs(post) ** 2))
    total = enc.total_weight
    return MeasurementOutcome(
        (j, k), post, weight / total, enc.params, enc.source
    )


def all_outcomes(enc: EncodedFourQubit) -> list[MeasurementOutcome]:
    return [measure_top_bottom(enc, p) for p in _PATTERNS]


def schmidt_rank(v: np.ndarray, tol: float = 1e-9) -> int:
    """Number of significant Schmidt coefficients of a bipartite vector.

    The vector is split evenly: length 4 means 2 x 2. Singular values count
    when they exceed tol times the largest one.
    """
    v = np.asarray(v, dtype=complex).reshape(-1)
    rows = 1 << (max(v.shape[0].bit_length() - 1, 2) // 2)
    m = v.reshape(rows, v.shape[0] // rows)
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0:
        raise ZeroVector("Schmidt rank of the zero vector is undefined")
    return int(np.sum(sv > tol * sv[0]))


@dataclass(frozen=True)
class RecoveredQubit:
    """Hat coordinates recovered from a measurement, with source fidelity."""

    alpha: complex
    beta: complex
    fidelity: float


def recover_after_00(outcome: MeasurementOutcome, tol: float = 1e-9) -> RecoveredQubit:
    """Split the separable 00 outcome and convert the target factor back.

    Raises NotApplicable for any other pattern and NotSeparable when the
    post-measurement state fails the rank-one check.
    """
    if outcome.pattern != (0, 0):
        raise NotApplicable(f"recovery needs pattern 00, outcome was {outcome.pattern}")
    if schmidt_rank(outcome.post_state, tol) != 1:
        raise NotSeparable("post-measurement state is not a product state")
    m = outcome.post_state.reshape(2, 2)
    u, sv, _ = np.linalg.svd(m)
    target_on = u[:, 0] * sv[0]
    alpha, beta = on_to_hat(target_on[0], target_on[1], complex(outcome.params.d))
    v = np.array([alpha, beta], dtype=complex)
    v /= np.linalg.norm(v)
    for x in v:
        if abs(x) > 1e-12:
            v *= x.conjugate() / abs(x)
            break
    src_on = np.array(hat_to_on(*outcome.source, complex(outcome.params.d)))
    rec_on = np.array(hat_to_on(v[0], v[1], complex(outcome.params.d)))
    fid = _fidelity(src_on, rec_on)
    return RecoveredQubit(complex(v[0]), complex(v[1]), fid)


def _fidelity(u: np.ndarray, v: np.ndarray) -> float:
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0 or nv == 0:
        raise ZeroVector("fidelity needs nonzero states")
    return float(abs(np.vdot(u, v)) ** 2 / (nu * nv) ** 2)


def success_probability(phi: float, params: ChernSimonsParams) -> float:
    """Probability of the favorable 00 pattern for the source angle phi.

    The source is parameterized on the orthonormal Bloch circle:
    (c0, c1) = (sin phi, cos phi), converted to hat coordinates first.
    """
    alpha, beta = on_to_hat(math.sin(phi), math.cos(phi), complex(params.d))
    enc = encode_stochastic(alpha, beta, params)
    return measure_top_bottom(enc, (0, 0)).probability


def probability_sweep(
    levels: Sequence[ChernSimonsParams], phi_steps: int
) -> Iterable[tuple[str, float, float]]:
    """Rows (label, phi, probability) over a uniform phi grid in [0, 2 pi).

    The loop is plain and serial so output order and values are
    reproducible bit for bit.
    """
    if phi_steps < 1:
        raise ValueError("phi_steps must be positive")
    for params in levels:
        for i in range(phi_steps):
            phi = 2.0 * math.pi * i / phi_steps
            yield params.label, phi, success_probability(phi, params)


# -- deterministic (braiding) protocol ---------------------------------------


@dataclass(frozen=True)
class FourSpinState:
    """The braided four-spin encoding of a real source qubit."""

    entries: np.ndarray  # 16 components, big-endian in the spin order
    a: complex
    source: tuple[float, float]


def encode_four_spin(alpha: float, beta: float, p: "ChernSimonsParams | complex") -> FourSpinState:
    """Braid a real source qubit alpha |0hat> + beta |1hat> into four spins."""
    if abs(complex(alpha).imag) > 1e-12 or abs(complex(beta).imag) > 1e-12:
        raise ValueError("this protocol is stated for real source coordinates")
    alpha = float(complex(alpha).real)
    beta = float(complex(beta).real)
    a, _ = coerce_params(p)
    bb = -(a**-2)
    cc = -(a**2)
    big_b = -(a**2) * beta
    big_c = complex(alpha)
    mid = bb * big_b + cc * big_c
    v = np.zeros(16, dtype=complex)
    v[0b0011] = big_b
    v[0b0101] = mid
    v[0b0110] = big_c
    v[0b1100] = np.conj(big_b)
    v[0b1010] = np.conj(mid)
    v[0b1001] = np.conj(big_c)
    return FourSpinState(v, a, (alpha, beta))


def _three_spin_frames(a: complex) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """The orthonormal input frame and output frame of the recovery unitary."""
    bb = -(a**-2)
    cc = -(a**2)

    def ket(x: int, y: int, z: int) -> np.ndarray:
        v = np.zeros(8, dtype=complex)
        v[4 * x + 2 * y + z] = 1
        return v

    phi0 = (-np.conj(bb) * ket(0, 1, 1) + ket(1, 0, 1) - np.conj(cc) * ket(1, 1, 0)) / math.sqrt(3)
    phi0c = (-bb * ket(1, 0, 0) + ket(0, 1, 0) - cc * ket(0, 0, 1)) / math.sqrt(3)
    phip = (-np.conj(bb) * ket(0, 1, 1) - 2 * ket(1, 0, 1) - np.conj(cc) * ket(1, 1, 0)) / math.sqrt(6)
    phipc = (-bb * ket(1, 0, 0) - 2 * ket(0, 1, 0) - cc * ket(0, 0, 1)) / math.sqrt(6)
    phim = (cc * ket(0, 1, 1) - bb * ket(1, 1, 0)) / math.sqrt(2)
    phimc = (np.conj(cc) * ket(1, 0, 0) - np.conj(bb) * ket(0, 0, 1)) / math.sqrt(2)

    tilde0 = np.array([-math.sqrt(3), -1.0]) / 2.0
    tilde1 = np.array([-1.0, math.sqrt(3)]) / 2.0

    def out(x: int, y: int, last: np.ndarray) -> np.ndarray:
        e = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
        return np.kron(np.kron(e[x], e[y]), last).astype(complex)

    ins = [phip, phipc, phim, phimc, phi0, phi0c, ket(0, 0, 0), ket(1, 1, 1)]
    outs = [
        out(0, 0, tilde0),
        out(1, 1, tilde0),
        out(0, 0, tilde1),
        out(1, 1, tilde1),
        out(0, 1, tilde0),
        out(1, 0, tilde0),
        out(0, 1, tilde1),
        out(1, 0, tilde1),
    ]
    return ins, outs


def recovery_unitary(p: "ChernSimonsParams | complex") -> np.ndarray:
    """The 8x8 disentangling unitary on the last three spins."""
    a, _ = coerce_params(p)
    ins, outs = _three_spin_frames(a)
    u = np.zeros((8, 8), dtype=complex)
    for vin, vout in zip(ins, outs):
        u += np.outer(vout, np.conj(vin))
    return u


@dataclass(frozen=True)
class RecoveryResult:
    """Outcome of applying the recovery unitary to a four-spin encoding."""

    state: np.ndarray  # the transformed 16-component vector
    qubit: np.ndarray  # orthonormal coordinates of the recovered factor
    leak: float  # weight outside the GHZ times qubit support
    fidelity: float  # against the source, phase insensitive


def apply_recovery(state: FourSpinState) -> RecoveryResult:
    """Disentangle the four-spin encoding into (|000> + |111>) times the source.

    Exact only when A is 1, -1, i, or -i; elsewhere a NonUnitaryPoint
    warning is issued and the projection is best effort.
    """
    a = state.a
    if not any(abs(a - pt) <= 1e-12 for pt in (1, -1, 1j, -1j)):
        warnings.warn(
            f"A = {a} is not one of the four unitary points; recovery is approximate",
            NonUnitaryPoint,
            stacklevel=2,
        )
    u = recovery_unitary(a)
    w = np.einsum("ab,ib->ia", u, state.entries.reshape(2, 8)).reshape(16)
    support = (0, 1, 14, 15)
    leak = float(
        np.linalg.norm([w[i] for i in range(16) if i not in support])
    )
    qubit = np.array([(w[0] + w[14]) / 2.0, (w[1] + w[15]) / 2.0])
    _, d = coerce_params(a)
    alpha, beta = state.source
    expected = np.array(hat_to_on(alpha, beta, d))
    fid = _fidelity(expected, qubit) if np.linalg.norm(qubit) > 0 else 0.0
    return RecoveryResult(w, qubit, leak, fid)


def recovery_fidelity(alpha: float, beta: float, p: "ChernSimonsParams | complex") -> float:
    """Fidelity of the braiding protocol end to end for a real source qubit."""
    return apply_recovery(encode_four_spin(alpha, beta, p)).fidelity
