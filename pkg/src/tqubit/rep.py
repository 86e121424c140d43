"""Pseudounitary braid-group and Temperley-Lieb matrices on spin-1/2 chains.

The braid generator acts on neighboring spins by the 4x4 matrix

    R = A * I + A^-1 * U,      R^-1 = A^-1 * I + A * U,

where U is the cup-cap projector with middle block [[-A^-2, 1], [1, -A^2]],
satisfying U^2 = d U. R is unitary exactly when A is 1, -1, i, or -i;
elsewhere it is only pseudounitary: conjugating the Hermitian adjoint by
the spin-flip tensor power recovers the inverse. Closed diagrams are
evaluated through the Markov trace, a trace weighted by diag(-A^2, -A^-2)
on every site, which reproduces the bracket of the braid closure.

Dense matrices are built up to 8 sites (256 x 256); beyond that, operators
are applied to vectors through their Kronecker factor structure, up to 16
sites.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, SizeMismatch
from .qubit import ChernSimonsParams, coerce_params

DENSE_LIMIT = 8
APPLY_LIMIT = 16

UNITARY_POINTS = (1 + 0j, -1 + 0j, 1j, -1j)


def is_unitary_point(a: complex, tol: float = 1e-12) -> bool:
    """Whether A is one of the four fourth roots of unity."""
    return any(abs(a - p) <= tol for p in UNITARY_POINTS)


def tl_e_matrix(p: "ChernSimonsParams | complex") -> np.ndarray:
    """The 4x4 cup-cap projector U, with U^2 = d U and ordinary trace d."""
    a, _ = coerce_params(p)
    u = np.zeros((4, 4), dtype=complex)
    u[1, 1] = -(a**-2)
    u[1, 2] = 1
    u[2, 1] = 1
    u[2, 2] = -(a**2)
    return u


def braid_r_matrix(p: "ChernSimonsParams | complex", inverse: bool = False) -> np.ndarray:
    """The 4x4 braid generator R = A I + A^-1 U, or its inverse A^-1 I + A U."""
    a, _ = coerce_params(p)
    u = tl_e_matrix(p)
    if inverse:
        return (1 / a) * np.eye(4, dtype=complex) + a * u
    return a * np.eye(4, dtype=complex) + (1 / a) * u


def spin_flip(n: int) -> np.ndarray:
    """The tensor power of [[0, 1], [1, 0]] on n sites."""
    if n > DENSE_LIMIT:
        raise SizeMismatch(f"dense operators stop at {DENSE_LIMIT} sites")
    sigma = np.array([[0, 1], [1, 0]], dtype=complex)
    out = np.array([[1]], dtype=complex)
    for _ in range(n):
        out = np.kron(out, sigma)
    return out


def pseudounitary_conjugate(m: np.ndarray) -> np.ndarray:
    """Spin-flip conjugation of the Hermitian adjoint: S m^dagger S.

    For every braid word matrix this returns the matrix of the inverse
    word, at any value of A.
    """
    dim = m.shape[0]
    n = dim.bit_length() - 1
    if m.shape != (dim, dim) or (1 << n) != dim:
        raise SizeMismatch(f"expected a square matrix of size 2^n, got {m.shape}")
    s = spin_flip(n)
    return s @ m.conj().T @ s


def _embed(block: np.ndarray, n: int, i: int) -> np.ndarray:
    if n > DENSE_LIMIT:
        raise SizeMismatch(f"dense operators stop at {DENSE_LIMIT} sites")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} does not fit on {n} sites")
    out = np.eye(1 << (i - 1), dtype=complex)
    out = np.kron(out, block)
    out = np.kron(out, np.eye(1 << (n - i - 1), dtype=complex))
    return out


def braid_generator_matrix(
    n: int, i: int, p: "ChernSimonsParams | complex", inverse: bool = False
) -> np.ndarray:
    """Dense 2^n x 2^n matrix of the i-th braid generator (1-indexed)."""
    return _embed(braid_r_matrix(p, inverse=inverse), n, i)


def tl_generator_matrix(n: int, i: int, p: "ChernSimonsParams | complex") -> np.ndarray:
    """Dense 2^n x 2^n matrix of the i-th cup-cap generator (1-indexed)."""
    return _embed(tl_e_matrix(p), n, i)


def word_matrix(word: Sequence[int], n: int, p: "ChernSimonsParams | complex") -> np.ndarray:
    """Product of braid generator matrices for a word; letter -i means the inverse.

    Letters act in reading order: the first letter is applied first, so the
    returned matrix is generator(last) ... generator(first).
    """
    out = np.eye(1 << n, dtype=complex)
    for letter in word:
        g = braid_generator_matrix(n, abs(letter), p, inverse=letter < 0)
        out = g @ out
    return out


def apply_braid_generator(
    vec: np.ndarray, i: int, p: "ChernSimonsParams | complex", inverse: bool = False
) -> np.ndarray:
    """Apply the i-th braid generator to a chain vector without building the matrix."""
    return _apply(vec, i, braid_r_matrix(p, inverse=inverse))


def apply_tl_generator(vec: np.ndarray, i: int, p: "ChernSimonsParams | complex") -> np.ndarray:
    """Apply the i-th cup-cap generator to a chain vector without building the matrix."""
    return _apply(vec, i, tl_e_matrix(p))


def _apply(vec: np.ndarray, i: int, block: np.ndarray) -> np.ndarray:
    dim = vec.shape[0]
    n = dim.bit_length() - 1
    if (1 << n) != dim or vec.ndim != 1:
        raise SizeMismatch(f"expected a vector of length 2^n, got shape {vec.shape}")
    if n > APPLY_LIMIT:
        raise SizeMismatch(f"vector actions stop at {APPLY_LIMIT} sites")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} does not fit on {n} sites")
    left = 1 << (i - 1)
    right = 1 << (n - i - 1)
    work = vec.reshape(left, 4, right)
    return np.einsum("ab,ibj->iaj", block, work).reshape(dim)


def markov_weights(n: int, p: "ChernSimonsParams | complex") -> np.ndarray:
    """Diagonal of the Markov trace weight (-A^2, -A^-2) tensored over n sites."""
    a, _ = coerce_params(p)
    site = np.array([-(a**2), -(a**-2)], dtype=complex)
    w = np.array([1], dtype=complex)
    for _ in range(n):
        w = np.kron(w, site)
    return w


def markov_trace(m: np.ndarray, p: "ChernSimonsParams | complex") -> complex:
    """Weighted trace that evaluates a braid word matrix to its closure's bracket."""
    dim = m.shape[0]
    n = dim.bit_length() - 1
    if m.shape != (dim, dim) or (1 << n) != dim:
        raise SizeMismatch(f"expected a square matrix of size 2^n, got {m.shape}")
    return complex(np.dot(markov_weights(n, p), np.diag(m)))


def hat_vector(bit: int, p: "ChernSimonsParams | complex") -> np.ndarray:
    """Spin-chain vector of a diagrammatic basis state on four sites.

    bit 0 is the adjacent-cup wiring, bit 1 the nested-cup wiring; indices
    are big-endian in the strand order.
    """
    a, _ = coerce_params(p)
    v = np.zeros(16, dtype=complex)
    if bit == 0:
        v[0b0101] = -(a**-2)
        v[0b0110] = 1
        v[0b1001] = 1
        v[0b1010] = -(a**2)
    elif bit == 1:
        v[0b0011] = -(a**-2)
        v[0b0101] = 1
        v[0b1010] = 1
        v[0b1100] = -(a**2)
    else:
        raise IndexOutOfRange(f"basis bit must be 0 or 1, got {bit}")
    return v
