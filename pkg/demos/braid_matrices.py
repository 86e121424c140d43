# Braids as matrices on a spin chain
#
# Crossing two neighboring strands acts on (C^2)^(x n) by the R matrix
# R = A I + A^-1 U, where U is the cup-cap tensor satisfying U^2 = d U.
# The representation is pseudounitary: inverses are Hermitian conjugates
# twisted by the spin flip. Genuine unitarity happens exactly at
# A in {1, -1, i, -i}.

import numpy as np

from tqubit import braid_r_matrix, markov_trace, pseudounitary_conjugate, tl_e_matrix
from tqubit.bracket import kauffman_bracket
from tqubit.diagrams import braid_closure
from tqubit.rep import is_unitary_point, word_matrix

np.set_printoptions(precision=4, suppress=True, linewidth=120)

a = np.exp(1j * np.pi / 8)  # the k=2 point
d = -(a**2) - a**-2

r = braid_r_matrix(a)
u = tl_e_matrix(a)
print("U^2 - dU max entry:", np.abs(u @ u - d * u).max())
print("R - (A I + A^-1 U):", np.abs(r - (a * np.eye(4) + u / a)).max())

# R at A=1 is the plain swap: braiding degenerates to permutation.
print("R at A=1:\n", braid_r_matrix(1).real)

# Pseudounitarity: conjugating the Hermitian adjoint by spin flips
# inverts any braid word.
word = (1, -2, 1, 1)
m = word_matrix(word, 3, a)
print("pseudounitary inverse error:",
      np.abs(m @ pseudounitary_conjugate(m) - np.eye(8)).max())

for point in (1, -1, 1j, -1j, a):
    r = braid_r_matrix(point)
    err = np.abs(r.conj().T @ r - np.eye(4)).max()
    print(f"A = {point}: unitary point = {is_unitary_point(point)}, "
          f"|R'R - I| = {err:.2e}")

# The Markov trace turns braid words into link invariants: weighting the
# trace with diag(-A^2, -A^-2) per strand reproduces the Kauffman
# bracket of the braid closure.
for word, n in (((1, 1, 1), 2), ((1, -2, 1, -2), 3)):
    closure = braid_closure(word, n)
    lhs = markov_trace(word_matrix(word, n, a), a)
    rhs = kauffman_bracket(closure).evaluate(a)
    print(f"word {word}: markov {lhs:.6f}  bracket {rhs:.6f}")
