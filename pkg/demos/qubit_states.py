# The four-puncture qubit and its diagram states
#
# Four punctures on a sphere carry a two-dimensional Hilbert space. The
# diagrammatic basis pairs the punctures by planar arcs: |0hat> is two
# adjacent cups, |1hat> is the nested pairing. The basis is NOT
# orthogonal; gluing two basis diagrams and evaluating the bracket gives
# the Gram matrix [[d^2, d], [d, d^2]].

import numpy as np

from tqubit import gram_matrix, hat_to_on, on_to_hat, wire_state
from tqubit.bracket import expand_tangle
from tqubit.diagrams import (
    bridge_connector,
    folded_clasp_core,
    nested_connector,
    threaded_kink_tangle,
)
from tqubit.qubit import ChernSimonsParams, computational_coefficients, pairing_overlaps

g = gram_matrix()
print("Gram matrix (exact Laurent):")
for row in g:
    print("  ", [str(x) for x in row])

# Hat coordinates vs orthonormal coordinates. The conversion depends
# only on d; it degenerates at d^2 = 1, which is why level k=1 is
# rejected everywhere.
k3 = ChernSimonsParams.from_level(3)
alpha, beta = 0.6, 0.8
c0, c1 = hat_to_on(alpha, beta, k3.d)
print("hat (0.6, 0.8) -> on", (round(c0.real, 6), round(c1.real, 6)))
print("round trip          ", tuple(round(x.real, 6) for x in on_to_hat(c0, c1, k3.d)))

# Two-qubit states from crossingless wirings of eight punctures.
# The fully nested connector is the maximally entangled |00> + |11>.
c = computational_coefficients(pairing_overlaps(nested_connector()))
print("nested connector coefficients:", c.tolist())

# The bridge wiring is separable: d |00>.
c = computational_coefficients(pairing_overlaps(bridge_connector()))
print("bridge connector coefficients:", c.tolist())

# A tangle WITH crossings: the folded clasp. Skein recursion expands it
# in the Temperley-Lieb algebra on two strands.
terms = expand_tangle(folded_clasp_core())
print("folded clasp expansion:")
for pairing, coeff in sorted(terms.items(), key=lambda kv: sorted(kv[0])):
    print("  ", sorted(pairing), "->", coeff)

# Threading the clasp between two nested lines gives a two-qubit state
# that is entangled but not maximally: (A^4+A^-4)^2 |00> - (A^2-A^-2)^2 |11>.
c = computational_coefficients(pairing_overlaps(threaded_kink_tangle()))
print("threaded clasp coefficients:")
print("  c00 =", c[0, 0])
print("  c01 =", c[0, 1], " c10 =", c[1, 0])
print("  c11 =", c[1, 1])

# Numerically, the same state comes from the spin-chain picture: each
# puncture is a spin-1/2 site and each arc a 4-component cup tensor.
v = wire_state(nested_connector(), k3.a)
print("nested connector wire state: 256 components,",
      int(np.count_nonzero(np.abs(v) > 1e-12)), "nonzero")
