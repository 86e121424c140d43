# Kauffman bracket basics
#
# A link diagram is stored as a list of crossings. Each crossing is a
# 4-tuple of arc identifiers listed counterclockwise starting from the
# incoming under-strand. Arcs shared by two crossings (or closed onto a
# boundary point) carry the same identifier. Evaluating the bracket
# resolves one crossing at a time: the A-smoothing joins the first and
# fourth legs, the B-smoothing the first and second, and every closed
# circle contributes a factor d = -A^2 - A^-2.

from tqubit import LinkDiagram, braid_closure, kauffman_bracket, state_sum_bracket
from tqubit.qubit import ChernSimonsParams

# The unknot: no crossings, one free circle.
unknot = LinkDiagram((), 1, ())
print("unknot: ", kauffman_bracket(unknot))

# Two split circles multiply the loop value.
print("2 circles:", kauffman_bracket(LinkDiagram((), 2, ())))

# Braid words give closed diagrams without writing crossing tuples by
# hand: letter +i crosses strands i and i+1 positively, -i negatively,
# and the closure joins top and bottom.
kink = braid_closure((1,), 2)          # unknot with one positive kink
hopf = braid_closure((1, 1), 2)        # Hopf link
trefoil = braid_closure((1, 1, 1), 2)  # right trefoil

for name, link in (("kink", kink), ("hopf", hopf), ("trefoil", trefoil)):
    print(f"{name:8s}", kauffman_bracket(link))

# The kink value is the unknot times -A^3: the bracket is a regular
# isotopy invariant, and the first Reidemeister move costs that factor.

# Numeric evaluation at a Chern-Simons level. At k=2 the loop value is
# -sqrt(2); the classical limit sends A to 1 and d to -2.
k2 = ChernSimonsParams.from_level(2)
poly = kauffman_bracket(trefoil)
print("trefoil at k=2:     ", poly.evaluate(k2.a))
print("trefoil at A=1:     ", poly.evaluate(1))

# The memoized recursion agrees with the brute-force sum over all 2^c
# smoothings (here 8 states for the trefoil).
assert kauffman_bracket(trefoil) == state_sum_bracket(trefoil)
print("state-sum check: ok")

# JSON files with the same fields feed the command line:
#   tqubit bracket my_link.json --exact
#   tqubit bracket my_link.json --k 2
