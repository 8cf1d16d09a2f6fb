"""
The psi matrix for I = J = 123
==============================

Symbolic matrix over the 36 source labels, its legend, the six
triangular blocks, and the rank at a generic and a special weight.
"""

from odd_linkage import MultiIndex, Weight, basis_matrix, is_upper_triangular, legend, rank_rational

IJ = MultiIndex.parse("123|123")
M = basis_matrix(IJ)
print(M.render())
print()
print("\n".join(legend(3, 3)))

# consecutive sextuples of columns are triangular blocks
for b in range(6):
    cols = range(6 * b, 6 * b + 6)
    diag = [str(M.entries[t][6 * b + t]) for t in range(6)]
    print(M.cols[6 * b], is_upper_triangular(M.entries, col_order=cols), diag)

# generic weight: all nine w_ij are nonzero
generic = Weight((5, 4, 3), (3, 2, 1))
print("rank at", generic, "=", rank_rational(M.evaluate(generic)))

# special weight: w31 = w22 = w13 = 0
special = Weight((2, 1, 0), (0, -1, -2))
print("rank at", special, "=", rank_rational(M.evaluate(special)))
