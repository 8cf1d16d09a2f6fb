"""
Combinations when two plus entries agree
========================================

With plus_1 = plus_2 the labels no longer give a basis of primitive
vectors; differences of source labels and sums of target labels do.
Entries are read after substituting w_1j = w_2j + 1.
"""

from odd_linkage import MultiIndex, PiCombination, Weight, enumerate_all_with_content, content, psi_matrix, tie_rules
from odd_linkage.tableaux import enumerate_marked, leading_label, orbit_labels, skew_shapes_from

IJ = MultiIndex.parse("123|123")
w = Weight((4, 4, 2), (3, 2, 1))
a = [str(x) for x in enumerate_all_with_content(content(IJ))]

# one row vector per tableau: the sum over its orbit
Dplus, _ = skew_shapes_from(w, IJ)
rows = []
for s, T in enumerate(enumerate_marked(Dplus, IJ.J, w), 1):
    orbit = orbit_labels(T, w)
    print(f"T{s}", [str(x) for x in orbit], "leading", leading_label(T, w))
    print(T.render())
    rows.append(PiCombination("target", {x: 1 for x in orbit}, name=f"T{s}"))

# the three collections of differences a_x - a_y
collections = [
    [(1, 8), (7, 2), (13, 26), (19, 32), (25, 14), (31, 20)],
    [(3, 10), (9, 4), (15, 28), (21, 34), (27, 16), (33, 22)],
    [(5, 12), (11, 6), (17, 30), (23, 36), (29, 18), (35, 24)],
]
rules = tie_rules(3, 3, [(1, 2)])
for block in collections:
    cols = [PiCombination("source", {a[x - 1]: 1, a[y - 1]: -1}, name=f"a{x}-a{y}") for x, y in block]
    print()
    print(psi_matrix(rows, cols, rules=rules).render())
