"""Hand-transcribed reference data for the worked examples (m = n = 3).

Entries are strings in the package's expression syntax; "1-ω12" and
"-ω12+1" parse to the same thing.
"""

# -- I = J = 123 -------------------------------------------------------------

ROWS_123 = ["123|123", "123|213", "123|132", "123|312", "123|231", "123|321"]

_BLOCKS_123 = {
    "123": "123 213 132 312 231 321",
    "213": "213 123 312 132 321 231",
    "132": "132 231 123 321 213 312",
    "312": "312 321 213 231 123 132",
    "231": "231 132 321 123 312 213",
    "321": "321 312 231 213 132 123",
}
COLS_123 = [f"{I}|{J}" for I, Js in _BLOCKS_123.items() for J in Js.split()]

_M123_A = """
ω33 0 -1 0 0 -1 -ω33 0 1 0 0 1
0 ω33 0 -1 -1 0 0 -ω33 0 1 1 0
0 0 ω32 0 -1 0 0 0 -ω32 0 1 0
0 0 0 ω32 0 -1 0 0 0 -ω32 0 1
0 0 0 0 ω31 0 0 0 0 0 -ω31 0
0 0 0 0 0 ω31 0 0 0 0 0 -ω31
"""
_M123_B = """
-ω22 1 -1 0 0 0 ω22 -1 1 0 0 0
0 -ω21 0 0 -1 0 0 ω21 0 0 1 0
0 0 -ω23 1 0 0 0 0 ω23 -1 0 0
0 0 0 -ω22 0 -1 0 0 0 ω22 0 1
0 0 0 0 -ω23 1 0 0 0 0 ω23 -1
0 0 0 0 0 -ω22 0 0 0 0 0 ω22
"""
_M123_C = """
ω11 1 0 0 0 1 -ω11 -1 0 0 0 -1
0 ω12 0 1 0 0 0 -ω12 0 -1 0 0
0 0 ω11 1 1 0 0 0 -ω11 -1 -1 0
0 0 0 ω13 0 0 0 0 0 -ω13 0 0
0 0 0 0 ω12 1 0 0 0 0 -ω12 -1
0 0 0 0 0 ω13 0 0 0 0 0 -ω13
"""


def _grid(*parts):
    blocks = [[line.split() for line in p.strip().splitlines()] for p in parts]
    return [sum((b[r] for b in blocks), []) for r in range(len(blocks[0]))]


MATRIX_123 = _grid(_M123_A, _M123_B, _M123_C)

LEGEND_CONSTANTS = {
    (3, 3): -2, (3, 2): -1, (3, 1): 0,
    (2, 3): -1, (2, 2): 0, (2, 1): 1,
    (1, 3): 0, (1, 2): 1, (1, 1): 2,
}

OSETS_123 = {
    "123|123": {"ω33", "ω22", "ω11"},
    "123|213": {"ω33", "ω21", "ω12"},
    "123|132": {"ω32", "ω23", "ω11"},
    "123|312": {"ω32", "ω21", "ω13"},
    "123|231": {"ω31", "ω23", "ω12"},
    "123|321": {"ω31", "ω22", "ω13"},
}

# -- I = 113, J = 123 --------------------------------------------------------

ROWS_113_123 = ["113|123", "113|132", "113|231"]
COLS_113_123 = (
    [f"113|{J}" for J in "123 213 132 312 231 321".split()]
    + [f"131|{J}" for J in "132 231 123 321 213 312".split()]
    + [f"311|{J}" for J in "312 321 213 231 123 132".split()]
)
MATRIX_113_123 = _grid(
    """
    ω33 -ω33 -1 1 1 -1 -ω12+1 ω11 -1 0
    0 0 ω32 -ω32 -1 1 0 0 -ω13+1 ω11
    0 0 0 0 ω31 -ω31 0 0 0 0
    """,
    """
    1 0 ω12-1 -ω11 1 0 -1 0
    0 1 0 0 ω13-1 -ω11 0 -1
    -ω13+1 ω12 0 0 0 0 ω13-1 -ω12
    """,
)
OSETS_113_123 = {
    "113|123": {"ω33", "ω12-1", "ω11"},
    "113|132": {"ω32", "ω11", "ω13-1"},
    "113|231": {"ω31", "ω12", "ω13-1"},
}
CHAIN_113_123 = ((1, 1, 3), (1, 2, 3))  # lambda ~ l_11 ~ l_11|12 ~ l_113|123

# -- I = 113, J = 112 --------------------------------------------------------

ROWS_113_112 = ["113|121"]
COLS_113_112 = ["113|121", "113|211", "131|112", "131|211", "311|112", "311|121"]
MATRIX_113_112 = [["ω31", "-ω31", "1-ω12", "ω11+1", "ω12-1", "-ω11-1"]]
OSETS_113_112 = {"113|121": {"ω31", "ω12-1", "ω11+1"}}
CHAIN_113_112 = ((3, 1, 1), (1, 1, 2))  # lambda ~ l_31 ~ l_31|11 ~ l_311|112

# -- I = 123, J = 111 --------------------------------------------------------

ROWS_123_111 = ["123|111"]
COLS_123_111 = [f"{I}|111" for I in "123 213 132 312 231 321".split()]
MATRIX_123_111 = [["ω31", "-ω31", "-ω21-1", "ω21+1", "ω11+2", "-ω11-2"]]
OSETS_123_111 = {"123|111": {"ω31", "ω21+1", "ω11+2"}}
CHAIN_123_111 = ((3, 2, 1), (1, 1, 1))  # lambda ~ l_31 ~ l_32|11 ~ l_321|111

# -- I = J = 123 with plus_1 = plus_2 ----------------------------------------
# Rows are b1+b2, b3+b4, b5+b6; columns are differences a_x - a_y, indices
# into COLS_123 counted from 1.

TIED_ROWS = [("123|123", "123|213"), ("123|132", "123|312"), ("123|231", "123|321")]
TIED_COLLECTIONS = [
    [(1, 8), (7, 2), (13, 26), (19, 32), (25, 14), (31, 20)],
    [(3, 10), (9, 4), (15, 28), (21, 34), (27, 16), (33, 22)],
    [(5, 12), (11, 6), (17, 30), (23, 36), (29, 18), (35, 24)],
]
TIED_MATRICES = [
    [["ω33", "-ω33", "-ω12", "ω12", "ω21", "-ω21"],
     ["0"] * 6,
     ["0"] * 6],
    [["-1", "1", "-1", "1", "0", "0"],
     ["ω32", "-ω32", "-ω13", "ω13", "ω21", "-ω21"],
     ["0"] * 6],
    [["-1", "1", "-1", "1", "0", "0"],
     ["-1", "1", "0", "0", "1", "-1"],
     ["ω31", "-ω31", "-ω13", "ω13", "ω22", "-ω22"]],
]
TIED_OSETS = [{"ω33", "ω12", "ω21"}, {"ω32", "ω13", "ω21"}, {"ω31", "ω13", "ω22"}]
