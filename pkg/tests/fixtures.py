"""Frozen expected values, written down before the implementation was run against them."""

# vertex kinds of the seven 3x3 DWBC states, one string per row, copied from
# the published list of state weights
DWBC3_KIND_GRIDS = {
    ("c1 a2 a2", "a1 c1 a2", "a1 a1 c1"),
    ("c1 a2 a2", "a1 b1 c1", "a1 c1 b2"),
    ("b1 c1 a2", "c1 c2 c1", "a1 c1 b2"),
    ("b1 b1 c1", "b1 c1 b2", "c1 b2 b2"),
    ("b1 b1 c1", "c1 a2 b2", "a1 c1 b2"),
    ("b1 c1 a2", "c1 b2 a2", "a1 a1 c1"),
    ("b1 c1 a2", "b1 a1 c1", "c1 b2 b2"),
}

DWBC_COUNTS = {1: 1, 2: 2, 3: 7, 4: 42}

DWBC1 = "1 - a1*b1"
DWBC2_FACTORS = ("x2 + y1", "1 - a1*b1", "1 - a2*b1", "1 - a2*b2")
DWBC3_FACTORS = ("x2 + y1", "x3 + y1", "x3 + y2", "1 - a1*b1", "1 - a2*b1", "1 - a2*b2",
                 "1 - a3*b1", "1 - a3*b2", "1 - a3*b3")

# closed forms of the solved cross for pair (2, 1), written as a common ray
H_CROSS_21 = {"a1": "x2 + y1", "a2": "x1 + y2", "b1": "y1 - y2", "b2": "x2 - x1",
              "c1": "x1 + y1", "c2": "x2 + y2"}
V_CROSS_21 = {"a1": "a2*b1 - 1", "a2": "a1*b2 - 1", "b1": "b2 - b1", "b2": "a1 - a2",
              "c1": "a2*b2 - 1", "c2": "a1*b1 - 1"}

WORD_532_421 = "dH1 dH2 dH4 dH3 dV4 dV2 dV3 dV1 dV2"

# Z at y = 0, b = 0 for n = 1, m = 2
SCHUR_N1_M2 = {(1,): "x1 - a2", (2,): "1"}
