"""Embedded reference values for the regression and reproduction suites.

These are the expected outputs the package is checked against: sign tables
for the cataloged AME states, block-entropy value sets for the two
dodecahedron states, the printed Reed-Solomon generator for p = 11, and the
(solid, feature) -> AME label table. They are data, deliberately duplicated
from the constructors they validate, so any drift in the implementation
surfaces as a diff.
"""

from __future__ import annotations

import numpy as np

from .gf import GfMatrix

# 32 signs of the tabulated 5-qubit perfect state, index = binary s1...s5.
REFERENCE_AME52_SIGNS = (
    +1, +1, +1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, +1, +1, +1,
    +1, +1, -1, -1, +1, -1, +1, -1, -1, +1, -1, +1, -1, -1, +1, +1,
)

# The same state as printed in flat list form; kept separately so the two
# presentations can be diffed against each other.
REFERENCE_AME52_FLAT = (
    1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1,
    1, 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1,
    -1, -1, 1, -1, 1, -1, -1, 1, 1,
)

# 64 signs of the 6-qubit perfect state, index = binary s1...s6.
REFERENCE_AME62_SIGNS = (
    -1, -1, -1, +1, -1, +1, +1, +1,
    -1, -1, -1, +1, +1, -1, -1, -1,
    -1, -1, +1, -1, -1, +1, -1, -1,
    +1, +1, -1, +1, -1, +1, -1, -1,
    -1, +1, -1, -1, -1, -1, +1, -1,
    +1, -1, +1, +1, -1, -1, +1, -1,
    +1, -1, -1, -1, +1, +1, +1, -1,
    +1, -1, -1, -1, -1, -1, -1, +1,
)

# Reference block-entropy value sets (bits) per block size |A| for the two
# 20-qubit dodecahedron states.
REFERENCE_D1_ENTROPY_SETS = {
    1: {1}, 2: {2}, 3: {3}, 4: {4}, 5: {5}, 6: {6},
    7: {6, 7}, 8: {7, 8}, 9: {7, 8, 9}, 10: {7, 8, 9, 10},
}
REFERENCE_D2_ENTROPY_SETS = {
    1: {1}, 2: {2}, 3: {3}, 4: {3, 4}, 5: {4, 5}, 6: {5, 6},
    7: {6, 7}, 8: {6, 7, 8}, 9: {7, 8}, 10: {7, 8},
}

# Printed 6x12 Reed-Solomon generator over GF(11): rows are increasing powers
# of the column evaluation points 0..10, final column is the infinity point.
REFERENCE_RS11_GENERATOR = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0),
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0),
    (0, 1, 4, 9, 5, 3, 3, 5, 9, 4, 1, 0),
    (0, 1, 8, 5, 9, 4, 7, 2, 6, 3, 10, 0),
    (0, 1, 5, 4, 3, 9, 9, 3, 4, 5, 1, 0),
    (0, 1, 10, 1, 1, 1, 10, 10, 10, 1, 10, 1),
)


def reference_rs11() -> GfMatrix:
    return GfMatrix(np.array(REFERENCE_RS11_GENERATOR, dtype=np.int64), 11)


# (solid, feature) -> (count n, AME label "AME(n,n-1)").
REFERENCE_SOLID_CODE_TABLE = {
    ("tetrahedron", "faces"): (4, "AME(4,3)"),
    ("tetrahedron", "edges"): (6, "AME(6,5)"),
    ("tetrahedron", "vertices"): (4, "AME(4,3)"),
    ("hexahedron", "faces"): (6, "AME(6,5)"),
    ("hexahedron", "edges"): (12, "AME(12,11)"),
    ("hexahedron", "vertices"): (8, "AME(8,7)"),
    ("octahedron", "faces"): (8, "AME(8,7)"),
    ("octahedron", "edges"): (12, "AME(12,11)"),
    ("octahedron", "vertices"): (6, "AME(6,5)"),
    ("dodecahedron", "faces"): (12, "AME(12,11)"),
    ("dodecahedron", "edges"): (30, "AME(30,29)"),
    ("dodecahedron", "vertices"): (20, "AME(20,19)"),
    ("icosahedron", "faces"): (20, "AME(20,19)"),
    ("icosahedron", "edges"): (30, "AME(30,29)"),
    ("icosahedron", "vertices"): (12, "AME(12,11)"),
}

# Reed-Solomon AME(12,11) facts: minimum Hamming distance and code dimension.
REFERENCE_RS11_MIN_DISTANCE = 7
REFERENCE_RS11_K = 6

# Dodecahedron parity code (the support of the even-parity state): dimension
# and minimum distance, recorded from exhaustive weight enumeration.
REFERENCE_D2_CODE_K = 8
REFERENCE_D2_MIN_DISTANCE = 6

# Hovering 12-qubit state: balanced 6|6 entropies lie in this closed range.
REFERENCE_HOVERING_RANGE = (4, 6)
