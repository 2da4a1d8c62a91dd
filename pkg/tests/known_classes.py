"""Published classification tables of real Bott manifolds of dimension 3 and 4.

Matrices are canonical key strings (above-diagonal bits, row-major).  Each
item lists the normal-form representatives printed for the class together
with the size of their conjugacy class under block-preserving permutations
(``None`` where no size is printed).
"""

from app.models.bott_matrix import BottMatrix

# 5: computed by this classifier, not taken from a published table
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 12, 5: 54}

DIM_2 = [
    {"type": (2,), "orientable": True, "matrices": {"0": None}},
    {"type": (1, 1), "orientable": False, "matrices": {"1": None}},
]

DIM_3 = [
    {"type": (3,), "orientable": True, "matrices": {"000": None}},
    {"type": (2, 1), "orientable": False, "matrices": {"001": None, "010": None, "011": None}},
    {"type": (1, 2), "orientable": True, "matrices": {"110": None}},
    {"type": (1, 1, 1), "orientable": False, "matrices": {"101": None, "111": None}},
]

DIM_4 = [
    {"type": (4,), "orientable": True, "matrices": {"000000": 1}},
    {"type": (3, 1), "orientable": False, "matrices": {"000001": 3, "000011": 3, "001011": 1}},
    {"type": (2, 2), "orientable": True, "matrices": {"000110": 2, "011110": 1}},
    {"type": (2, 2), "orientable": False, "matrices": {"001100": 2, "010110": 4}},
    {
        "type": (2, 1, 1),
        "orientable": False,
        "matrices": {"000101": 2, "000111": 2, "010101": 1, "011111": 1},
    },
    {
        "type": (2, 1, 1),
        "orientable": False,
        "matrices": {"001101": 2, "010111": 2, "001111": 2},
    },
    {"type": (1, 3), "orientable": False, "matrices": {"111000": 1}},
    {
        "type": (1, 2, 1),
        "orientable": False,
        "matrices": {"110001": 2, "110011": 1, "111001": 2, "111011": 1},
    },
    {"type": (1, 1, 2), "orientable": True, "matrices": {"110110": 2}},
    {"type": (1, 1, 2), "orientable": False, "matrices": {"100110": 1, "111110": 1}},
    {
        "type": (1, 1, 1, 1),
        "orientable": False,
        # the printed listing stops at three matrices; 101111 is a further normal
        # form of this type whose ring is isomorphic to 101101, so it lands here
        "matrices": {"101101": 1, "110111": 1, "111101": 1, "101111": 1},
    },
    {
        "type": (1, 1, 1, 1),
        "orientable": False,
        "matrices": {"100101": 1, "110101": 1, "100111": 1, "111111": 1},
    },
]

TABLES = {2: DIM_2, 3: DIM_3, 4: DIM_4}


def key_matrix(n: int, key: str) -> BottMatrix:
    return BottMatrix.from_key(n, int(key, 2)) if key else BottMatrix.zero(n)
