"""Frozen reference values for the 4-qubit Star and the Kite family.

Each value was checked against the dense-matrix oracle before being frozen.
"""

STAR_SIGNS = (-1, 1, 1, 1, 1, 1)
STAR_SYMBOL = "12_2-1_5 4_4 1_3"
STAR_SYSTEM_SYMBOL = "16^1_6 32^2_5 4^4_4-1_16 8_12 2_10 14_8 4_6 1_4"

# Projector number ranges per context, and the common rank in each.
STAR_CONTEXT_RANGES = ((1, 16), (17, 24), (25, 32), (33, 40), (41, 48), (49, 52))
STAR_CONTEXT_RANKS = (1, 2, 2, 2, 2, 4)

# label -> projector numbers
STAR_BASES = {
    "1": range(1, 17),
    "2": range(17, 25),
    "3": range(25, 33),
    "4": range(33, 41),
    "5": range(41, 49),
    "6": range(49, 53),
    "7a": (1, 2, 3, 4, 5, 6, 7, 8, 21, 22, 23, 24),
    "7b": (9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20),
    "8a": (1, 2, 3, 4, 9, 10, 11, 12, 29, 30, 31, 32),
    "8b": (5, 6, 7, 8, 13, 14, 15, 16, 25, 26, 27, 28),
    "9a": (1, 3, 5, 7, 9, 11, 13, 15, 37, 38, 39, 40),
    "9b": (2, 4, 6, 8, 10, 12, 14, 16, 33, 34, 35, 36),
    "10a": (1, 4, 6, 7, 10, 11, 13, 16, 41, 42, 43, 44),
    "10b": (2, 3, 5, 8, 9, 12, 14, 15, 45, 46, 47, 48),
    "11a": (1, 2, 5, 6, 9, 10, 13, 14, 51, 52),
    "11b": (3, 4, 7, 8, 11, 12, 15, 16, 49, 50),
    "12a": (17, 18, 21, 22, 27, 28, 31, 32),
    "12b": (19, 20, 23, 24, 25, 26, 29, 30),
    "13a": (17, 19, 21, 23, 35, 36, 39, 40),
    "13b": (18, 20, 22, 24, 33, 34, 37, 38),
    "14a": (17, 20, 22, 23, 43, 44, 47, 48),
    "14b": (18, 19, 21, 24, 41, 42, 45, 46),
    "15a": (25, 28, 30, 31, 34, 35, 37, 40),
    "15b": (26, 27, 29, 32, 33, 36, 38, 39),
    "16a": (25, 27, 29, 31, 42, 43, 45, 48),
    "16b": (26, 28, 30, 32, 41, 44, 46, 47),
    "17a": (33, 35, 37, 39, 50, 52),
    "17b": (34, 36, 38, 40, 49, 51),
    "18a": (41, 43, 45, 47, 50, 51),
    "18b": (42, 44, 46, 48, 49, 52),
}

STAR_PROOF_COUNT = 4096

# (symbol, projectors, bases, count), in the published row order.
STAR_PROOF_CLASSES = (
    ("5^1_2 10^1_4 1^1_6 24^2_2 4^2_4 3^4_2-1_16 4_12 1_10 5_8 2_6", 47, 13, 128),
    ("10^1_2 5^1_4 22^2_2 7^2_4 3^4_2-4_12 1_10 6_8 2_6", 47, 13, 512),
    ("10^1_2 5^1_4 24^2_2 4^2_4 3^4_2 1^4_4-4_12 1_10 5_8 2_6 1_4", 47, 13, 128),
    ("5^1_2 10^1_4 1^1_6 20^2_2 10^2_4 3^4_2-1_16 4_12 1_10 7_8 2_6", 49, 15, 768),
    ("5^1_2 10^1_4 1^1_6 22^2_2 7^2_4 3^4_2 1^4_4-1_16 4_12 1_10 6_8 2_6 1_4", 49, 15, 512),
    ("10^1_2 5^1_4 18^2_2 13^2_4 3^4_2-4_12 1_10 8_8 2_6", 49, 15, 512),
    ("10^1_2 5^1_4 20^2_2 10^2_4 3^4_2 1^4_4-4_12 1_10 7_8 2_6 1_4", 49, 15, 768),
    ("5^1_2 10^1_4 1^1_6 16^2_2 16^2_4 3^4_2-1_16 4_12 1_10 9_8 2_6", 51, 17, 128),
    ("5^1_2 10^1_4 1^1_6 18^2_2 13^2_4 3^4_2 1^4_4-1_16 4_12 1_10 8_8 2_6 1_4", 51, 17, 512),
    ("10^1_2 5^1_4 16^2_2 16^2_4 3^4_2 1^4_4-4_12 1_10 9_8 2_6 1_4", 51, 17, 128),
)

# One example proof from each class above, same order.
STAR_EXAMPLE_PROOFS = (
    "7a 8a 9a 10a 11a 12a 13a 14b 15a 16a 17b 18b 1",
    "7a 8a 9a 10a 11b 12a 13a 14a 15a 16a 17b 18a 2",
    "7a 8a 9a 10a 11b 12a 13a 14b 15a 16a 17b 18b 6",
    "7a 8a 9a 10a 11a 12a 13a 14a 15a 16a 17a 18a 1 2 4",
    "7a 8a 9a 10a 11a 12a 13a 14a 15a 16a 17b 18a 1 2 6",
    "7a 8a 9a 10a 11b 12a 13a 14a 15a 16a 17a 18b 2 4 5",
    "7a 8a 9a 10a 11b 12a 13a 14a 15a 16a 17a 18a 2 4 6",
    "7a 8a 9a 10a 11a 12a 13a 14a 15a 16b 17a 18a 1 2 3 4 5",
    "7a 8a 9a 10a 11a 12a 13a 14a 15a 16a 17a 18b 1 2 4 5 6",
    "7a 8a 9a 10a 11b 12a 13a 14a 15a 16b 17a 18a 2 3 4 5 6",
)

# Nine hybrid pairs of a Kite in grouped projector numbers: (a member, b member).
KITE_HYBRID_PAIRS = (
    ({1, 2, 11, 12}, {3, 4, 9, 10}),
    ({1, 3, 15, 16}, {2, 4, 13, 14}),
    ({5, 6, 10, 12}, {7, 8, 9, 11}),
    ({5, 7, 14, 16}, {6, 8, 13, 15}),
    ({1, 4, 21, 22, 23, 24}, {2, 3, 17, 18, 19, 20}),
    ({5, 8, 19, 20, 23, 24}, {6, 7, 17, 18, 21, 22}),
    ({9, 12, 29, 30, 31, 32}, {10, 11, 25, 26, 27, 28}),
    ({13, 16, 27, 28, 31, 32}, {14, 15, 25, 26, 29, 30}),
    ({17, 18, 23, 24, 25, 26, 31, 32}, {19, 20, 21, 22, 27, 28, 29, 30}),
)

# The 16 nine-basis proofs, as pair members.
KITE_NINE_BASIS_PATTERNS = (
    "1a 2a 3a 4a 5b 6b 7b 8b 9b",
    "1a 2a 3a 4b 5b 6a 7b 8a 9a",
    "1a 2a 3b 4a 5b 6a 7a 8b 9a",
    "1a 2a 3b 4b 5b 6b 7a 8a 9b",
    "1a 2b 3a 4a 5a 6b 7b 8a 9a",
    "1a 2b 3a 4b 5a 6a 7b 8b 9b",
    "1a 2b 3b 4a 5a 6a 7a 8a 9b",
    "1a 2b 3b 4b 5a 6b 7a 8b 9a",
    "1b 2a 3a 4a 5a 6b 7a 8b 9a",
    "1b 2a 3a 4b 5a 6a 7a 8a 9b",
    "1b 2a 3b 4a 5a 6a 7b 8b 9b",
    "1b 2a 3b 4b 5a 6b 7b 8a 9a",
    "1b 2b 3a 4a 5b 6b 7a 8a 9b",
    "1b 2b 3a 4b 5b 6a 7a 8b 9a",
    "1b 2b 3b 4a 5b 6a 7b 8a 9a",
    "1b 2b 3b 4b 5b 6b 7b 8b 9b",
)

# Long contexts (G, H, tail) of the standard Kites for small N.
KITE_TAILS = {
    3: ("ZIZ", "XXX", ("IZZ", "YYX")),
    4: ("ZZZZ", "XIXI", ("YYZZ", "IXIX", "IIXX")),
    5: ("ZIIIZ", "XXXXX", ("IZIIZ", "IIZIZ", "IIIZZ", "-YYYYX")),
    6: ("ZZZZZZ", "XIXIII", ("YYZZZZ", "IXIXII", "IIXIXI", "IIIXIX", "IIIIXX")),
}

COMPRESSED_LONGEST = {"kite7": 5, "kite11": 6, "kite16": 7}
