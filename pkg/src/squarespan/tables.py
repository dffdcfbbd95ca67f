"""Reference value tables used for bounds, verification and tests.

Everything in this file is data, kept in one place on purpose:

* exact maximum counts for small n (reproduced independently by the
  enumeration in :mod:`squarespan.extension` and by the shipped extremal
  corpus, see tests);
* best known lower bounds for larger n (witnessed by the corpus records);
* class counts for the extension enumerations and for the corpus;
* the exact maximum sizes A(n, 6, 4) of binary constant-weight-4 codes
  with minimum distance 6 (OEIS A004037), used by the square upper-bound
  arguments.

Keys are point counts n; pair keys are (n, m) with m the figure count.
"""

# Exact values of the maximum number of isosceles right triangles spanned
# by n points (known exactly for n <= 14).
RIT_EXACT = {
    3: 1, 4: 4, 5: 8, 6: 11, 7: 15, 8: 20, 9: 28, 10: 35,
    11: 43, 12: 52, 13: 64, 14: 74,
}

# Exact values of the maximum number of squares spanned by n points
# (known exactly for n <= 17).
SQUARE_EXACT = {
    4: 1, 5: 1, 6: 2, 7: 3, 8: 4, 9: 6, 10: 7, 11: 8, 12: 11,
    13: 13, 14: 15, 15: 17, 16: 20, 17: 22,
}

# Exact values of the maximum of S_rit(P) - 3*S_square(P) for n points
# (n <= 9); the building block of the mixed upper-bound recursion.
RIT_MINUS_3SQ_EXACT = {
    0: 0, 1: 0, 2: 0, 3: 1, 4: 3, 5: 5, 6: 7, 7: 10, 8: 14, 9: 18,
}

# Best known lower bounds on the maximum rit count, 15 <= n <= 50.
RIT_LOWER = dict(zip(range(15, 51), [
    85, 97, 112, 124, 139, 156, 176, 192, 210, 229, 252, 271, 291,
    314, 338, 363, 389, 417, 448, 473, 501, 531, 564, 594, 626,
    659, 696, 728, 763, 799, 836, 874, 914, 955, 1000, 1038,
]))

# Best known lower bounds on the maximum square count, 4 <= n <= 100
# (equal to the exact values for n <= 17).
SQUARE_LOWER = dict(zip(range(4, 101), [
    1, 1, 2, 3, 4, 6, 7, 8, 11, 13, 15, 17, 20, 22, 25, 28, 32, 37,
    40, 43, 47, 51, 56, 60, 65, 70, 75, 81, 88, 92, 97, 103, 109, 117,
    123, 130, 137, 144, 151, 158, 166, 175, 182, 189, 198, 207, 216,
    226, 237, 245, 254, 263, 272, 282, 293, 303, 314, 324, 334, 346,
    358, 370, 382, 394, 407, 421, 431, 442, 454, 466, 480, 493, 507,
    521, 535, 549, 564, 578, 593, 608, 623, 638, 653, 669, 686, 700,
    715, 731, 748, 765, 782, 799, 817, 836, 853, 870, 887,
]))

# Exact sizes A(n, 6, 4) of constant-weight binary codes (length n,
# weight 4, minimum Hamming distance 6), n = 1..17; OEIS A004037.
A_N_6_4 = dict(zip(range(1, 18), [
    0, 0, 0, 1, 1, 1, 2, 2, 3, 5, 6, 9, 13, 14, 15, 20, 20,
]))

# Class counts of the recursive 1-extension enumeration seeded with a
# single rit: {(n, m): number of similarity classes with n points and
# m rits}.  Cells absent from the table are zero except (9, 7) and (9, 8),
# which are unreported.
RIT_1EXT_CLASSES = {
    (3, 1): 1,
    (4, 2): 2, (4, 3): 1, (4, 4): 1,
    (5, 3): 16, (5, 4): 4, (5, 5): 2, (5, 6): 1, (5, 7): 0, (5, 8): 1,
    (6, 4): 232, (6, 5): 88, (6, 6): 38, (6, 7): 16, (6, 8): 6, (6, 9): 1,
    (6, 10): 3, (6, 11): 1,
    (7, 5): 5383, (7, 6): 2397, (7, 7): 1051, (7, 8): 490, (7, 9): 164,
    (7, 10): 50, (7, 11): 39, (7, 12): 17, (7, 13): 7, (7, 14): 6, (7, 15): 2,
    (8, 6): 172408, (8, 7): 89266, (8, 8): 41475, (8, 9): 19925,
    (8, 10): 7123, (8, 11): 2488, (8, 12): 1513, (8, 13): 685, (8, 14): 253,
    (8, 15): 137, (8, 16): 75, (8, 17): 31, (8, 18): 17, (8, 19): 2, (8, 20): 5,
    (9, 9): 1623291, (9, 10): 878770, (9, 11): 379869, (9, 12): 142722,
    (9, 13): 77106, (9, 14): 36226, (9, 15): 14662, (9, 16): 7194,
    (9, 17): 3475, (9, 18): 1474, (9, 19): 856, (9, 20): 310, (9, 21): 186,
    (9, 22): 94, (9, 23): 33, (9, 24): 20, (9, 25): 5, (9, 26): 4,
    (9, 27): 1, (9, 28): 1,
}

# Class counts of the recursive 2-extension enumeration seeded with a
# unit square: {(n, m): number of similarity classes with n points and
# m squares}.  Absent cells are zero.
SQUARE_2EXT_CLASSES = {
    (4, 1): 1,
    (6, 2): 2,
    (7, 3): 2,
    (8, 3): 15, (8, 4): 2,
    (9, 4): 34, (9, 5): 1, (9, 6): 1,
    (10, 4): 340, (10, 5): 74, (10, 6): 5, (10, 7): 1,
    (11, 5): 1405, (11, 6): 159, (11, 7): 15, (11, 8): 5,
    (12, 5): 15621, (12, 6): 4729, (12, 7): 476, (12, 8): 80, (12, 9): 11,
    (12, 10): 3, (12, 11): 1,
    (13, 6): 90573, (13, 7): 15955, (13, 8): 1836, (13, 9): 482,
    (13, 10): 43, (13, 11): 14, (13, 12): 1, (13, 13): 1,
    (14, 6): 1088332, (14, 7): 403295, (14, 8): 61386, (14, 9): 9319,
    (14, 10): 2301, (14, 11): 356, (14, 12): 83, (14, 13): 10, (14, 14): 4,
    (14, 15): 2,
    (15, 7): 8143021, (15, 8): 1745837, (15, 9): 273037, (15, 10): 60632,
    (15, 11): 10982, (15, 12): 2693, (15, 13): 460, (15, 14): 122,
    (15, 15): 26, (15, 16): 7, (15, 17): 2,
    (16, 7): 101999759, (16, 8): 44513294, (16, 9): 8155822,
    (16, 10): 1445326, (16, 11): 360147, (16, 12): 69230, (16, 13): 19076,
    (16, 14): 3488, (16, 15): 1017, (16, 16): 239, (16, 17): 55,
    (16, 18): 17, (16, 19): 3, (16, 20): 2,
    (17, 8): 919429357, (17, 9): 215082508, (17, 10): 37029433,
    (17, 11): 7414942, (17, 12): 1419401, (17, 13): 281512, (17, 14): 52643,
    (17, 15): 10546, (17, 16): 2137, (17, 17): 511, (17, 18): 89,
    (17, 19): 11, (17, 20): 2, (17, 21): 0, (17, 22): 1,
}

# Class counts and maximal root degrees of the neighborhood-restricted
# 2-extension enumeration: {(n, m): (class count, delta_max)}.  A class
# is counted when some 2-extension chain from the unit square passes
# through neighborhood point sets only -- sets in which the squares
# through a single vertex (a root) cover all points.  delta_max is the
# largest root degree among the classes of the cell; zero-class cells
# carry delta_max 0.
NEIGHBORHOOD_2EXT_CLASSES = {
    (4, 1): (1, 1),
    (6, 2): (2, 2),
    (7, 3): (2, 3),
    (8, 3): (5, 3), (8, 4): (1, 3),
    (9, 4): (12, 4), (9, 5): (1, 4), (9, 6): (1, 4),
    (10, 4): (11, 4), (10, 5): (10, 5), (10, 6): (5, 5), (10, 7): (1, 5),
    (11, 5): (79, 5), (11, 6): (14, 5), (11, 7): (3, 6), (11, 8): (2, 6),
    (12, 5): (26, 5), (12, 6): (79, 6), (12, 7): (18, 6), (12, 8): (10, 6),
    (12, 9): (2, 7),
    (13, 6): (398, 6), (13, 7): (159, 7), (13, 8): (41, 7), (13, 9): (11, 7),
    (13, 10): (4, 8), (13, 11): (2, 8),
    (14, 6): (64, 6), (14, 7): (533, 7), (14, 8): (251, 7), (14, 9): (131, 8),
    (14, 10): (42, 8), (14, 11): (4, 9), (14, 12): (4, 9),
    (15, 7): (1594, 7), (15, 8): (1191, 8), (15, 9): (500, 8),
    (15, 10): (202, 8), (15, 11): (77, 9), (15, 12): (41, 10),
    (15, 13): (8, 10), (15, 14): (4, 8), (15, 15): (1, 7),
    (16, 7): (159, 7), (16, 8): (2812, 8), (16, 9): (2146, 9),
    (16, 10): (1204, 9), (16, 11): (591, 9), (16, 12): (160, 10),
    (16, 13): (87, 10), (16, 14): (25, 11), (16, 15): (3, 9),
    (16, 16): (3, 9), (16, 17): (3, 8), (16, 18): (1, 8),
    (17, 8): (5539, 8), (17, 9): (6358, 9), (17, 10): (4130, 9),
    (17, 11): (2099, 10), (17, 12): (1107, 10), (17, 13): (528, 11),
    (17, 14): (224, 11), (17, 15): (121, 12), (17, 16): (40, 12),
    (17, 17): (11, 10), (17, 18): (11, 10), (17, 19): (3, 7),
    (17, 20): (3, 8), (17, 21): (0, 0), (17, 22): (1, 8),
    (18, 8): (392, 8), (18, 9): (12293, 9), (18, 10): (12568, 10),
    (18, 11): (8840, 10), (18, 12): (5276, 10), (18, 13): (2272, 11),
    (18, 14): (1223, 12), (18, 15): (480, 12), (18, 16): (227, 13),
    (18, 17): (102, 13), (18, 18): (63, 11), (18, 19): (29, 11),
    (18, 20): (19, 11), (18, 21): (7, 9), (18, 22): (5, 10),
    (18, 23): (2, 9), (18, 24): (0, 0), (18, 25): (1, 9),
}

# Cells of NEIGHBORHOOD_2EXT_CLASSES whose recorded count is inconsistent
# with the enumeration itself, mapped to the consistent count.  The
# (10, 6) entry above equals the unrestricted 2-extension class count for
# that cell, yet four of those five classes are not neighborhoods of any
# vertex and can never become one in a superset (the squares through an
# ambient root all lie inside the neighborhood, so a root of the ambient
# set is a root of the part itself).  The recorded zero-count omissions
# at (12, 10) and (12, 11), where only rootless classes exist, show such
# classes are meant to be excluded; the recorded delta_max 5 is exactly
# the root degree of the single rooted class.
NEIGHBORHOOD_2EXT_CORRECTIONS = {(10, 6): 1}

# Number of known pairwise dissimilar point sets attaining the best known
# rit count per n (= number of corpus records of the rit family).
RIT_CLASS_COUNTS = dict(zip(range(3, 51), [
    1, 1, 1, 1, 2, 5, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2, 2, 1, 1,
    2, 1, 1, 1, 1, 3, 2, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 2, 2, 3, 3, 1, 2, 1, 1,
]))

# Number of known pairwise dissimilar point sets attaining the best known
# square count per n (no n = 5 entry; the 5-point extremal sets form an
# infinite family).
SQUARE_CLASS_COUNTS = dict(zip(
    [4] + list(range(6, 101)),
    [1, 2, 2, 2, 1, 1, 5, 1, 1, 2, 2, 2, 4, 3, 5, 1, 1, 1, 3,
     1, 1, 1, 2, 2, 1, 4, 1, 1, 2, 4, 2, 3, 1, 1, 2, 1, 2,
     2, 6, 2, 1, 1, 7, 2, 1, 4, 1, 1, 1, 2, 1, 5, 3, 1, 1,
     1, 1, 9, 3, 2, 2, 1, 4, 1, 1, 2, 4, 2, 8, 1, 3, 2, 1,
     3, 4, 2, 4, 3, 2, 2, 1, 4, 1, 1, 1, 2, 2, 1, 2, 2, 5,
     1, 1, 1, 2, 2],
))

# Lower bounds on the maximum square count when no point pair may lie in
# two counted squares (witnessed by the hamming-free corpus family).
HAMMING_FREE_LOWER = {10: 4, 11: 5, 12: 6, 13: 7}

# Lower bounds on the maximum number of axis-parallel squares (witnessed
# by the axis-parallel corpus family; no entry for n = 5).
AXIS_PARALLEL_LOWER = {
    4: 1, 6: 2, 7: 2, 8: 3, 9: 5, 10: 5, 11: 6, 12: 8, 13: 8,
    14: 9, 15: 11, 16: 14, 17: 14,
}


def rit_lower_bound(n: int) -> int:
    """Best known lower bound on the maximum rit count (exact for n <= 14)."""
    if n < 3:
        return 0
    if n in RIT_EXACT:
        return RIT_EXACT[n]
    return RIT_LOWER[n]


def square_lower_bound(n: int) -> int:
    """Best known lower bound on the maximum square count (exact n <= 17)."""
    if n < 4:
        return 0
    return SQUARE_LOWER[n]
