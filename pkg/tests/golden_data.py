"""Frozen golden data shared across the test suite.

The order-3 lists are parallel: the i-th matrix, monotone triangle, plane
partition, magog triangle, and boolean triangle all encode the same object
under the package's bijections.  GOLDEN is the order-6 worked example: one
permutation with every encoding spelled out.
"""

ASMS_3 = [
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (1, -1, 1), (0, 1, 0)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
]

MONOTONE_3 = [
    ((1,), (1, 2), (1, 2, 3)),
    ((1,), (1, 3), (1, 2, 3)),
    ((2,), (1, 2), (1, 2, 3)),
    ((2,), (1, 3), (1, 2, 3)),
    ((2,), (2, 3), (1, 2, 3)),
    ((3,), (1, 3), (1, 2, 3)),
    ((3,), (2, 3), (1, 2, 3)),
]

# zero-completed 6x6 arrays, same order as the magog/boolean lists below
TSSCPP_3 = [
    (
        (6, 6, 6, 3, 3, 3),
        (6, 6, 6, 3, 3, 3),
        (6, 6, 6, 3, 3, 3),
        (3, 3, 3, 0, 0, 0),
        (3, 3, 3, 0, 0, 0),
        (3, 3, 3, 0, 0, 0),
    ),
    (
        (6, 6, 6, 4, 3, 3),
        (6, 6, 6, 3, 3, 3),
        (6, 6, 5, 3, 3, 2),
        (4, 3, 3, 1, 0, 0),
        (3, 3, 3, 0, 0, 0),
        (3, 3, 2, 0, 0, 0),
    ),
    (
        (6, 6, 6, 5, 4, 3),
        (6, 6, 5, 3, 3, 2),
        (6, 5, 5, 3, 3, 1),
        (5, 3, 3, 1, 1, 0),
        (4, 3, 3, 1, 0, 0),
        (3, 2, 1, 0, 0, 0),
    ),
    (
        (6, 6, 6, 5, 4, 3),
        (6, 6, 5, 4, 3, 2),
        (6, 5, 4, 3, 2, 1),
        (5, 4, 3, 2, 1, 0),
        (4, 3, 2, 1, 0, 0),
        (3, 2, 1, 0, 0, 0),
    ),
    (
        (6, 6, 6, 4, 3, 3),
        (6, 6, 6, 4, 3, 3),
        (6, 6, 4, 3, 2, 2),
        (4, 4, 3, 2, 0, 0),
        (3, 3, 2, 0, 0, 0),
        (3, 3, 2, 0, 0, 0),
    ),
    (
        (6, 6, 6, 5, 5, 3),
        (6, 5, 5, 3, 3, 1),
        (6, 5, 5, 3, 3, 1),
        (5, 3, 3, 1, 1, 0),
        (5, 3, 3, 1, 1, 0),
        (3, 1, 1, 0, 0, 0),
    ),
    (
        (6, 6, 6, 5, 5, 3),
        (6, 5, 5, 4, 3, 1),
        (6, 5, 4, 3, 2, 1),
        (5, 4, 3, 2, 1, 0),
        (5, 3, 2, 1, 1, 0),
        (3, 1, 1, 0, 0, 0),
    ),
]

MAGOG_3 = [
    ((1,), (1, 2), (1, 2, 3)),
    ((2,), (1, 2), (1, 2, 3)),
    ((2,), (1, 3), (1, 2, 3)),
    ((3,), (1, 3), (1, 2, 3)),
    ((3,), (1, 2), (1, 2, 3)),
    ((2,), (2, 3), (1, 2, 3)),
    ((3,), (2, 3), (1, 2, 3)),
]

BOOLEAN_3 = [
    ((1,), (1, 1)),
    ((1,), (1, 0)),
    ((0,), (1, 1)),
    ((0,), (0, 1)),
    ((1,), (0, 0)),
    ((0,), (1, 0)),
    ((0,), (0, 0)),
]

# position of the sole non-permutation object in the order-3 lists
NON_PERMUTATION_INDEX = 3

# one-line permutations paired to ASMS_3 / MONOTONE_3 order
PERMS_3 = ["123", "132", "213", None, "231", "312", "321"]

# fundamental domains of TSSCPP_3, rows (t44,t45,t46),(t55,t56),(t66)
DOMAINS_3 = [
    ((0, 0, 0), (0, 0), (0,)),
    ((1, 0, 0), (0, 0), (0,)),
    ((1, 1, 0), (0, 0), (0,)),
    ((2, 1, 0), (0, 0), (0,)),
    ((2, 0, 0), (0, 0), (0,)),
    ((1, 1, 0), (1, 0), (0,)),
    ((2, 1, 0), (1, 0), (0,)),
]

GOLDEN = {
    "one_line": "463512",
    "inversions": 11,
    "matrix": (
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
    ),
    "monotone": ((4,), (4, 6), (3, 4, 6), (3, 4, 5, 6), (1, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6)),
    "boolean": ((1,), (0, 0), (1, 1, 0), (0, 0, 0, 0), (1, 0, 0, 0, 0)),
    "last_row_zeros": 4,
    "lowest_one_last_diagonal": 1,
    "tsscpp": (
        (12, 12, 12, 12, 12, 12, 10, 10, 10, 10, 6, 6),
        (12, 12, 12, 12, 12, 12, 10, 9, 9, 7, 6, 6),
        (12, 12, 11, 11, 11, 10, 8, 8, 6, 6, 5, 2),
        (12, 12, 11, 10, 10, 10, 8, 8, 6, 6, 3, 2),
        (12, 12, 11, 10, 8, 8, 6, 6, 4, 4, 3, 2),
        (12, 12, 10, 10, 8, 8, 6, 6, 4, 4, 2, 2),
        (10, 10, 8, 8, 6, 6, 4, 4, 2, 2, 0, 0),
        (10, 9, 8, 8, 6, 6, 4, 4, 2, 1, 0, 0),
        (10, 9, 6, 6, 4, 4, 2, 2, 2, 1, 0, 0),
        (10, 7, 6, 6, 4, 4, 2, 1, 1, 1, 0, 0),
        (6, 6, 5, 3, 3, 2, 0, 0, 0, 0, 0, 0),
        (6, 6, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0),
    ),
}

# Hasse diagrams of the three order-3 posets, as cover pairs on short labels
A3_COVERS = {
    ("1;1,2;1,2,3", "1;1,3;1,2,3"),
    ("1;1,2;1,2,3", "2;1,2;1,2,3"),
    ("1;1,3;1,2,3", "2;1,3;1,2,3"),
    ("2;1,2;1,2,3", "2;1,3;1,2,3"),
    ("2;1,3;1,2,3", "2;2,3;1,2,3"),
    ("2;1,3;1,2,3", "3;1,3;1,2,3"),
    ("2;2,3;1,2,3", "3;2,3;1,2,3"),
    ("3;1,3;1,2,3", "3;2,3;1,2,3"),
}

T3_COVERS = {
    ("1;1,2;1,2,3", "2;1,2;1,2,3"),
    ("2;1,2;1,2,3", "2;1,3;1,2,3"),
    ("2;1,2;1,2,3", "3;1,2;1,2,3"),
    ("2;1,3;1,2,3", "2;2,3;1,2,3"),
    ("2;1,3;1,2,3", "3;1,3;1,2,3"),
    ("3;1,2;1,2,3", "3;1,3;1,2,3"),
    ("2;2,3;1,2,3", "3;2,3;1,2,3"),
    ("3;1,3;1,2,3", "3;2,3;1,2,3"),
}

TBOOL3_COVERS = {
    ("1;1,1", "1;1,0"),
    ("1;1,1", "0;1,1"),
    ("1;1,0", "1;0,0"),
    ("1;1,0", "0;1,0"),
    ("0;1,1", "0;0,1"),
    ("0;1,1", "0;1,0"),
    ("1;0,0", "0;0,0"),
    ("0;1,0", "0;0,0"),
    ("0;0,1", "0;0,0"),
}

# an equivalent mirror labelling of the magog permutation order (the image
# under inversion); tests compare shapes only
T3PERM_MIRROR_COVERS = {
    ("123", "132"),
    ("132", "213"),
    ("132", "312"),
    ("213", "231"),
    ("231", "321"),
    ("312", "321"),
}

TAM3_COVERS = {
    ("333", "323"),
    ("333", "133"),
    ("323", "223"),
    ("223", "123"),
    ("133", "123"),
}

CAT3_COVERS = {
    ("333", "233"),
    ("233", "223"),
    ("233", "133"),
    ("223", "123"),
    ("133", "123"),
}

STRONG3_COVERS = {
    ("123", "132"),
    ("123", "213"),
    ("132", "231"),
    ("132", "312"),
    ("213", "231"),
    ("213", "312"),
    ("231", "321"),
    ("312", "321"),
}


def short_triangle(rows):
    return ";".join(",".join(str(v) for v in row) for row in rows)
