"""Reference values used by the unit and acceptance tests."""

LAMBDA = {
    1: 1,
    2: 2,
    3: 90,
    4: 586656,
    5: 1915103977500,
    6: 7886133184567796056800,
}

# (a d^3)^k, k = 2..6, term by term
POWERS_P3 = {
    2: "3 a(0,1) d^5 + 3 a(0,2) d^4 + 1 a(0,3) d^3",
    3: "18 a(0,1,2) d^6 + 27 a(0,1,3) d^5 + 15 a(0,1,4) d^4 + 3 a(0,1,5) d^3"
       " + 9 a(0,2,3) d^4 + 3 a(0,2,4) d^3",
    4: "126 a(0,1,2,3) d^6 + 189 a(0,1,2,4) d^5 + 99 a(0,1,2,5) d^4"
       " + 18 a(0,1,2,6) d^3 + 75 a(0,1,3,4) d^4 + 24 a(0,1,3,5) d^3"
       " + 6 a(0,2,3,4) d^3",
    5: "432 a(0,1,2,3,4) d^5 + 432 a(0,1,2,3,5) d^4"
       " + 108 a(0,1,2,3,6) d^3 + 90 a(0,1,2,4,5) d^3",
    6: "90 a(0,1,2,3,4,5) d^3",
}

LEADERS_P3 = {
    2: (1, (0, 3)),
    3: (3, (0, 2, 4)),
    4: (6, (0, 2, 3, 4)),
    5: (90, (0, 1, 2, 4, 5)),
    6: (90, (0, 1, 2, 3, 4, 5)),
}

NU_P3 = {2: 1, 3: 3, 4: 6, 5: 90, 6: 90}

MU_P3 = [1, 1, 3, 2, 3, 1]

# k -> (delta(k-1), mu_k) at p = 5
MU_TABLE_P5 = {
    1: ((0,), 1),
    2: ((0, 5), 1),
    3: ((0, 4, 6), 5),
    4: ((0, 4, 5, 6), 4),
    5: ((0, 3, 4, 6, 7), 10),
    6: ((0, 3, 4, 5, 6, 7), 6),
    7: ((0, 2, 3, 4, 6, 7, 8), 10),
    8: ((0, 2, 3, 4, 5, 6, 7, 8), 4),
    9: ((0, 1, 2, 3, 4, 6, 7, 8, 9), 5),
    10: ((0, 1, 2, 3, 4, 5, 6, 7, 8, 9), 1),
}

G_SETS = {
    0: [()],
    1: [(1,)],
    2: [(2, 0), (1, 1)],
    3: [(3, 0, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1)],
}

# p = 5: M(delta(2), delta(3)) and M(delta(3), delta(4))
M_SETS_P5 = [
    ((0, 4, 6), (0, 4, 5, 6), {(4, 1, 0), (5, 0, 0)}),
    ((0, 4, 5, 6), (0, 3, 4, 6, 7), {(3, 0, 1, 1), (3, 0, 2, 0)}),
]

# the four members of M_2 with their column sums
MP_2 = [
    (((1, 1, 0), (0, 1, 1), (0, 0, 2)), (1, 2, 3)),
    (((1, 0, 1), (0, 2, 0), (0, 0, 2)), (1, 2, 3)),
    (((1, 1, 0), (0, 2, 0), (0, 0, 2)), (1, 3, 2)),
    (((2, 0, 0), (0, 1, 1), (0, 0, 2)), (2, 1, 3)),
]
