"""Frozen reference values consumed by the verification suite.

Polynomials are stored as ascending coefficient tuples; triangles as
(n, m) -> int maps.  These are transcriptions of published reference
tables; the verification checks compare every entry against freshly
computed values, and the mutation-sensitivity test relies on each entry
being consumed by exactly one named check.
"""

# Integer triangle: boldface family (row n supported on m of opposite parity).
TABLE1_A = {
    (0, 1): 1,
    (1, 0): 1, (1, 2): 1,
    (2, 1): 2, (2, 3): 2,
    (3, 0): 2, (3, 2): 8, (3, 4): 6,
    (4, 1): 16, (4, 3): 40, (4, 5): 24,
    (5, 0): 16, (5, 2): 136, (5, 4): 240, (5, 6): 120,
    (6, 1): 272, (6, 3): 1232, (6, 5): 1680, (6, 7): 720,
}

# Integer triangle: plain family.
TABLE1_B = {
    (0, 0): 1,
    (1, 1): 1,
    (2, 0): 1, (2, 2): 2,
    (3, 1): 5, (3, 3): 6,
    (4, 0): 5, (4, 2): 28, (4, 4): 24,
    (5, 1): 61, (5, 3): 180, (5, 5): 120,
    (6, 0): 61, (6, 2): 662, (6, 4): 1320, (6, 6): 720,
}

# Row sums of TABLE1_B: the Springer numbers.
SPRINGER_NUMBERS = (1, 1, 3, 11, 57, 361, 2763)

# Triple-indexed polynomials A_{n,k,a,b}, rows 0..4.
TABLE2_A = {
    (0, 0, 1, 0): (1,),
    (1, 0, 0, 0): (1,),
    (1, 0, 1, 1): (1,),
    (2, 0, 0, 1): (1,),
    (2, 1, 1, 0): (0, 1),
    (2, 0, 1, 2): (1,),
    (2, 1, 2, 1): (0, 1),
    (3, 1, 0, 0): (0, 1, 1),
    (3, 0, 0, 2): (1,),
    (3, 1, 0, 2): (0, 0, 1),
    (3, 1, 1, 1): (0, 2, 2),
    (3, 1, 2, 0): (0, 1),
    (3, 2, 2, 0): (0, 0, 0, 1),
    (3, 0, 1, 3): (1,),
    (3, 1, 1, 3): (0, 0, 1),
    (3, 1, 2, 2): (0, 1, 1),
    (3, 1, 3, 1): (0, 1),
    (3, 2, 3, 1): (0, 0, 0, 1),
    (4, 1, 0, 1): (0, 1, 3, 2),
    (4, 1, 1, 0): (0, 1, 1),
    (4, 2, 0, 1): (0, 0, 0, 0, 1, 1),
    (4, 2, 1, 0): (0, 0, 0, 2, 3, 1),
    (4, 0, 0, 3): (1,),
    (4, 1, 0, 3): (0, 0, 2, 2),
    (4, 1, 1, 2): (0, 2, 5, 3),
    (4, 1, 2, 1): (0, 2, 2),
    (4, 1, 3, 0): (0, 1),
    (4, 2, 0, 3): (0, 0, 0, 0, 0, 1),
    (4, 2, 1, 2): (0, 0, 0, 0, 2, 2),
    (4, 2, 2, 1): (0, 0, 0, 3, 5, 2),
    (4, 2, 3, 0): (0, 0, 0, 2, 2),
    (4, 3, 3, 0): (0, 0, 0, 0, 0, 0, 1),
    (4, 0, 1, 4): (1,),
    (4, 1, 1, 4): (0, 0, 2, 2),
    (4, 1, 2, 3): (0, 1, 2, 1),
    (4, 1, 3, 2): (0, 1, 1),
    (4, 1, 4, 1): (0, 1),
    (4, 2, 1, 4): (0, 0, 0, 0, 0, 1),
    (4, 2, 2, 3): (0, 0, 0, 0, 1, 1),
    (4, 2, 3, 2): (0, 0, 0, 1, 2, 1),
    (4, 2, 4, 1): (0, 0, 0, 2, 2),
    (4, 3, 4, 1): (0, 0, 0, 0, 0, 0, 1),
}

# Triple-indexed polynomials B_{n,k,a,b}, rows 0..4.
TABLE2_B = {
    (0, -1, 0, 0): (1,),
    (1, 0, 1, 0): (1,),
    (2, 0, 0, 0): (1,),
    (2, 0, 1, 1): (1,),
    (2, 1, 2, 0): (0, 1),
    (3, 0, 0, 1): (1,),
    (3, 1, 0, 1): (0, 0, 1),
    (3, 1, 1, 0): (0, 2, 1),
    (3, 0, 1, 2): (1,),
    (3, 1, 1, 2): (0, 0, 1),
    (3, 1, 2, 1): (0, 1, 1),
    (3, 1, 3, 0): (0, 1),
    (3, 2, 3, 0): (0, 0, 0, 1),
    (4, 1, 0, 0): (0, 1, 2, 1),
    (4, 2, 0, 0): (0, 0, 0, 0, 1),
    (4, 0, 0, 2): (1,),
    (4, 1, 0, 2): (0, 0, 2, 2),
    (4, 1, 1, 1): (0, 2, 4, 2),
    (4, 1, 2, 0): (0, 2, 1),
    (4, 2, 0, 2): (0, 0, 0, 0, 0, 1),
    (4, 2, 1, 1): (0, 0, 0, 0, 2, 1),
    (4, 2, 2, 0): (0, 0, 0, 3, 4, 1),
    (4, 0, 1, 3): (1,),
    (4, 1, 1, 3): (0, 0, 2, 2),
    (4, 1, 2, 2): (0, 1, 2, 1),
    (4, 1, 3, 1): (0, 1, 1),
    (4, 1, 4, 0): (0, 1),
    (4, 2, 1, 3): (0, 0, 0, 0, 0, 1),
    (4, 2, 2, 2): (0, 0, 0, 0, 1, 1),
    (4, 2, 3, 1): (0, 0, 0, 1, 2, 1),
    (4, 2, 4, 0): (0, 0, 0, 2, 2),
    (4, 3, 4, 0): (0, 0, 0, 0, 0, 0, 1),
}

# Composition-indexed polynomials, rows 0..4.  The row-2 cell in the
# four-part column is printed with a garbled subscript in the source
# table; (0,1,1,0) is the only four-part member, fixing the reading.
TABLE3 = {
    (0, (0, 0)): (1,),
    (1, (1,)): (1,),
    (1, (0, 1, 0)): (1,),
    (2, (2, 0)): (1,),
    (2, (0, 2)): (0, 1),
    (2, (0, 1, 1, 0)): (1, 1),
    (3, (3,)): (0, 1, 1),
    (3, (2, 1, 0)): (1, 1, 1),
    (3, (0, 1, 2)): (0, 1, 1, 1),
    (3, (0, 3, 0)): (0, 1, 1),
    (3, (0, 1, 1, 1, 0)): (1, 2, 2, 1),
    (4, (0, 4)): (0, 0, 1, 1, 2, 1),
    (4, (2, 2)): (0, 1, 1, 2, 1, 1),
    (4, (4, 0)): (0, 1, 2, 1, 1),
    (4, (0, 1, 1, 2)): (0, 1, 2, 3, 3, 2, 1),
    (4, (0, 1, 3, 0)): (0, 1, 2, 2, 2, 1),
    (4, (0, 3, 1, 0)): (0, 1, 2, 2, 2, 1),
    (4, (2, 1, 1, 0)): (1, 2, 3, 3, 2, 1),
    (4, (0, 1, 1, 1, 1, 0)): (1, 3, 5, 6, 5, 3, 1),
}

# Aggregated rows by m = a+b: boldface family (n = m+1 mod 2).
TABLE4_A = {
    (0, 1): (1,),
    (1, 0): (1,), (1, 2): (1,),
    (2, 1): (1, 1), (2, 3): (1, 1),
    (3, 0): (0, 1, 1), (3, 2): (1, 3, 3, 1), (3, 4): (1, 2, 2, 1),
    (4, 1): (0, 2, 4, 4, 4, 2),
    (4, 3): (1, 5, 9, 10, 9, 5, 1),
    (4, 5): (1, 3, 5, 6, 5, 3, 1),
}

# Aggregated rows: plain family (n = m mod 2).
TABLE4_B = {
    (0, 0): (1,),
    (1, 1): (1,),
    (2, 0): (1,), (2, 2): (1, 1),
    (3, 1): (1, 2, 2), (3, 3): (1, 2, 2, 1),
    (4, 0): (0, 1, 2, 1, 1),
    (4, 2): (1, 4, 7, 7, 6, 3),
    (4, 4): (1, 3, 5, 6, 5, 3, 1),
}

# Counting triangle of t-compositions by part count (alpha, boldface)
# and of s-compositions (beta, plain), with Fibonacci row sums.
FIG101_ALPHA = {
    (0, 1): 1,
    (1, 0): 1, (1, 2): 1,
    (2, 1): 2, (2, 3): 1,
    (3, 0): 1, (3, 2): 3, (3, 4): 1,
    (4, 1): 3, (4, 3): 4, (4, 5): 1,
    (5, 0): 1, (5, 2): 6, (5, 4): 5, (5, 6): 1,
    (6, 1): 4, (6, 3): 10, (6, 5): 6, (6, 7): 1,
}
FIG101_BETA = {
    (0, 0): 1,
    (1, 1): 1,
    (2, 0): 1, (2, 2): 1,
    (3, 1): 2, (3, 3): 1,
    (4, 0): 1, (4, 2): 3, (4, 4): 1,
    (5, 1): 3, (5, 3): 4, (5, 5): 1,
    (6, 0): 1, (6, 2): 6, (6, 4): 5, (6, 6): 1,
}
FIG101_ALPHA_ROWSUMS = (1, 2, 3, 5, 8, 13, 21)
FIG101_BETA_ROWSUMS = (1, 1, 2, 3, 5, 8, 13)

# q-tangent numbers (odd index) and the two q-secant families (even).
# The printed list assigns the zeroth second-secant value inconsistently
# with its own recurrence seed; the seed value 1 is adopted and the
# index-0 entry is therefore checked against the recurrence, not listed
# here.
QTAN_VALUES = {
    1: (1,),
    3: (0, 1, 1),
    5: (0, 0, 1, 2, 3, 4, 3, 2, 1),
}
QSEC_VALUES = {
    0: (1,),
    2: (1,),
    4: (0, 1, 2, 1, 1),
    6: (0, 0, 1, 3, 5, 8, 10, 10, 9, 7, 5, 2, 1),
}
QSEC2_VALUES = {
    2: (0, 1),
    4: (0, 0, 1, 1, 2, 1),
    6: (0, 0, 0, 1, 2, 5, 7, 9, 10, 10, 8, 5, 3, 1),
}

# Classical tangent and secant numbers.
CLASSICAL_T = {1: 1, 3: 2, 5: 16, 7: 272, 9: 7936}
CLASSICAL_E = {0: 1, 2: 1, 4: 5, 6: 61, 8: 1385}

# q-Eulerian coefficients by descent count, rows 0..5.
CARLITZ_VALUES = {
    (0, 0): (1,),
    (1, 0): (1,),
    (2, 0): (1,), (2, 1): (0, 1),
    (3, 0): (1,), (3, 1): (0, 2, 2), (3, 2): (0, 0, 0, 1),
    (4, 0): (1,), (4, 1): (0, 3, 5, 3), (4, 2): (0, 0, 0, 3, 5, 3),
    (4, 3): (0, 0, 0, 0, 0, 0, 1),
    (5, 0): (1,),
    (5, 1): (0, 4, 9, 9, 4),
    (5, 2): (0, 0, 0, 6, 16, 22, 16, 6),
    (5, 3): (0, 0, 0, 0, 0, 0, 4, 9, 9, 4),
    (5, 4): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}

# Refined q-Eulerian coefficients by (descent count, position of 1).
CARLITZ_REFINED_VALUES = {
    (1, 0, 1): (1,),
    (2, 0, 1): (1,), (2, 1, 2): (0, 1),
    (3, 0, 1): (1,), (3, 1, 1): (0, 0, 1), (3, 1, 2): (0, 1, 1),
    (3, 1, 3): (0, 1), (3, 2, 3): (0, 0, 0, 1),
    (4, 0, 1): (1,),
    (4, 1, 1): (0, 0, 2, 2),
    (4, 1, 2): (0, 1, 2, 1),
    (4, 1, 3): (0, 1, 1),
    (4, 1, 4): (0, 1),
    (4, 2, 1): (0, 0, 0, 0, 0, 1),
    (4, 2, 2): (0, 0, 0, 0, 1, 1),
    (4, 2, 3): (0, 0, 0, 1, 2, 1),
    (4, 2, 4): (0, 0, 0, 2, 2),
    (4, 3, 4): (0, 0, 0, 0, 0, 0, 1),
}

DEFAULT_FIXTURES = {
    "table1.a": TABLE1_A,
    "table1.b": TABLE1_B,
    "table2.a": TABLE2_A,
    "table2.b": TABLE2_B,
    "table3": TABLE3,
    "table4.a": TABLE4_A,
    "table4.b": TABLE4_B,
    "fig10.1.alpha": FIG101_ALPHA,
    "fig10.1.beta": FIG101_BETA,
    "fig10.1.alpha.rowsums": FIG101_ALPHA_ROWSUMS,
    "fig10.1.beta.rowsums": FIG101_BETA_ROWSUMS,
    "qtan": QTAN_VALUES,
    "qsec": QSEC_VALUES,
    "qsec2": QSEC2_VALUES,
    "classical.t": CLASSICAL_T,
    "classical.e": CLASSICAL_E,
    "carlitz": CARLITZ_VALUES,
    "carlitz.refined": CARLITZ_REFINED_VALUES,
    "springer": SPRINGER_NUMBERS,
}
