"""Frozen coefficient tables for the sixth-order diagonal-norm SBP operators.

All entries are exact rationals written as Python fraction literals; the
floats produced at import are the correctly rounded doubles of those
rationals.  ``tools/derive_sbp_tables.py`` re-derives every table from the
defining constraints (norm weights, antisymmetry, polynomial exactness,
symmetry and positive semidefiniteness of the second-derivative remainder)
and can be used to audit this file.

Conventions, for a grid x_0 < ... < x_{n-1} with spacing h:

* H = h * diag(HNORM_BOUNDARY, 1, ..., 1, reversed(HNORM_BOUNDARY)) is the
  quadrature (norm) matrix.
* D1 = (1/h) * [D1_LEFT_BLOCK; interior D1_INTERIOR; mirrored right block]
  satisfies H@D1 + (H@D1).T = B = diag(-1, 0, ..., 0, 1) exactly, with
  boundary rows exact on cubics and interior rows exact on degree <= 6.
* D2 = H^{-1} (-M + B@S) where M is symmetric positive semidefinite with
  boundary block M_BLOCK (6x6, plus the interior tail it overlaps) and S
  carries the one-sided derivative row D1_ONESIDED at each end.  Boundary
  rows of D2 are exact on quartics (third-order), interior rows on
  degree <= 7.
* M satisfies the borrowing bound M >= SAT_BORROW * h * s s^T with s the
  one-sided derivative row at either end, which makes the Dirichlet
  penalty tau >= 1/(SAT_BORROW * h) energy-stable.
"""

# diagonal norm boundary weights (left end; right end is the mirror image)
HNORM_BOUNDARY = (
    13649 / 43200,
    12013 / 8640,
    2711 / 4320,
    5359 / 4320,
    7877 / 8640,
    43801 / 43200,
)

# first derivative: interior central stencil, offsets -3..+3
D1_INTERIOR = (-1 / 60, 3 / 20, -3 / 4, 0.0, 3 / 4, -3 / 20, 1 / 60)

# first derivative: 6x9 boundary block (rows 0..5, columns 0..8), times 1/h
D1_LEFT_BLOCK = (
    (-21600 / 13649, 104009 / 54596, 30443 / 81894, -33311 / 27298,
     16863 / 27298, -15025 / 163788, 0.0, 0.0, 0.0),
    (-104009 / 240260, 0.0, -311 / 72078, 20229 / 24026,
     -24337 / 48052, 36661 / 360390, 0.0, 0.0, 0.0),
    (-30443 / 162660, 311 / 32532, 0.0, -11155 / 16266,
     41287 / 32532, -21999 / 54220, 0.0, 0.0, 0.0),
    (33311 / 107180, -20229 / 21436, 485 / 1398, 0.0,
     4147 / 21436, 25427 / 321540, 72 / 5359, 0.0, 0.0),
    (-16863 / 78770, 24337 / 31508, -41287 / 47262, -4147 / 15754,
     0.0, 342523 / 472620, -1296 / 7877, 144 / 7877, 0.0),
    (15025 / 525612, -36661 / 262806, 21999 / 87602, -25427 / 262806,
     -342523 / 525612, 0.0, 32400 / 43801, -6480 / 43801, 720 / 43801),
)

# second derivative: interior central stencil, offsets -3..+3, times 1/h^2
D2_INTERIOR = (1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90)

# symmetric remainder M: 6x6 boundary block (times 1/h).  Rows 3..5 also
# touch interior columns 6..8 through the fixed tail M_BLOCK_TAIL.
M_BLOCK = (
    (3059 / 2592, -233893 / 172800, 23591 / 129600, -11003 / 259200,
     751 / 14400, -1903 / 103680),
    (-233893 / 172800, 35153 / 12960, -77003 / 51840, 941 / 2880,
     -28951 / 103680, 10241 / 129600),
    (23591 / 129600, -77003 / 51840, 6191 / 2160, -11063 / 5184,
     18169 / 25920, -11209 / 86400),
    (-11003 / 259200, 941 / 2880, -11063 / 5184, 23567 / 6480,
     -34169 / 17280, 26099 / 129600),
    (751 / 14400, -28951 / 103680, 18169 / 25920, -34169 / 17280,
     2297 / 810, -762671 / 518400),
    (-1903 / 103680, 10241 / 129600, -11209 / 86400, 26099 / 129600,
     -762671 / 518400, 27 / 10),
)

# tail entries (i, j, value): continuation of rows 3..5 into interior columns,
# forced by symmetry with the interior stencil of M = -(interior of H D2)
M_BLOCK_TAIL = (
    (3, 6, -1 / 90),
    (4, 6, 3 / 20),
    (4, 7, -1 / 90),
    (5, 6, -3 / 2),
    (5, 7, 3 / 20),
    (5, 8, -1 / 90),
)

# one-sided first-derivative row at the left end (exact on quartics), times 1/h;
# the right end uses the reversed, negated row
D1_ONESIDED = (-25 / 12, 4.0, -3.0, 4 / 3, -1 / 4)

# largest beta with M - beta*h*s s^T >= 0 is 0.15235...; the documented safe
# value used for the Dirichlet penalty bound tau >= 1/(SAT_BORROW*h)
SAT_BORROW = 0.15

# periodic sixth-order central stencils, offsets -3..+3
PERIODIC_D1 = (-1 / 60, 3 / 20, -3 / 4, 0.0, 3 / 4, -3 / 20, 1 / 60)
PERIODIC_D2 = (1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90)

# minimum closure sizes: D1/D2 boundary blocks span 6 rows x 9 columns and the
# two ends must not overlap
MIN_POINTS_BOUNDED = 12
MIN_POINTS_PERIODIC = 8
