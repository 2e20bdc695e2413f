"""Hand-checked fixture matrices shared across the test modules.

Every value here was verified cell by cell by hand before being frozen;
tests compare against these rather than against the code under test.
"""

from fishburn import TriMatrix

# self-dual Fishburn matrix of size 9, reduced size 5
A5 = TriMatrix((
    (1, 0, 1, 0, 0),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 1, 1),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
))

# reduce(A5): SE half zeroed
R5 = TriMatrix((
    (1, 0, 1, 0, 0),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
))

# alpha(A5): diagonal values moved into the center column
S5 = TriMatrix((
    (1, 0, 0, 0, 1),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
))

# member of the odd-dimension zero-SE family, size 6, center column sum 1
A6 = TriMatrix((
    (1, 0, 0, 1, 1),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
))

# beta(A6) intermediates: first relocation step (dimension grows 5 -> 7)
A6_STEP1 = TriMatrix((
    (1, 1, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0),
))

# second relocation step (dimension grows 7 -> 9)
A6_STEP2 = TriMatrix((
    (1, 1, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
))

# the block kept after truncating the zero tail
A6_BLOCK = TriMatrix((
    (1, 1, 0, 1, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
))

# beta(A6) = dual of the block; last column sum 3, first row sum 1
A6_IMAGE = TriMatrix((
    (0, 0, 1, 0, 0),
    (0, 0, 1, 0, 1),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1),
))

# beta(S5), worked by hand: one relocation step then a two-step truncation
S5_IMAGE = TriMatrix((
    (0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1),
))

# the chain on A5 ends at beta(S5) with a nonzero first row, so flag 0
CHAIN_A5 = (S5_IMAGE, 0)

# small even-dimension self-dual Fishburn matrices
EM2_FULL = TriMatrix(((1, 1), (0, 1)))
EM2_DIAG = TriMatrix(((1, 0), (0, 1)))

ALPHA_EM2_FULL = TriMatrix(((1, 1, 0), (0, 0, 0), (0, 0, 0)))
EM_TO_SM_FULL = TriMatrix(((1, 0, 1), (0, 0, 0), (0, 0, 0)))
EM_TO_SM_DIAG = TriMatrix(((1, 0, 0), (0, 0, 0), (0, 0, 0)))

EMBED_FULL_FLAG1 = TriMatrix(((0, 0, 0), (0, 1, 1), (0, 0, 1)))

# complete families at size 1 (reduced size for the self-dual family)
M_1 = {TriMatrix(((1,),)), TriMatrix(((1, 0), (0, 1)))}
SM_1 = {TriMatrix(((1,),)), TriMatrix(((1, 0, 0), (0, 0, 0), (0, 0, 0)))}
B_1 = {TriMatrix(((1,),)), TriMatrix(((0, 0), (0, 1)))}

# contract listing order for the row-nonzero family at size 2
RM_2_ORDER = (
    TriMatrix(((2,),)),
    TriMatrix(((0, 1), (0, 1))),
    TriMatrix(((1, 0), (0, 1))),
)

# interval orders counted up to isomorphism, totals 1..5
INTERVAL_ORDER_COUNTS = (1, 2, 5, 15, 53)

# a matrix whose poset has elements 1 and 2 incomparable below element 4,
# with element 3 unrelated; not self-dual
POSET_MATRIX = TriMatrix(((2, 1), (0, 1)))
POSET_RELATION = frozenset({(1, 4), (2, 4)})
