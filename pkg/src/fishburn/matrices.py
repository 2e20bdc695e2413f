"""Upper-triangular integer matrices and the structural predicates on them.

Everything in this package runs on one carrier type, an immutable square
matrix of nonnegative integers with zeros below the main diagonal.  All
interfaces are 1-based: cell (i, j) of a dimension-m matrix means row i from
the top and column j from the left, and error messages use the same
coordinates.

Cells split into three classes by the anti-diagonal that runs from the
bottom-left corner to the top-right corner: (i, j) is NW when i + j < m + 1,
a diagonal cell when i + j = m + 1, and SE when i + j > m + 1.  The dual of
a matrix mirrors entries across that anti-diagonal; a matrix equal to its
dual is self-dual.  For a self-dual matrix the SE half is redundant, and
``reduce``/``expand`` move between the full matrix and the half with the SE
cells zeroed out.
"""

from dataclasses import dataclass
from enum import Enum

# --- exceptions ------------------------------------------------------------


class MatrixConditionError(ValueError):
    """A matrix fails a structural condition required by an operation."""


class NotSelfDual(MatrixConditionError):
    """The matrix differs from its mirror across the anti-diagonal."""


class NotFishburn(MatrixConditionError):
    """Some row or column of the matrix is entirely zero."""


class NotRowFishburn(MatrixConditionError):
    """Some row of the matrix is entirely zero."""


class NotSuperTriangular(MatrixConditionError):
    """Some SE cell of the matrix is nonzero."""


class NotExpandable(MatrixConditionError):
    """The zero-SE matrix cannot be mirrored into a matrix with every row
    and column nonzero."""


class NotSMMember(MatrixConditionError):
    """The matrix fails the odd-dimension zero-SE family conditions."""


class NotBMember(MatrixConditionError):
    """Some row past the first is entirely zero."""


class DegenerateMatrix(MatrixConditionError):
    """All-zero input where an operation needs at least one unit of mass."""


class OddDimension(MatrixConditionError):
    """An even dimension was required."""


class ParseError(ValueError):
    """Malformed matrix text."""


# --- core types ------------------------------------------------------------


class CellClass(Enum):
    NW = "nw"
    DIAGONAL = "diagonal"
    SE = "se"


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    ANY = "any"


@dataclass(frozen=True)
class TriMatrix:
    """Immutable upper-triangular matrix of nonnegative integers.

    ``rows`` stores every full row, top row first, so ``rows[i - 1][j - 1]``
    is the cell (i, j).  Below-diagonal entries must be stored as 0.
    Equality is entrywise at equal dimension; a copy padded with zero rows
    and columns is a different value on purpose, because the maps in this
    package insert and remove zero rows deliberately.
    """

    rows: tuple

    def __post_init__(self):
        if not isinstance(self.rows, tuple) or not self.rows:
            raise ValueError("rows must be a nonempty tuple of row tuples")
        m = len(self.rows)
        for i, row in enumerate(self.rows, start=1):
            if not isinstance(row, tuple) or len(row) != m:
                raise ValueError(f"row {i} must be a tuple of {m} entries")
            for j, value in enumerate(row, start=1):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ValueError(f"cell ({i}, {j}) must be an integer")
                if value < 0:
                    raise ValueError(f"cell ({i}, {j}) must be nonnegative")
                if j < i and value != 0:
                    raise ValueError(
                        f"cell ({i}, {j}) lies below the main diagonal and must be 0")

    @classmethod
    def from_rows(cls, *rows):
        """Build from full-length row sequences (lists, tuples, ...)."""
        return cls(tuple(tuple(row) for row in rows))

    @property
    def dim(self):
        return len(self.rows)

    def entry(self, i, j):
        """Cell (i, j), 1-based."""
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(f"cell ({i}, {j}) outside dimension {self.dim}")
        return self.rows[i - 1][j - 1]

    def size(self):
        """Sum of all entries."""
        return sum(map(sum, self.rows))

    def row_sum(self, i):
        if not 1 <= i <= self.dim:
            raise IndexError(f"row {i} outside dimension {self.dim}")
        return sum(self.rows[i - 1])

    def col_sum(self, j):
        if not 1 <= j <= self.dim:
            raise IndexError(f"column {j} outside dimension {self.dim}")
        return sum(row[j - 1] for row in self.rows)


@dataclass(frozen=True)
class StatVector:
    """Per-matrix statistics used by the refined counts.

    ``reduced_size`` is the sum over NW and diagonal cells; it is the size
    notion for self-dual matrices and is computed unconditionally here.
    ``center_col_sum`` is 0 for even dimensions, where no center column
    exists; ``dim_parity`` records which case applies.
    """

    size: int
    reduced_size: int
    first_row_sum: int
    diag_sum: int
    center_col_sum: int
    last_col_sum: int
    dim: int
    dim_parity: Parity


# --- cell classes ----------------------------------------------------------


def cell_class(m, i, j):
    """Class of cell (i, j) in a dimension-m matrix: NW, DIAGONAL, or SE."""
    if not (1 <= i <= j <= m):
        raise IndexError(f"cell ({i}, {j}) outside the upper triangle of dimension {m}")
    if i + j < m + 1:
        return CellClass.NW
    if i + j == m + 1:
        return CellClass.DIAGONAL
    return CellClass.SE


def _nw_diag_sum(m):
    d = m.dim
    return sum(v
               for i, row in enumerate(m.rows, start=1)
               for j, v in enumerate(row, start=1)
               if i + j <= d + 1)


# --- family conditions -----------------------------------------------------
# Each *_violation helper returns None when the condition holds, else a short
# description naming the first offending cell, row, or column (1-based).  The
# is_* predicates and require_* guards wrap them.


def selfdual_violation(m):
    d = m.dim
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            a = m.entry(i, j)
            b = m.entry(d + 1 - j, d + 1 - i)
            if a != b:
                return (f"cell ({i}, {j}) holds {a} but its mirror "
                        f"({d + 1 - j}, {d + 1 - i}) holds {b}")
    return None


def fishburn_violation(m):
    for i in range(1, m.dim + 1):
        if m.row_sum(i) == 0:
            return f"row {i} zero"
    for j in range(1, m.dim + 1):
        if m.col_sum(j) == 0:
            return f"column {j} zero"
    return None


def row_fishburn_violation(m):
    for i in range(1, m.dim + 1):
        if m.row_sum(i) == 0:
            return f"row {i} zero"
    return None


def super_triangular_violation(m):
    d = m.dim
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            if i + j > d + 1 and m.entry(i, j) != 0:
                return f"SE cell ({i}, {j}) holds {m.entry(i, j)}, want 0"
    return None


def expandable_violation(m):
    """Check the two conditions under which a zero-SE matrix mirrors into a
    self-dual matrix with every row and column nonzero: each column up to the
    middle one is nonzero, and for each i up to the middle either row i or
    column m + 1 - i is nonzero.  Assumes the input is already zero on SE."""
    d = m.dim
    h = (d + 1) // 2
    for c in range(1, h + 1):
        if m.col_sum(c) == 0:
            return f"column {c} zero"
    for i in range(1, h + 1):
        if m.row_sum(i) == 0 and m.col_sum(d + 1 - i) == 0:
            return f"row {i} and column {d + 1 - i} both zero"
    return None


def sm_violation(m):
    d = m.dim
    if d % 2 == 0:
        return f"dimension {d} even"
    msg = super_triangular_violation(m)
    if msg is not None:
        return msg
    k = (d - 1) // 2
    for c in range(1, k + 1):
        if m.col_sum(c) == 0:
            return f"column {c} zero"
    for i in range(1, k + 1):
        if m.row_sum(k + 1 - i) == 0 and m.col_sum(k + 1 + i) == 0:
            return f"row {k + 1 - i} and column {k + 1 + i} both zero"
    return None


def b_violation(m):
    for i in range(2, m.dim + 1):
        if m.row_sum(i) == 0:
            return f"row {i} zero"
    return None


def is_self_dual(m):
    return selfdual_violation(m) is None


def is_fishburn(m):
    return fishburn_violation(m) is None


def is_row_fishburn(m):
    return row_fishburn_violation(m) is None


def is_super_triangular(m):
    return super_triangular_violation(m) is None


def is_expandable(m):
    """True when ``expand`` applies.  Requires a zero-SE input."""
    require_super_triangular(m)
    return expandable_violation(m) is None


def is_sm_member(m):
    return sm_violation(m) is None


def is_b_member(m):
    return b_violation(m) is None


def require_self_dual(m):
    msg = selfdual_violation(m)
    if msg is not None:
        raise NotSelfDual(msg)


def require_fishburn(m):
    msg = fishburn_violation(m)
    if msg is not None:
        raise NotFishburn(msg)


def require_row_fishburn(m):
    msg = row_fishburn_violation(m)
    if msg is not None:
        raise NotRowFishburn(msg)


def require_super_triangular(m):
    msg = super_triangular_violation(m)
    if msg is not None:
        raise NotSuperTriangular(msg)


def require_sm_member(m):
    msg = sm_violation(m)
    if msg is not None:
        raise NotSMMember(msg)


def require_b_member(m):
    msg = b_violation(m)
    if msg is not None:
        raise NotBMember(msg)


# --- duality and reduction -------------------------------------------------


def dual(m):
    """Mirror across the bottom-left to top-right anti-diagonal.

    The image cell (i, j) holds the input cell (m + 1 - j, m + 1 - i); the
    map is an involution and preserves dimension and size.
    """
    d = m.dim
    return TriMatrix(tuple(
        tuple(m.rows[d - 1 - j][d - 1 - i] for j in range(d))
        for i in range(d)))


def reduced_size(m):
    """Sum over NW and diagonal cells.  Rejects non-self-dual input, where
    the quantity would depend on which half of the matrix is kept."""
    require_self_dual(m)
    return _nw_diag_sum(m)


def reduce(m):
    """Zero every SE cell of a self-dual matrix with all rows and columns
    nonzero.  The result has size equal to ``reduced_size(m)``."""
    require_self_dual(m)
    require_fishburn(m)
    d = m.dim
    return TriMatrix(tuple(
        tuple(0 if i + j > d + 1 else v for j, v in enumerate(row, start=1))
        for i, row in enumerate(m.rows, start=1)))


def expand(m):
    """Rebuild the unique self-dual preimage of a zero-SE matrix under
    ``reduce`` by mirroring each NW cell (i, j) into the SE cell
    (m + 1 - j, m + 1 - i)."""
    require_super_triangular(m)
    msg = expandable_violation(m)
    if msg is not None:
        raise NotExpandable(msg)
    d = m.dim
    g = [list(row) for row in m.rows]
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            if i + j > d + 1:
                g[i - 1][j - 1] = m.entry(d + 1 - j, d + 1 - i)
    return TriMatrix(tuple(tuple(row) for row in g))


# --- statistics ------------------------------------------------------------


def stats(m):
    """All per-matrix statistics in one bundle."""
    d = m.dim
    return StatVector(
        size=m.size(),
        reduced_size=_nw_diag_sum(m),
        first_row_sum=m.row_sum(1),
        diag_sum=sum(m.entry(i, d + 1 - i) for i in range(1, (d + 1) // 2 + 1)),
        center_col_sum=m.col_sum((d + 1) // 2) if d % 2 else 0,
        last_col_sum=m.col_sum(d),
        dim=d,
        dim_parity=Parity.ODD if d % 2 else Parity.EVEN,
    )


# --- text format -----------------------------------------------------------
# Line 1 holds the dimension m; the next m lines hold m space-separated
# nonnegative integers each.  Anything after line m + 1 is ignored, so the
# output of one command can be piped into another even when a trailer line
# follows the matrix.


def _is_uint(token):
    return token.isascii() and token.isdigit()


def parse_matrix(text):
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError("line 1: expected a positive dimension")
    head = lines[0].split()
    if len(head) != 1 or not _is_uint(head[0]) or int(head[0]) < 1:
        raise ParseError("line 1: expected a positive dimension")
    d = int(head[0])
    if len(lines) < d + 1:
        raise ParseError(f"line {len(lines) + 1}: expected {d} matrix rows, "
                         f"found {len(lines) - 1}")
    rows = []
    for i in range(1, d + 1):
        parts = lines[i].split()
        if len(parts) != d:
            raise ParseError(f"line {i + 1}: expected {d} entries, found {len(parts)}")
        row = []
        for j, token in enumerate(parts, start=1):
            if not _is_uint(token):
                raise ParseError(f"line {i + 1}: entry {j} is not a nonnegative integer")
            value = int(token)
            if j < i and value != 0:
                raise ParseError(
                    f"cell ({i}, {j}) lies below the main diagonal and must be 0")
            row.append(value)
        rows.append(tuple(row))
    return TriMatrix(tuple(rows))


def format_matrix(m):
    lines = [str(m.dim)]
    lines.extend(" ".join(str(v) for v in row) for row in m.rows)
    return "\n".join(lines) + "\n"
