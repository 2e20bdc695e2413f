"""Size-preserving maps between the matrix families.

The two core maps are ``alpha``, which folds a self-dual matrix with all
rows and columns nonzero into an odd-dimension matrix with zero SE cells,
and ``beta``, which relocates the columns right of center one at a time
until only the top-left block carries mass, then truncates and dualizes.
Around them sit the embedding and projection maps that account for the
factor 2 between the row-nonzero family and the rows-after-the-first
family, plus the even-dimension embedding used by the parity-refined count.

Every map can optionally record a trace: a sequence of labeled snapshots,
one per algorithm step, with the input first and the output last.  Traces
are value copies, never views, and cost nothing unless requested.
"""

from dataclasses import dataclass

from .matrices import (
    DegenerateMatrix,
    MatrixConditionError,
    OddDimension,
    TriMatrix,
    dual,
    expand,
    reduce,
    require_b_member,
    require_fishburn,
    require_row_fishburn,
    require_self_dual,
    require_sm_member,
    row_fishburn_violation,
)
from .matrices import NotRowFishburn

# --- trace plumbing ---------------------------------------------------------


@dataclass(frozen=True)
class BijectionTrace:
    """Labeled snapshots of one map application, input first, output last."""

    steps: tuple


@dataclass(frozen=True)
class SignedRowFishburn:
    """A matrix with every row nonzero plus one bit.

    The bit records whether the preimage in the rows-after-the-first family
    had a zero first row; it is the factor 2 in the doubling identities.
    """

    matrix: TriMatrix
    flag: int

    def __post_init__(self):
        if self.flag not in (0, 1):
            raise ValueError("flag must be 0 or 1")
        msg = row_fishburn_violation(self.matrix)
        if msg is not None:
            raise NotRowFishburn(msg)


def _grid(m):
    return [list(row) for row in m.rows]


def _freeze(g):
    return TriMatrix(tuple(tuple(row) for row in g))


def _insert_row(g, pos):
    g.insert(pos - 1, [0] * len(g[0]))


def _insert_col(g, pos, values=None):
    for r, row in enumerate(g):
        row.insert(pos - 1, 0 if values is None else values[r])


# --- center fold and its inverse --------------------------------------------


def alpha(m, want_trace=False):
    """Fold a self-dual matrix with nonzero rows and columns into the
    odd-dimension zero-SE family.

    The SE half is zeroed first.  An even dimension 2k gains a zero column
    and a zero row at position k + 1.  Then, writing m' for the (odd)
    working dimension and k for (m' - 1) // 2, cells (i, k + 1) and
    (i, m' + 1 - i) swap for i = 1..k, which moves the diagonal-cell values
    into the center column.  The first-row sum is unchanged and the
    diagonal-cell sum of the input becomes the center-column sum of the
    output.
    """
    require_self_dual(m)
    require_fishburn(m)
    steps = [("A(0)", m)]
    r = reduce(m)
    steps.append(("A(1)", r))
    g = _grid(r)
    d = m.dim
    if d % 2 == 0:
        k = d // 2
        _insert_col(g, k + 1)
        _insert_row(g, k + 1)
        steps.append(("A(2)", _freeze(g)))
        mp = d + 1
    else:
        k = (d - 1) // 2
        mp = d
    for i in range(1, k + 1):
        row = g[i - 1]
        row[k], row[mp - i] = row[mp - i], row[k]
    out = _freeze(g)
    if want_trace:
        steps.append(("S", out))
        return out, BijectionTrace(tuple(steps))
    return out


def alpha_inv(s, want_trace=False):
    """Invert ``alpha``: swap the center column back onto the diagonal
    cells, drop the center column and row when both ended up zero (the even
    case leaves them so), and mirror the NW half back into SE."""
    require_sm_member(s)
    d = s.dim
    k = (d - 1) // 2
    steps = [("A(0)", s)]
    g = _grid(s)
    for i in range(1, k + 1):
        row = g[i - 1]
        row[k], row[d - i] = row[d - i], row[k]
    steps.append(("A(1)", _freeze(g)))
    if k >= 1 and not any(row[k] for row in g) and not any(g[k]):
        for row in g:
            del row[k]
        del g[k]
        steps.append(("A(2)", _freeze(g)))
    out = expand(_freeze(g))
    if want_trace:
        steps.append(("M", out))
        return out, BijectionTrace(tuple(steps))
    return out


# --- column relocation and its inverse ---------------------------------------


def beta(a, want_trace=False):
    """Relocate the nonzero columns right of center, then truncate and
    dualize, landing in the family whose rows past the first are nonzero.

    One step, at dimension 2r + 1: take the largest offset i with column
    r + 1 + i nonzero, record that column, zero it, reinsert the recorded
    values as a new column right after column r + 1 - i, add a zero row at
    the same position, and add a zero column and zero row right before the
    shifted old column and row (dimension grows by 2).  The largest nonzero
    offset strictly decreases, so the loop stops; at dimension 2q + 1 the
    last q rows and columns are zero and are cut, and the result is the
    dual of the remaining block.  The last-column sum of the output equals
    the first-row sum of the input, and the first-row sum of the output
    equals the center-column sum of the input.
    """
    require_sm_member(a)
    if a.size() == 0:
        raise DegenerateMatrix("the all-zero matrix has no image")
    steps = [("A(0)", a)]
    g = _grid(a)
    step = 0
    while True:
        d = len(g)
        r = (d - 1) // 2
        off = 0
        for i in range(1, r + 1):
            if any(row[r + i] for row in g):
                off = i
        if off == 0:
            break
        c = r + 1 + off
        left = r + 1 - off
        vals = [row[c - 1] for row in g]
        for row in g:
            row[c - 1] = 0
        _insert_col(g, left + 1, vals)
        _insert_row(g, left + 1)
        _insert_col(g, c + 1)
        _insert_row(g, c + 1)
        step += 1
        steps.append((f"A({step})", _freeze(g)))
    d = len(g)
    q = (d - 1) // 2
    keep = d - q
    block = _freeze([row[:keep] for row in g[:keep]])
    out = dual(block)
    if want_trace:
        if q:
            steps.append(("B", block))
        steps.append(("A'", out))
        return out, BijectionTrace(tuple(steps))
    return out


def beta_inv(a_prime, want_trace=False):
    """Invert ``beta``: dualize, pad back to odd dimension, and repeatedly
    merge the innermost all-zero row/column pair away.

    With the working dimension written 2k + 1, the scan looks for the least
    offset i whose row k + 1 - i and column k + 1 + i are both zero, adds
    column k + 1 - i entrywise into column k + 2 + i, and deletes the two
    rows and two columns at offsets i on both sides (dimension drops by 2).
    The loop stops when every offset has a nonzero row or column on one
    side, which is the membership condition of the target family.
    """
    require_b_member(a_prime)
    if a_prime.size() == 0:
        raise DegenerateMatrix("the all-zero matrix has no preimage")
    k = a_prime.dim - 1
    steps = [("A(0)", a_prime)]
    g = _grid(dual(a_prime))
    for row in g:
        row.extend([0] * k)
    for _ in range(k):
        g.append([0] * (2 * k + 1))
    steps.append(("A(1)", _freeze(g)))
    label = 1
    while True:
        d = len(g)
        kk = (d - 1) // 2
        found = 0
        for i in range(1, kk + 1):
            if not any(g[kk - i]) and not any(row[kk + i] for row in g):
                found = i
                break
        if found == 0:
            break
        i = found
        # row 1 keeps a nonzero entry throughout, so the outermost pair
        # (i = kk) is never selected and the merge target stays in range
        assert i < kk
        lo = kk + 1 - i
        hi = kk + 1 + i
        dest = kk + 2 + i
        for row in g:
            row[dest - 1] += row[lo - 1]
        for row in g:
            del row[hi - 1]
            del row[lo - 1]
        del g[hi - 1]
        del g[lo - 1]
        label += 1
        steps.append((f"A({label})", _freeze(g)))
    out = _freeze(g)
    if want_trace:
        return out, BijectionTrace(tuple(steps))
    return out


# --- doubling maps -----------------------------------------------------------


def embed_rm_in_b(a, add_zero_first):
    """Send a matrix with nonzero rows into the rows-after-the-first family,
    either unchanged (flag 0) or with a zero first row and column prepended
    (flag 1).  The pair map is injective, which gives the factor 2."""
    if add_zero_first not in (0, 1):
        raise ValueError("add_zero_first must be 0 or 1")
    require_row_fishburn(a)
    if not add_zero_first:
        return a
    g = _grid(a)
    _insert_col(g, 1)
    _insert_row(g, 1)
    return _freeze(g)


def project_b_to_signed_rm(m):
    """Invert ``embed_rm_in_b``: a zero first row is stripped (flag 1), a
    nonzero first row already makes every row nonzero (flag 0)."""
    require_b_member(m)
    if m.size() == 0:
        raise DegenerateMatrix("the all-zero matrix cannot be projected")
    if m.row_sum(1) == 0:
        stripped = _freeze([list(row[1:]) for row in m.rows[1:]])
        return SignedRowFishburn(stripped, 1)
    return SignedRowFishburn(m, 0)


def selfdual_to_signed_rm(m, want_trace=False):
    """The full chain from a self-dual matrix with nonzero rows and columns
    to a row-nonzero matrix plus one bit: fold to the odd-dimension zero-SE
    family, relocate columns, project the first row away when it is zero."""
    s = alpha(m)
    b_img = beta(s)
    signed = project_b_to_signed_rm(b_img)
    if want_trace:
        steps = (("A(0)", m), ("alpha", s), ("beta", b_img), ("R", signed.matrix))
        return signed, BijectionTrace(steps)
    return signed


# --- parity embedding --------------------------------------------------------


def em_to_sm(m):
    """Send an even-dimension self-dual matrix with nonzero rows and columns
    into the odd-dimension zero-SE family with zero center column: zero the
    SE half, then insert a zero column and zero row at position m + 1 where
    2m is the input dimension.  First-row sum is preserved and the
    center-column sum of the image is 0."""
    require_self_dual(m)
    if m.dim % 2:
        raise OddDimension(f"dimension {m.dim} is odd, expected even")
    require_fishburn(m)
    r = reduce(m)
    h = m.dim // 2
    g = _grid(r)
    _insert_col(g, h + 1)
    _insert_row(g, h + 1)
    return _freeze(g)


def sm_to_em(s):
    """Invert ``em_to_sm``: delete the (necessarily zero) center column and
    row, then mirror the NW half back into SE."""
    require_sm_member(s)
    d = s.dim
    k = (d - 1) // 2
    if k == 0:
        raise MatrixConditionError("dimension 1 input has no even-dimension preimage")
    if any(row[k] for row in s.rows) or any(s.rows[k]):
        raise MatrixConditionError(
            f"column {k + 1} or row {k + 1} nonzero, not in the embedding image")
    g = _grid(s)
    for row in g:
        del row[k]
    del g[k]
    return expand(_freeze(g))
