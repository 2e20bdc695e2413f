"""Exhaustive generators, refined counters, and the identity checker.

Members of each family are generated directly from their defining
constraints rather than filtered out of the full composition space: values
are assigned to the free cells in row-major order with two prunes, a dead
check when a row or column that still needs mass runs out of cells, and a
lower bound on the mass still required.  The emission order is part of the
contract: ascending dimension, then ascending lexicographic order on the
row-major entry sequence.  The unpruned composition scan lives in the test
suite as an independent oracle.

``verify_identity`` checks each counting identity two ways: by comparing
refined count tables, and by transporting every member through the relevant
map chain and asserting injectivity, image membership, statistic transport,
and image-set equality.
"""

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .bijections import (
    beta,
    em_to_sm,
    embed_rm_in_b,
    project_b_to_signed_rm,
    selfdual_to_signed_rm,
)
from .matrices import (
    Parity,
    TriMatrix,
    b_violation,
    expand,
    fishburn_violation,
    reduced_size,
    row_fishburn_violation,
    selfdual_violation,
    sm_violation,
    stats,
)

# --- family tags -------------------------------------------------------------


class FamilyTag(Enum):
    FISHBURN = "fishburn"
    SELF_DUAL = "self_dual"
    RM = "rm"
    SM = "sm"
    B = "b"


def family_violation(family, m):
    """None when ``m`` belongs to the family, else the first failed condition."""
    if family is FamilyTag.FISHBURN:
        return fishburn_violation(m)
    if family is FamilyTag.SELF_DUAL:
        return selfdual_violation(m) or fishburn_violation(m)
    if family is FamilyTag.RM:
        return row_fishburn_violation(m)
    if family is FamilyTag.SM:
        return sm_violation(m)
    if family is FamilyTag.B:
        return b_violation(m)
    raise ValueError(f"unknown family {family!r}")


def family_member(family, m):
    return family_violation(family, m) is None


def family_size(family, m):
    """The family's size notion: entry sum, except the NW plus diagonal sum
    for the self-dual family."""
    if family is FamilyTag.SELF_DUAL:
        return reduced_size(m)
    return m.size()


# --- generators --------------------------------------------------------------


def _upper_cells(d):
    return tuple((i, j) for i in range(1, d + 1) for j in range(i, d + 1))


def _non_se_cells(d):
    return tuple((i, j) for i in range(1, d + 1) for j in range(i, d + 1)
                 if i + j <= d + 1)


def _fill_assignments(cells, total, need_rows, need_cols):
    """Yield row-major-ascending value tuples over ``cells`` summing to
    ``total``, touching every row in need_rows and column in need_cols.

    Prunes a branch when a needed row or column has passed its last cell
    without mass, or when the remaining mass cannot cover the pending rows
    and columns (one cell can serve one row and one column at once, so the
    bound is the larger pending count).
    """
    last_row = {}
    last_col = {}
    for t, (i, j) in enumerate(cells):
        last_row[i] = t
        last_col[j] = t
    need_rows = frozenset(need_rows)
    need_cols = frozenset(need_cols)
    if any(r not in last_row for r in need_rows):
        return
    if any(c not in last_col for c in need_cols):
        return
    n_cells = len(cells)
    values = [0] * n_cells

    def walk(t, remaining, rows_pending, cols_pending):
        if t == n_cells:
            if remaining == 0 and not rows_pending and not cols_pending:
                yield tuple(values)
            return
        if remaining < max(len(rows_pending), len(cols_pending)):
            return
        i, j = cells[t]
        last_chance = ((i in rows_pending and last_row[i] == t)
                       or (j in cols_pending and last_col[j] == t))
        start = 1 if last_chance else 0
        for v in range(start, remaining + 1):
            values[t] = v
            if v:
                yield from walk(t + 1, remaining - v,
                                rows_pending - {i} if i in rows_pending else rows_pending,
                                cols_pending - {j} if j in cols_pending else cols_pending)
            else:
                yield from walk(t + 1, remaining, rows_pending, cols_pending)
        values[t] = 0

    yield from walk(0, total, need_rows, need_cols)


def _build(d, cells, values):
    g = [[0] * d for _ in range(d)]
    for (i, j), v in zip(cells, values):
        g[i - 1][j - 1] = v
    return TriMatrix(tuple(tuple(row) for row in g))


def _gen_fishburn(n):
    for d in range(1, n + 1):
        cells = _upper_cells(d)
        lines = range(1, d + 1)
        for vals in _fill_assignments(cells, n, lines, lines):
            yield _build(d, cells, vals)


def _gen_rm(n):
    for d in range(1, n + 1):
        cells = _upper_cells(d)
        for vals in _fill_assignments(cells, n, range(1, d + 1), ()):
            yield _build(d, cells, vals)


def _gen_b(n):
    for d in range(1, n + 2):
        cells = _upper_cells(d)
        for vals in _fill_assignments(cells, n, range(2, d + 1), ()):
            yield _build(d, cells, vals)


def _gen_sm(n):
    for d in range(1, 2 * n + 2, 2):
        k = (d - 1) // 2
        cells = _non_se_cells(d)
        for vals in _fill_assignments(cells, n, (), range(1, k + 1)):
            m = _build(d, cells, vals)
            if all(m.row_sum(k + 1 - i) or m.col_sum(k + 1 + i)
                   for i in range(1, k + 1)):
                yield m


def _gen_self_dual(n):
    # generate the zero-SE halves of the given NW-plus-diagonal sum that
    # mirror into members, then expand; expansion fills only SE cells whose
    # mirrors sit in earlier rows, so it preserves row-major order
    for d in range(1, 2 * n + 1):
        h = (d + 1) // 2
        cells = _non_se_cells(d)
        for vals in _fill_assignments(cells, n, (), range(1, h + 1)):
            r = _build(d, cells, vals)
            if all(r.row_sum(i) or r.col_sum(d + 1 - i) for i in range(1, h + 1)):
                yield expand(r)


_GENERATORS = {
    FamilyTag.FISHBURN: _gen_fishburn,
    FamilyTag.SELF_DUAL: _gen_self_dual,
    FamilyTag.RM: _gen_rm,
    FamilyTag.SM: _gen_sm,
    FamilyTag.B: _gen_b,
}


@lru_cache(maxsize=None)
def enumerate_family(family, n):
    """Every member of the family at size n (reduced size for SELF_DUAL),
    each exactly once, ascending dimension then ascending row-major
    lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(_GENERATORS[family](n))


# --- refined counts ----------------------------------------------------------

_PARITY_ORDER = {Parity.EVEN: 0, Parity.ODD: 1, Parity.ANY: 2}


def refinement_key(family, m):
    """(k, p, parity) cell key for one member.

    FISHBURN and SELF_DUAL refine by (first-row sum, diagonal-cell sum) and
    keep the dimension parity; RM and B refine by (last-column sum,
    first-row sum); SM refines by (first-row sum, center-column sum).
    """
    st = stats(m)
    if family in (FamilyTag.FISHBURN, FamilyTag.SELF_DUAL):
        return (st.first_row_sum, st.diag_sum, st.dim_parity)
    if family is FamilyTag.SM:
        return (st.first_row_sum, st.center_col_sum, Parity.ANY)
    return (st.last_col_sum, st.first_row_sum, Parity.ANY)


@dataclass(frozen=True)
class CountTable:
    """Refined counts for one family at one size."""

    family: FamilyTag
    n: int
    cells: dict
    total: int

    def sorted_cells(self):
        return sorted(self.cells.items(),
                      key=lambda kv: (kv[0][0], kv[0][1], _PARITY_ORDER[kv[0][2]]))

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["family", "n", "k", "p", "parity", "count"])
        for (k, p, parity), count in self.sorted_cells():
            writer.writerow([self.family.value, self.n, k, p, parity.value, count])
        return out.getvalue()

    def to_json(self):
        doc = {
            "family": self.family.value,
            "n": self.n,
            "total": self.total,
            "cells": [
                {"k": k, "p": p, "parity": parity.value, "count": count}
                for (k, p, parity), count in self.sorted_cells()
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def count_refined(family, n):
    members = enumerate_family(family, n)
    cells = Counter(refinement_key(family, m) for m in members)
    return CountTable(family=family, n=n, cells=dict(cells), total=len(members))


# --- identity checker ---------------------------------------------------------

IDENTITIES = ("eq1", "eq2", "eq3", "eq4", "eq8")


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    passed: bool
    detail: str
    counterexample: TriMatrix = None


def _fail(identity, n, detail, witness=None):
    return IdentityReport(identity, n, False, detail, witness)


def _ok(identity, n, detail):
    return IdentityReport(identity, n, True, detail)


def _nonzero(counter):
    return {key: v for key, v in counter.items() if v}


def _transport(identity, n, pairs, target_set, describe):
    """Common bijection-side check: ``pairs`` maps members to images.
    Verifies injectivity and image-set equality against ``target_set``."""
    images = {}
    for source, image in pairs:
        if image in images:
            return _fail(identity, n,
                         f"two members share the image described by {describe}",
                         source)
        images[image] = source
        if image not in target_set:
            return _fail(identity, n, f"image escapes the target set ({describe})",
                         source)
    if set(images) != target_set:
        return _fail(identity, n, f"image set misses targets ({describe})")
    return None


def _chain_to_signed(m):
    return selfdual_to_signed_rm(m)


def _verify_eq1(n):
    selfdual = enumerate_family(FamilyTag.SELF_DUAL, n)
    rm = enumerate_family(FamilyTag.RM, n)
    zero_diag = [m for m in selfdual if stats(m).diag_sum == 0]
    left = Counter(stats(m).first_row_sum for m in zero_diag)
    right = Counter(stats(m).last_col_sum for m in rm)
    if _nonzero(left) != _nonzero(right):
        return _fail("eq1", n, f"count tables differ: {_nonzero(left)} vs {_nonzero(right)}")
    pairs = []
    for m in zero_diag:
        signed = _chain_to_signed(m)
        if signed.flag != 1:
            return _fail("eq1", n, "zero diagonal-cell sum should project with flag 1", m)
        if stats(signed.matrix).last_col_sum != stats(m).first_row_sum:
            return _fail("eq1", n, "last-column sum does not match first-row sum", m)
        pairs.append((m, signed.matrix))
    bad = _transport("eq1", n, pairs, set(rm), "the map chain on the zero-sum slice")
    if bad is not None:
        return bad
    return _ok("eq1", n, f"{len(zero_diag)} = {len(rm)} over {len(left)} first-row classes")


def _verify_eq2(n):
    selfdual = enumerate_family(FamilyTag.SELF_DUAL, n)
    rm = enumerate_family(FamilyTag.RM, n)
    pos_diag = [m for m in selfdual if stats(m).diag_sum >= 1]
    left = Counter((stats(m).first_row_sum, stats(m).diag_sum) for m in pos_diag)
    right = Counter((stats(m).last_col_sum, stats(m).first_row_sum) for m in rm)
    if _nonzero(left) != _nonzero(right):
        return _fail("eq2", n, f"count tables differ: {_nonzero(left)} vs {_nonzero(right)}")
    pairs = []
    for m in pos_diag:
        st = stats(m)
        signed = _chain_to_signed(m)
        if signed.flag != 0:
            return _fail("eq2", n, "positive diagonal-cell sum should project with flag 0", m)
        ist = stats(signed.matrix)
        if (ist.last_col_sum, ist.first_row_sum) != (st.first_row_sum, st.diag_sum):
            return _fail("eq2", n, "refined statistics not transported", m)
        pairs.append((m, signed.matrix))
    bad = _transport("eq2", n, pairs, set(rm), "the map chain on the positive-sum slice")
    if bad is not None:
        return bad
    return _ok("eq2", n, f"{len(pos_diag)} = {len(rm)} over {len(left)} refined classes")


def _verify_eq3(n):
    selfdual = enumerate_family(FamilyTag.SELF_DUAL, n)
    rm = enumerate_family(FamilyTag.RM, n)
    if len(selfdual) != 2 * len(rm):
        return _fail("eq3", n, f"{len(selfdual)} != 2*{len(rm)}")
    pairs = [(m, _chain_to_signed(m)) for m in selfdual]
    target = {(r, flag) for r in rm for flag in (0, 1)}
    bad = _transport("eq3", n,
                     [(m, (s.matrix, s.flag)) for m, s in pairs],
                     target, "the full map chain")
    if bad is not None:
        return bad
    return _ok("eq3", n, f"{len(selfdual)} = 2*{len(rm)}")


def _verify_eq4(n):
    b_members = enumerate_family(FamilyTag.B, n)
    rm = enumerate_family(FamilyTag.RM, n)
    if len(b_members) != 2 * len(rm):
        return _fail("eq4", n, f"{len(b_members)} != 2*{len(rm)}")
    pairs = []
    for r in rm:
        for flag in (0, 1):
            pairs.append(((r, flag), embed_rm_in_b(r, flag)))
    target = set(b_members)
    images = {}
    for source, image in pairs:
        if image in images or image not in target:
            return _fail("eq4", n, "embedding not injective into the target", source[0])
        images[image] = source
    if set(images) != target:
        return _fail("eq4", n, "embedding misses part of the target family")
    for image, (r, flag) in images.items():
        back = project_b_to_signed_rm(image)
        if (back.matrix, back.flag) != (r, flag):
            return _fail("eq4", n, "projection does not invert the embedding", image)
    return _ok("eq4", n, f"{len(b_members)} = 2*{len(rm)}")


def _verify_eq8(n):
    selfdual = enumerate_family(FamilyTag.SELF_DUAL, n)
    rm = enumerate_family(FamilyTag.RM, n)
    sm = enumerate_family(FamilyTag.SM, n)
    even = [m for m in selfdual if m.dim % 2 == 0]
    odd = [m for m in selfdual if m.dim % 2 == 1]
    even_k = Counter(stats(m).first_row_sum for m in even)
    odd_k = Counter(stats(m).first_row_sum for m in odd)
    rm_k = Counter(stats(m).last_col_sum for m in rm)
    if not (_nonzero(even_k) == _nonzero(odd_k) == _nonzero(rm_k)):
        return _fail("eq8", n, "even/odd/row-nonzero count tables differ: "
                               f"{_nonzero(even_k)} vs {_nonzero(odd_k)} vs {_nonzero(rm_k)}")
    # transport leg 1: even-dimension members onto the zero-center slice
    zero_center = [s for s in sm if stats(s).center_col_sum == 0]
    pairs = []
    for m in even:
        image = em_to_sm(m)
        if stats(image).first_row_sum != stats(m).first_row_sum:
            return _fail("eq8", n, "first-row sum not preserved by the parity embedding", m)
        pairs.append((m, image))
    bad = _transport("eq8", n, pairs, set(zero_center), "the parity embedding")
    if bad is not None:
        return bad
    # transport leg 2: zero-center slice onto the row-nonzero family
    pairs = []
    for s in zero_center:
        signed = project_b_to_signed_rm(beta(s))
        if stats(signed.matrix).last_col_sum != stats(s).first_row_sum:
            return _fail("eq8", n, "last-column sum does not match first-row sum", s)
        pairs.append((s, signed.matrix))
    bad = _transport("eq8", n, pairs, set(rm), "column relocation on the zero-center slice")
    if bad is not None:
        return bad
    return _ok("eq8", n,
               f"even {len(even)} = odd {len(odd)} = {len(rm)} "
               f"over {len(rm_k)} first-row classes")


_CHECKERS = {
    "eq1": _verify_eq1,
    "eq2": _verify_eq2,
    "eq3": _verify_eq3,
    "eq4": _verify_eq4,
    "eq8": _verify_eq8,
}


def verify_identity(identity, n):
    """Check one counting identity at one size, by refined count comparison
    and again by member-by-member transport.  Failure is a report with a
    witness, not an exception."""
    if identity not in _CHECKERS:
        raise ValueError(f"unknown identity {identity!r}, expected one of {IDENTITIES}")
    if n < 1:
        raise ValueError("n must be at least 1")
    return _CHECKERS[identity](n)
