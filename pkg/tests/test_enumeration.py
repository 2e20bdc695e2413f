"""Family enumeration order and completeness, refined count tables, and the
five counting identities."""

import pathlib

import pytest

from fishburn import (
    FamilyTag,
    Parity,
    TriMatrix,
    count_refined,
    enumerate_family,
    family_member,
    family_size,
    family_violation,
    refinement_key,
    verify_identity,
)
from vectors import A5, A6, B_1, M_1, RM_2_ORDER, SM_1

GOLDEN = pathlib.Path(__file__).parent / "golden"

# hand-derived leading counts; the reduced-size family and the rows-after-
# the-first family stay in lockstep at twice the row-nonzero family
FISHBURN_COUNTS = (1, 2, 5, 15, 53)
RM_COUNTS = (1, 3, 12, 61, 380)

# --- enumeration contract -------------------------------------------------------


def test_listing_order_rm_2():
    assert enumerate_family(FamilyTag.RM, 2) == RM_2_ORDER


def test_listing_order_self_dual_1():
    assert enumerate_family(FamilyTag.SELF_DUAL, 1) == (
        TriMatrix(((1,),)),
        TriMatrix(((1, 0), (0, 1))),
    )


def test_size_one_families():
    assert set(enumerate_family(FamilyTag.SELF_DUAL, 1)) == M_1
    assert set(enumerate_family(FamilyTag.SM, 1)) == SM_1
    assert set(enumerate_family(FamilyTag.B, 1)) == B_1
    assert enumerate_family(FamilyTag.FISHBURN, 1) == (TriMatrix(((1,),)),)
    assert enumerate_family(FamilyTag.RM, 1) == (TriMatrix(((1,),)),)


def test_listing_is_ascending_dim_then_lex():
    for family in FamilyTag:
        for n in range(1, 5):
            members = enumerate_family(family, n)
            keys = [(m.dim, m.rows) for m in members]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)


def test_members_satisfy_predicate_and_size():
    for family in FamilyTag:
        for n in range(1, 5):
            for m in enumerate_family(family, n):
                assert family_member(family, m)
                assert family_size(family, m) == n


def test_leading_counts():
    for n, expected in enumerate(FISHBURN_COUNTS, start=1):
        assert len(enumerate_family(FamilyTag.FISHBURN, n)) == expected
    for n, expected in enumerate(RM_COUNTS, start=1):
        assert len(enumerate_family(FamilyTag.RM, n)) == expected
        assert len(enumerate_family(FamilyTag.SELF_DUAL, n)) == 2 * expected
        assert len(enumerate_family(FamilyTag.B, n)) == 2 * expected
        assert len(enumerate_family(FamilyTag.SM, n)) == 2 * expected


def test_enumerate_rejects_nonpositive_size():
    with pytest.raises(ValueError):
        enumerate_family(FamilyTag.RM, 0)


def test_enumeration_is_deterministic():
    # bypass the cache so two independent walks are compared
    walk = enumerate_family.__wrapped__
    assert walk(FamilyTag.SELF_DUAL, 3) == walk(FamilyTag.SELF_DUAL, 3)
    assert walk(FamilyTag.SM, 3) == walk(FamilyTag.SM, 3)


# --- family dispatch helpers ---------------------------------------------------


def test_family_violation_dispatch():
    assert family_violation(FamilyTag.FISHBURN, A5) is None
    assert family_violation(FamilyTag.SELF_DUAL, A5) is None
    assert family_violation(FamilyTag.SM, A6) is None
    bad = TriMatrix(((0, 0), (0, 1)))
    assert family_violation(FamilyTag.RM, bad) == "row 1 zero"
    assert family_violation(FamilyTag.B, bad) is None
    assert family_violation(FamilyTag.SELF_DUAL, TriMatrix(((1, 1), (0, 0)))) \
        is not None


def test_family_size_dispatch():
    assert family_size(FamilyTag.FISHBURN, A5) == 9
    assert family_size(FamilyTag.SELF_DUAL, A5) == 5


# --- refinement keys --------------------------------------------------------------


def test_refinement_keys():
    assert refinement_key(FamilyTag.SELF_DUAL, A5) == (2, 1, Parity.ODD)
    assert refinement_key(FamilyTag.FISHBURN, A5) == (2, 1, Parity.ODD)
    assert refinement_key(FamilyTag.SM, A6) == (3, 1, Parity.ANY)
    assert refinement_key(FamilyTag.RM, TriMatrix(((1, 0), (0, 1)))) == \
        (1, 1, Parity.ANY)
    assert refinement_key(FamilyTag.B, TriMatrix(((0, 1), (0, 1)))) == \
        (2, 1, Parity.ANY)


# --- count tables -----------------------------------------------------------------


def test_count_table_totals():
    for family in FamilyTag:
        for n in range(1, 5):
            table = count_refined(family, n)
            assert table.total == len(enumerate_family(family, n))
            assert sum(table.cells.values()) == table.total


def test_count_csv_golden_bytes():
    assert count_refined(FamilyTag.RM, 2).to_csv() == \
        (GOLDEN / "count_rm_2.csv").read_text()
    assert count_refined(FamilyTag.SELF_DUAL, 2).to_csv() == \
        (GOLDEN / "count_self_dual_2.csv").read_text()


def test_count_json_golden_bytes():
    assert count_refined(FamilyTag.SELF_DUAL, 1).to_json() == \
        (GOLDEN / "count_self_dual_1.json").read_text()
    assert count_refined(FamilyTag.SM, 1).to_json() == \
        (GOLDEN / "count_sm_1.json").read_text()


def test_count_output_is_stable_across_calls():
    first = count_refined(FamilyTag.SELF_DUAL, 3).to_csv()
    second = count_refined(FamilyTag.SELF_DUAL, 3).to_csv()
    assert first == second


# --- identities --------------------------------------------------------------------


def test_all_identities_pass_small():
    for identity in ("eq1", "eq2", "eq3", "eq4", "eq8"):
        for n in range(1, 5):
            report = verify_identity(identity, n)
            assert report.passed, (identity, n, report.detail)
            assert report.counterexample is None


def test_identity_details_at_size_one():
    assert verify_identity("eq3", 1).detail == "2 = 2*1"
    assert verify_identity("eq4", 1).detail == "2 = 2*1"


def test_identity_rejects_bad_arguments():
    with pytest.raises(ValueError, match="unknown identity"):
        verify_identity("eq9", 2)
    with pytest.raises(ValueError):
        verify_identity("eq1", 0)


def test_parity_split_is_even():
    # within the reduced-size family, even and odd dimensions each carry
    # exactly the row-nonzero family's count, refined by first-row sum
    for n in range(1, 5):
        table = count_refined(FamilyTag.SELF_DUAL, n)
        even = {}
        odd = {}
        for (k, p, parity), count in table.cells.items():
            side = even if parity is Parity.EVEN else odd
            side[k] = side.get(k, 0) + count
        rm = {}
        for (k, _, _), count in count_refined(FamilyTag.RM, n).cells.items():
            rm[k] = rm.get(k, 0) + count
        assert even == odd == rm
