#!/usr/bin/env python3
"""Full verification sweep: counting identities, roundtrips, and statistic
transport for every size up to a bound, one line per check.

Exits 0 when every check passes, 1 otherwise, so the script can gate CI.
"""

import argparse
import sys
import time

from fishburn import (
    IDENTITIES,
    FamilyTag,
    SignedRowFishburn,
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    embed_rm_in_b,
    enumerate_family,
    project_b_to_signed_rm,
    stats,
    verify_identity,
)


def check_identities(max_size):
    for identity in IDENTITIES:
        for n in range(1, max_size + 1):
            report = verify_identity(identity, n)
            yield f"{identity} n={n}", report.passed, report.detail


def check_roundtrips(max_size):
    for n in range(1, max_size + 1):
        ok = all(alpha_inv(alpha(m)) == m
                 for m in enumerate_family(FamilyTag.SELF_DUAL, n))
        yield f"fold roundtrip n={n}", ok, "alpha_inv after alpha is identity"
        ok = all(beta_inv(beta(s)) == s
                 for s in enumerate_family(FamilyTag.SM, n))
        yield f"relocation roundtrip n={n}", ok, "beta_inv after beta is identity"
        b_set = set(enumerate_family(FamilyTag.B, n))
        ok = all(beta(beta_inv(b)) == b for b in b_set)
        yield f"relocation inverse roundtrip n={n}", ok, \
            "beta after beta_inv is identity"
        images = set()
        ok = True
        for a in enumerate_family(FamilyTag.RM, n):
            for flag in (0, 1):
                image = embed_rm_in_b(a, flag)
                ok = ok and project_b_to_signed_rm(image) == \
                    SignedRowFishburn(a, flag)
                images.add(image)
        yield f"embedding pair n={n}", ok and images == b_set, \
            "embed and project invert each other onto the target family"


def check_transport(max_size):
    for n in range(1, max_size + 1):
        ok = True
        for m in enumerate_family(FamilyTag.SELF_DUAL, n):
            before, after = stats(m), stats(alpha(m))
            ok = ok and after.first_row_sum == before.first_row_sum
            ok = ok and after.center_col_sum == before.diag_sum
        yield f"fold transport n={n}", ok, \
            "first-row sum kept, diagonal sum to center column"
        ok = True
        for s in enumerate_family(FamilyTag.SM, n):
            before, after = stats(s), stats(beta(s))
            ok = ok and after.last_col_sum == before.first_row_sum
            ok = ok and after.first_row_sum == before.center_col_sum
        yield f"relocation transport n={n}", ok, \
            "first-row sum to last column, center column to first row"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=6, metavar="N",
                        help="largest total to check (default: 6)")
    args = parser.parse_args(argv)
    if args.max_size < 1:
        parser.error("--max-size must be positive")

    started = time.perf_counter()
    failures = 0
    for source in (check_identities, check_roundtrips, check_transport):
        for label, passed, detail in source(args.max_size):
            verdict = "pass" if passed else "FAIL"
            print(f"{label}: {verdict} ({detail})")
            failures += 0 if passed else 1
    elapsed = time.perf_counter() - started
    if failures:
        print(f"{failures} checks FAILED in {elapsed:.1f}s")
        return 1
    print(f"all checks passed in {elapsed:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
