#!/usr/bin/env python3
"""Print the two worked examples step by step: the fold map on a size-9
self-dual matrix and the column relocation on a size-6 member of the
odd-dimension zero-SE family, ending with the full chain and its flag."""

import sys

from fishburn import (
    TriMatrix,
    alpha,
    beta,
    format_matrix,
    selfdual_to_signed_rm,
)

FOLD_INPUT = TriMatrix((
    (1, 0, 1, 0, 0),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 1, 1),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
))

RELOCATION_INPUT = TriMatrix((
    (1, 0, 0, 1, 1),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
))


def show(title, trace):
    print(f"== {title} ==")
    for label, snapshot in trace.steps:
        print(f"{label}:")
        print(format_matrix(snapshot))


def main():
    _, fold_trace = alpha(FOLD_INPUT, want_trace=True)
    show("fold: self-dual to odd-dimension zero-SE", fold_trace)

    _, relocation_trace = beta(RELOCATION_INPUT, want_trace=True)
    show("relocation: zero-SE to rows-after-the-first nonzero",
         relocation_trace)

    signed, chain_trace = selfdual_to_signed_rm(FOLD_INPUT, want_trace=True)
    show("full chain: self-dual to row-nonzero plus one bit", chain_trace)
    print(f"flag: {signed.flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
