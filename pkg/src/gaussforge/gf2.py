"""GF(2) row reduction on int bitsets (bit ``j`` of a row is column ``j``)."""

from __future__ import annotations


def reduce_rows(rows: list[int]) -> list[int]:
    """Return an echelon basis of the row space, one row per distinct pivot."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return basis


def rank(rows: list[int]) -> int:
    return len(reduce_rows(rows))


def in_row_space(vec: int, basis: list[int]) -> bool:
    """Membership test against a basis produced by :func:`reduce_rows`."""
    for b in basis:
        vec = min(vec, vec ^ b)
    return vec == 0
