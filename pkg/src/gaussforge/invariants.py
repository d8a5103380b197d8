"""Odd writhe, Kauffman bracket / f-polynomial, bridge count."""

from __future__ import annotations

import numpy as np

from .diagram import OVER, UNDER, GaussDiagram
from .errors import SizeLimitExceeded
from .laurent import LOOP, ONE, LaurentPolynomial
from .parity import gaussian_parity
from .surface import arc_ends

STATE_SUM_LIMIT = 20
_CHUNK = 1 << 12


def odd_writhe(D: GaussDiagram) -> int:
    par = gaussian_parity(D)
    return sum(D.sign(c) for c, p in par.items() if p)


def smoothing_pairs(D: GaussDiagram) -> dict[int, tuple[tuple, tuple]]:
    """Per chord, the dart pairings of its A- and B-smoothings.

    For a positive crossing the A-smoothing is the oriented one: it joins
    over-in with under-out and over-out with under-in.
    """
    out = {}
    for lab, d in arc_ends(D).items():
        oriented = ((d["over_in"], d["under_out"]), (d["over_out"], d["under_in"]))
        other = ((d["over_in"], d["under_in"]), (d["over_out"], d["under_out"]))
        out[lab] = (oriented, other) if D.sign(lab) > 0 else (other, oriented)
    return out


def state_histogram(D: GaussDiagram, limit: int = STATE_SUM_LIMIT) -> dict[tuple[int, int], int]:
    """Map ``(number of A-smoothings, number of loops)`` -> number of states."""
    n = D.n
    if n > limit:
        raise SizeLimitExceeded(f"{n} chords exceeds the state-sum limit {limit}")
    if n == 0:
        return {(0, 1): 1}
    darts = 4 * n
    labels = sorted(D.labels)
    pairs = smoothing_pairs(D)
    pa = np.empty(darts, dtype=np.int64)
    pb = np.empty(darts, dtype=np.int64)
    bit_of_dart = np.empty(darts, dtype=np.int64)
    for k, lab in enumerate(labels):
        for table, target in ((pairs[lab][0], pa), (pairs[lab][1], pb)):
            for x, y in table:
                target[x], target[y] = y, x
                bit_of_dart[x] = bit_of_dart[y] = k
    flip = np.arange(darts) ^ 1
    # pi[h] = partner(arc-other-end(h)); loops are pairs of its orbits
    pa_f, pb_f, bits_f = pa[flip], pb[flip], bit_of_dart[flip]
    steps = int(np.ceil(np.log2(darts))) + 1
    idx = np.arange(darts)
    counts: dict[tuple[int, int], int] = {}
    total = 1 << n
    for lo in range(0, total, _CHUNK):
        states = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        choose_a = ((states[:, None] >> bits_f[None, :]) & 1).astype(bool)
        pi = np.where(choose_a, pa_f[None, :], pb_f[None, :])
        label = np.broadcast_to(idx, pi.shape).copy()
        for _ in range(steps):
            label = np.minimum(label, np.take_along_axis(label, pi, axis=1))
            pi = np.take_along_axis(pi, pi, axis=1)
        loops = (label == idx[None, :]).sum(axis=1) // 2
        n_a = np.zeros(len(states), dtype=np.int64)
        for k in range(n):
            n_a += (states >> k) & 1
        keys, freq = np.unique(n_a * (2 * n + 2) + loops, return_counts=True)
        for key, f in zip(keys.tolist(), freq.tolist()):
            pair = divmod(key, 2 * n + 2)
            counts[pair] = counts.get(pair, 0) + f
    return counts


def kauffman_bracket(D: GaussDiagram, limit: int = STATE_SUM_LIMIT) -> LaurentPolynomial:
    n = D.n
    result = LaurentPolynomial()
    for (a, loops), count in state_histogram(D, limit).items():
        result = result + LaurentPolynomial.monomial(2 * a - n, count) * LOOP ** (loops - 1)
    return result


def f_polynomial(D: GaussDiagram, limit: int = STATE_SUM_LIMIT) -> LaurentPolynomial:
    w = D.writhe()
    norm = LaurentPolynomial.monomial(-3 * w, -1 if w % 2 else 1)
    return norm * kauffman_bracket(D, limit)


def bridge_count(D: GaussDiagram) -> int:
    """Maximal cyclic runs of arrowheads."""
    roles = [role for _, role in D.endpoints]
    return sum(1 for i, r in enumerate(roles) if r == UNDER and roles[i - 1] == OVER)


__all__ = [
    "ONE", "bridge_count", "f_polynomial", "kauffman_bracket", "odd_writhe",
    "smoothing_pairs", "state_histogram",
]
