"""Deliberately naive second implementations used to cross-check the fast paths.

Nothing here shares code with :mod:`surface` or :mod:`invariants` beyond the
diagram type itself.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product

import sympy

from .diagram import OVER, GaussDiagram

# Directions (degrees) of the four strand ends at a crossing of each sign.
_ANGLES = {
    1: {"over_in": 225, "over_out": 45, "under_in": 315, "under_out": 135},
    -1: {"over_in": 225, "over_out": 45, "under_in": 135, "under_out": 315},
}


def naive_faces(D: GaussDiagram) -> list[Counter]:
    """Trace band boundaries by walking arcs and turning at crossings.

    A walker keeps the band on its left; on reaching a crossing it turns
    into the nearest strand end clockwise from the one it arrived on.
    Returns one Counter of crossing visits per boundary component.
    """
    size = len(D.endpoints)
    if size == 0:
        return [Counter(), Counter()]

    def end_at(p, incoming):
        lab, role = D.endpoints[p]
        strand = "over" if role == OVER else "under"
        return lab, f"{strand}_{'in' if incoming else 'out'}"

    where = {}
    for p, (lab, role) in enumerate(D.endpoints):
        strand = "over" if role == OVER else "under"
        where[(lab, f"{strand}_in")] = (p, True)
        where[(lab, f"{strand}_out")] = (p, False)

    def step(arc, forward):
        # Arrive at the far end of this arc.
        if forward:
            p, incoming = (arc + 1) % size, True
        else:
            p, incoming = arc, False
        lab, name = end_at(p, incoming)
        angles = _ANGLES[D.sign(lab)]
        target = (angles[name] - 90) % 360
        nxt = next(k for k, a in angles.items() if a == target)
        q, q_incoming = where[(lab, nxt)]
        # Leaving along an incoming end means walking that arc backwards.
        if q_incoming:
            return ((q - 1) % size, False), lab
        return (q, True), lab

    seen = set()
    faces = []
    for start in product(range(size), (True, False)):
        if start in seen:
            continue
        visits = Counter()
        state = start
        while state not in seen:
            seen.add(state)
            state, lab = step(*state)
            visits[lab] += 1
        faces.append(visits)
    return faces


def naive_genus(D: GaussDiagram) -> int:
    F = len(naive_faces(D))
    return (2 - F + D.n) // 2


_A = sympy.Symbol("A")


def naive_bracket(D: GaussDiagram) -> dict[int, int]:
    """State sum over all 2^n smoothings with union-find loop counting.

    Oriented smoothing joins the arc entering a crossing on one strand with
    the arc leaving on the other; for a positive crossing it carries weight A.
    """
    size = len(D.endpoints)
    if size == 0:
        return {0: 1}
    chords = D.chords
    loop = -_A**2 - _A**-2
    total = sympy.Integer(0)
    for state in product((True, False), repeat=len(chords)):
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(x, y):
            parent[find(x)] = find(y)

        weight = 0
        for ch, a_state in zip(chords, state):
            into_o, out_o = (ch.over_pos - 1) % size, ch.over_pos
            into_u, out_u = (ch.under_pos - 1) % size, ch.under_pos
            oriented = a_state == (ch.sign > 0)
            if oriented:
                join(into_o, out_u)
                join(into_u, out_o)
            else:
                join(into_o, into_u)
                join(out_o, out_u)
            weight += 1 if a_state else -1
        loops = len({find(x) for x in range(size)})
        total += _A**weight * loop ** (loops - 1)
    shift = 3 * len(chords) + 4
    poly = sympy.Poly(sympy.expand(total * _A**shift), _A)
    return {e - shift: int(c) for (e,), c in poly.terms() if c}


def span_contains(rows: list[list[int]], target: list[int]) -> bool:
    """Whether some subset of rows sums to ``target`` mod 2 (exhaustive)."""
    width = len(target)
    for k in range(len(rows) + 1):
        for subset in combinations(rows, k):
            acc = [0] * width
            for r in subset:
                acc = [(x + y) % 2 for x, y in zip(acc, r)]
            if acc == list(target):
                return True
    return False


def span_dimension(rows: list[list[int]]) -> int:
    """log2 of the number of distinct subset sums (exhaustive)."""
    sums = set()
    for mask in range(1 << len(rows)):
        acc = tuple(0 for _ in rows[0]) if rows else ()
        for i, r in enumerate(rows):
            if mask >> i & 1:
                acc = tuple((x + y) % 2 for x, y in zip(acc, r))
        sums.add(acc)
    return len(sums).bit_length() - 1
