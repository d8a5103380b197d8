"""Reidemeister moves on Gauss diagrams and a bounded equivalence search.

Sites by kind:

* ``R1_remove``: ``(label,)`` of a chord with cyclically adjacent ends.
* ``R2_remove``: ``(a, b)``: tails adjacent, heads adjacent, opposite signs.
* ``R1_add``: ``(arc, sign, over_first)``.
* ``R2_add``: ``(arc1, arc2, over_at_arc1, interleaved, sign)`` with
  ``arc1 <= arc2``.  The tail pair ``O_a O_b`` goes to one arc, the head pair
  (``U_a U_b`` if interleaved, else ``U_b U_a``) to the other; ``a`` gets
  ``sign`` and ``b`` gets ``-sign``.  When both arcs coincide the pair for
  ``arc1`` comes first.
* ``R3``: ``(tm, tb, mb)``, the chords where top crosses middle, top crosses
  bottom and middle crosses bottom.  The three strand segments are the
  adjacent endpoint pairs ``{O_tm, O_tb}``, ``{U_tm, O_mb}``, ``{U_tb, U_mb}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .diagram import (
    OVER,
    UNDER,
    GaussDiagram,
    delete_chords,
    gap_count,
    insert_blocks,
    next_label,
)
from .errors import InapplicableMove

R1_ADD, R1_REMOVE = "R1_add", "R1_remove"
R2_ADD, R2_REMOVE = "R2_add", "R2_remove"
R3 = "R3"
KINDS = (R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3)
INCREASING = (R1_ADD, R2_ADD)

# Oriented R3 configurations realisable by three directed lines in the plane.
# Key: (tm before tb on the top strand, tm before mb on the middle strand,
#       tb before mb on the bottom strand, sign tm, sign tb, sign mb).
# The move reverses all three orders, which maps the table onto itself.
R3_TABLE = frozenset({
    (False, False, False, -1, -1, -1), (False, False, False, 1, 1, 1),
    (False, False, True, -1, 1, 1), (False, False, True, 1, -1, -1),
    (False, True, False, -1, 1, -1), (False, True, False, 1, -1, 1),
    (False, True, True, -1, -1, 1), (False, True, True, 1, 1, -1),
    (True, False, False, -1, -1, 1), (True, False, False, 1, 1, -1),
    (True, False, True, -1, 1, -1), (True, False, True, 1, -1, 1),
    (True, True, False, -1, 1, 1), (True, True, False, 1, -1, -1),
    (True, True, True, -1, -1, -1), (True, True, True, 1, 1, 1),
})


@dataclass(frozen=True)
class MoveDescriptor:
    kind: str
    site: tuple
    correspondence: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def __str__(self):
        return f"{self.kind}{self.site}"


def _identity(labels):
    return tuple((lab, lab) for lab in sorted(labels))


def _adjacent(p, q, size):
    """``True`` if q follows p on the core circle."""
    return size > 1 and q == (p + 1) % size


def _triangle(D: GaussDiagram, tm, tb, mb):
    """Segments (first, second) for the top/middle/bottom strands, or ``None``."""
    size = len(D.endpoints)
    o_tm, u_tm = D.positions(tm)
    o_tb, u_tb = D.positions(tb)
    o_mb, u_mb = D.positions(mb)
    segs = []
    for p, q in ((o_tm, o_tb), (u_tm, o_mb), (u_tb, u_mb)):
        if _adjacent(p, q, size):
            segs.append((p, q, True))
        elif _adjacent(q, p, size):
            segs.append((q, p, False))
        else:
            return None
    return segs


def _r3_key(D, tm, tb, mb, segs):
    return (segs[0][2], segs[1][2], segs[2][2], D.sign(tm), D.sign(tb), D.sign(mb))


def enumerate_moves(D: GaussDiagram, include_increasing: bool = False) -> list[MoveDescriptor]:
    size = len(D.endpoints)
    ends = D.endpoints
    moves = []
    for lab in D.labels:
        o, u = D.positions(lab)
        if _adjacent(o, u, size) or _adjacent(u, o, size):
            moves.append(MoveDescriptor(R1_REMOVE, (lab,), _identity(set(D.labels) - {lab})))
    r3_sites = []
    for i in range(size):
        j = (i + 1) % size
        (a, ra), (b, rb) = ends[i], ends[j]
        if a == b or ra != OVER or rb != OVER:
            continue
        ua, ub = D.positions(a)[1], D.positions(b)[1]
        if (_adjacent(ua, ub, size) or _adjacent(ub, ua, size)) and D.sign(a) != D.sign(b):
            site = tuple(sorted((a, b)))
            moves.append(MoveDescriptor(R2_REMOVE, site, _identity(set(D.labels) - set(site))))
        for tm, tb in ((a, b), (b, a)):
            u_tb = D.positions(tb)[1]
            for p in ((u_tb - 1) % size, (u_tb + 1) % size):
                mb, role = ends[p]
                if role != UNDER or mb in (tm, tb):
                    continue
                segs = _triangle(D, tm, tb, mb)
                if segs and _r3_key(D, tm, tb, mb, segs) in R3_TABLE:
                    r3_sites.append((tm, tb, mb))
    for site in dict.fromkeys(r3_sites):
        moves.append(MoveDescriptor(R3, site, _identity(D.labels)))
    if include_increasing:
        moves.extend(increasing_moves(D))
    return moves


def increasing_moves(D: GaussDiagram, kinds=INCREASING) -> list[MoveDescriptor]:
    gaps = gap_count(D)
    corr = _identity(D.labels)
    moves = []
    if R1_ADD in kinds:
        for g in range(gaps):
            for sign in (1, -1):
                for over_first in (True, False):
                    moves.append(MoveDescriptor(R1_ADD, (g, sign, over_first), corr))
    if R2_ADD in kinds:
        for g1 in range(gaps):
            for g2 in range(g1, gaps):
                for over_at_g1 in (True, False):
                    for interleaved in (True, False):
                        for sign in (1, -1):
                            moves.append(MoveDescriptor(
                                R2_ADD, (g1, g2, over_at_g1, interleaved, sign), corr))
    return moves


def apply_move(D: GaussDiagram, m: MoveDescriptor) -> GaussDiagram:
    size = len(D.endpoints)
    kind, site = m.kind, m.site
    if kind == R1_REMOVE:
        (lab,) = site
        if lab not in D:
            raise InapplicableMove(f"R1_remove: no chord {lab}")
        o, u = D.positions(lab)
        if not (_adjacent(o, u, size) or _adjacent(u, o, size)):
            raise InapplicableMove(f"R1_remove: ends of chord {lab} are not adjacent")
        return delete_chords(D, [lab])
    if kind == R2_REMOVE:
        a, b = site
        if a == b or a not in D or b not in D:
            raise InapplicableMove(f"R2_remove: bad chord pair {site}")
        (oa, ua), (ob, ub) = D.positions(a), D.positions(b)
        if not (_adjacent(oa, ob, size) or _adjacent(ob, oa, size)):
            raise InapplicableMove(f"R2_remove: tails of {a},{b} are not adjacent")
        if not (_adjacent(ua, ub, size) or _adjacent(ub, ua, size)):
            raise InapplicableMove(f"R2_remove: heads of {a},{b} are not adjacent")
        if D.sign(a) == D.sign(b):
            raise InapplicableMove(f"R2_remove: chords {a},{b} have the same sign")
        return delete_chords(D, [a, b])
    if kind == R1_ADD:
        g, sign, over_first = site
        c = next_label(D)
        block = [(c, OVER), (c, UNDER)] if over_first else [(c, UNDER), (c, OVER)]
        return _insert(D, [(g, block)], {c: sign})
    if kind == R2_ADD:
        g1, g2, over_at_g1, interleaved, sign = site
        if g1 > g2:
            raise InapplicableMove("R2_add: arcs must be given in increasing order")
        a = next_label(D)
        b = a + 1
        tails = [(a, OVER), (b, OVER)]
        heads = [(a, UNDER), (b, UNDER)] if interleaved else [(b, UNDER), (a, UNDER)]
        first, second = (tails, heads) if over_at_g1 else (heads, tails)
        return _insert(D, [(g1, first), (g2, second)], {a: sign, b: -sign})
    if kind == R3:
        tm, tb, mb = site
        if len(set(site)) != 3 or not all(c in D for c in site):
            raise InapplicableMove(f"R3: bad chord triple {site}")
        segs = _triangle(D, tm, tb, mb)
        if segs is None:
            raise InapplicableMove(f"R3: chords {site} do not form a triangle")
        if _r3_key(D, tm, tb, mb, segs) not in R3_TABLE:
            raise InapplicableMove(f"R3: sign/order pattern of {site} is not a planar triangle")
        ends = list(D.endpoints)
        for p, q, _ in segs:
            ends[p], ends[q] = ends[q], ends[p]
        return GaussDiagram(ends, D.signs)
    raise InapplicableMove(f"unknown move kind {kind!r}")


def _insert(D, blocks, signs):
    try:
        return insert_blocks(D, blocks, signs)
    except ValueError as exc:
        raise InapplicableMove(str(exc)) from exc


def created_chords(D: GaussDiagram, m: MoveDescriptor, D2: GaussDiagram) -> set[int]:
    return set(D2.labels) - {b for _, b in m.correspondence}


def inverse_move(D: GaussDiagram, m: MoveDescriptor) -> MoveDescriptor:
    """A move on ``apply_move(D, m)`` leading back to ``D`` (up to detour)."""
    D2 = apply_move(D, m)
    if m.kind == R3:
        return MoveDescriptor(R3, m.site, _identity(D2.labels))
    if m.kind in INCREASING:
        new = tuple(sorted(created_chords(D, m, D2)))
        kind = R1_REMOVE if m.kind == R1_ADD else R2_REMOVE
        return MoveDescriptor(kind, new, _identity(D.labels))
    want = R1_ADD if m.kind == R1_REMOVE else R2_ADD
    target = D.canonical()
    for cand in increasing_moves(D2, kinds=(want,)):
        if apply_move(D2, cand).canonical() == target:
            return cand
    raise InapplicableMove(f"no inverse found for {m}")  # pragma: no cover


# -- equivalence search -----------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    max_chords: int = 6
    max_depth: int = 4
    max_nodes: int = 5000

    def __post_init__(self):
        if min(self.max_chords, self.max_depth, self.max_nodes) <= 0:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class Step:
    before: GaussDiagram
    move: MoveDescriptor
    after: GaussDiagram


@dataclass
class SearchResult:
    """``status`` is ``"equivalent"`` (with ``path``) or ``"unknown"``."""

    status: str
    path: list[Step] | None
    explored: int

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"


def neighbours(X: GaussDiagram, max_chords: int):
    for m in enumerate_moves(X, include_increasing=X.n + 1 <= max_chords):
        if m.kind == R2_ADD and X.n + 2 > max_chords:
            continue
        yield m, apply_move(X, m)


def equivalence_search(D1: GaussDiagram, D2: GaussDiagram,
                       budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Bidirectional BFS over canonical forms; never asserts inequivalence."""
    start, goal = D1.canonical(), D2.canonical()
    if start == goal:
        return SearchResult("equivalent", [], 1)
    # canonical -> (parent canonical, Step leading away from the side's root)
    parents = [{start: None}, {goal: None}]
    frontiers = [deque([start]), deque([goal])]
    depths = [0, 0]
    explored = 2
    while frontiers[0] and frontiers[1] and sum(depths) < budget.max_depth:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        other = parents[1 - side]
        next_frontier = deque()
        for code in frontiers[side]:
            X = code.to_diagram()
            for m, Y in neighbours(X, budget.max_chords):
                c = Y.canonical()
                if c in parents[side]:
                    continue
                parents[side][c] = (code, Step(X, m, Y))
                explored += 1
                if c in other:
                    return SearchResult("equivalent", _join(parents, c), explored)
                if explored >= budget.max_nodes:
                    return SearchResult("unknown", None, explored)
                next_frontier.append(c)
        frontiers[side] = next_frontier
        depths[side] += 1
    return SearchResult("unknown", None, explored)


def _chain(parents, c):
    steps = []
    while parents[c] is not None:
        c, step = parents[c]
        steps.append(step)
    return steps[::-1]


def _join(parents, meet):
    fwd_parents, bwd_parents = parents
    forward = _chain(fwd_parents, meet)
    backward = _chain(bwd_parents, meet)
    path = list(forward)
    for step in reversed(backward):
        inv = inverse_move(step.before, step.move)
        back = apply_move(step.after, inv)
        path.append(Step(step.after, inv, back))
    return path
