"""Gauss diagrams: the value type, chord linking, deletion, canonical form,
the ``smaller than`` order and connected sum.

A diagram is stored as its cyclic endpoint sequence: position ``i`` holds a
``(label, role)`` pair with role ``"O"`` (arrowtail, the over-crossing
preimage) or ``"U"`` (arrowhead).  The core circle is oriented by index order.
Equality and hashing go through :func:`canonical`, so two diagrams compare
equal exactly when they differ by a basepoint rotation and a relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArcOutOfRange,
    BadChordRoles,
    BudgetExceeded,
    DuplicatePosition,
    PositionOutOfRange,
    SelfLinkQuery,
    UnknownLabel,
)

OVER = "O"
UNDER = "U"

Endpoint = tuple[int, str]


@dataclass(frozen=True)
class Chord:
    """A chord directed from ``over_pos`` (tail) to ``under_pos`` (head)."""

    label: int
    over_pos: int
    under_pos: int
    sign: int


@dataclass(frozen=True)
class CanonicalCode:
    """Rotation- and relabeling-minimal token sequence of a diagram."""

    tokens: tuple[tuple[str, int, int], ...]

    def __str__(self):
        return "".join(f"{r}{lab}{'+' if s > 0 else '-'}" for r, lab, s in self.tokens)

    def __len__(self):
        return len(self.tokens)

    def to_diagram(self) -> GaussDiagram:
        endpoints = tuple((lab, role) for role, lab, _ in self.tokens)
        signs = {lab: s for _, lab, s in self.tokens}
        return GaussDiagram(endpoints, signs)


class GaussDiagram:
    """Immutable oriented Gauss diagram of a one-component virtual knot."""

    __slots__ = ("_endpoints", "_signs", "_pos", "_canon")

    def __init__(self, endpoints: Sequence[Endpoint], signs: Mapping[int, int]):
        # Trusted constructor; use from_chords / from_endpoints for input data.
        self._endpoints = tuple(endpoints)
        self._signs = dict(signs)
        pos: dict[int, list[int]] = {}
        for i, (lab, role) in enumerate(self._endpoints):
            slot = pos.setdefault(lab, [-1, -1])
            slot[0 if role == OVER else 1] = i
        self._pos = {lab: (p[0], p[1]) for lab, p in pos.items()}
        self._canon = None

    @classmethod
    def from_endpoints(cls, endpoints: Sequence[Endpoint], signs: Mapping[int, int]) -> GaussDiagram:
        seen: dict[int, list[str]] = {}
        for lab, role in endpoints:
            if role not in (OVER, UNDER):
                raise BadChordRoles(f"bad role {role!r} for chord {lab}")
            seen.setdefault(lab, []).append(role)
        for lab, roles in seen.items():
            if sorted(roles) != [OVER, UNDER]:
                raise BadChordRoles(f"chord {lab} has roles {roles}, expected one O and one U")
            if signs.get(lab) not in (1, -1):
                raise BadChordRoles(f"chord {lab} has sign {signs.get(lab)!r}")
        return cls(endpoints, {lab: signs[lab] for lab in seen})

    # -- accessors ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._pos)

    @property
    def endpoints(self) -> tuple[Endpoint, ...]:
        return self._endpoints

    @property
    def labels(self) -> list[int]:
        """Chord labels in order of first occurrence."""
        out, seen = [], set()
        for lab, _ in self._endpoints:
            if lab not in seen:
                seen.add(lab)
                out.append(lab)
        return out

    @property
    def signs(self) -> dict[int, int]:
        return dict(self._signs)

    @property
    def chords(self) -> list[Chord]:
        return [Chord(lab, o, u, self._signs[lab]) for lab, (o, u) in sorted(self._pos.items())]

    def sign(self, label: int) -> int:
        self._check(label)
        return self._signs[label]

    def positions(self, label: int) -> tuple[int, int]:
        """``(over_pos, under_pos)`` of a chord."""
        self._check(label)
        return self._pos[label]

    def writhe(self) -> int:
        return sum(self._signs.values())

    def __contains__(self, label):
        return label in self._pos

    def _check(self, label):
        if label not in self._pos:
            raise UnknownLabel(f"no chord labelled {label}")

    # -- equality ----------------------------------------------------------

    def canonical(self) -> CanonicalCode:
        if self._canon is None:
            self._canon = canonical(self)
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def same_layout(self, other: GaussDiagram) -> bool:
        """Exact equality of positions, labels and signs (no quotienting)."""
        return self._endpoints == other._endpoints and self._signs == other._signs

    def code(self) -> str:
        """Gauss code with labels as stored (not renumbered)."""
        return "".join(f"{role}{lab}{'+' if self._signs[lab] > 0 else '-'}"
                       for lab, role in self._endpoints)

    def __repr__(self):
        return f"GaussDiagram({self.code()!r})"


EMPTY = GaussDiagram((), {})


def from_chords(chord_list: Iterable[Chord]) -> GaussDiagram:
    """Build a validated diagram from chords given by endpoint positions."""
    chord_list = list(chord_list)
    size = 2 * len(chord_list)
    slots: dict[int, Endpoint] = {}
    signs: dict[int, int] = {}
    for ch in chord_list:
        if ch.label in signs:
            raise BadChordRoles(f"label {ch.label} used by two chords")
        if ch.over_pos == ch.under_pos:
            raise BadChordRoles(f"chord {ch.label} has both ends at {ch.over_pos}")
        if ch.sign not in (1, -1):
            raise BadChordRoles(f"chord {ch.label} has sign {ch.sign!r}")
        for p, role in ((ch.over_pos, OVER), (ch.under_pos, UNDER)):
            if p in slots:
                raise DuplicatePosition(f"position {p} claimed by chords {slots[p][0]} and {ch.label}")
            slots[p] = (ch.label, role)
        signs[ch.label] = ch.sign
    for p in slots:
        if not 0 <= p < size:
            raise PositionOutOfRange(f"position {p} outside [0, {size})")
    return GaussDiagram(tuple(slots[i] for i in range(size)), signs)


def linked(D: GaussDiagram, a: int, b: int) -> bool:
    """True iff exactly one end of ``a`` lies strictly between the ends of ``b``."""
    if a == b:
        raise SelfLinkQuery(f"chord {a} queried against itself")
    pa, pb = D.positions(a), D.positions(b)
    lo, hi = min(pb), max(pb)
    return sum(lo < p < hi for p in pa) == 1


def interlacement(D: GaussDiagram) -> tuple[list[int], list[list[bool]]]:
    """Labels (sorted) and the symmetric linking matrix indexed by them."""
    labels = sorted(D.labels)
    m = [[False] * len(labels) for _ in labels]
    for i, j in combinations(range(len(labels)), 2):
        m[i][j] = m[j][i] = linked(D, labels[i], labels[j])
    return labels, m


def linking_counts(D: GaussDiagram) -> dict[int, int]:
    """Number of chords linked with each chord."""
    labels, m = interlacement(D)
    return {lab: sum(row) for lab, row in zip(labels, m)}


def delete_chords(D: GaussDiagram, dead: Iterable[int]) -> GaussDiagram:
    dead = set(dead)
    for lab in dead:
        D._check(lab)
    if not dead:
        return D
    endpoints = tuple(e for e in D.endpoints if e[0] not in dead)
    return GaussDiagram(endpoints, {lab: s for lab, s in D.signs.items() if lab not in dead})


def canonical(D: GaussDiagram) -> CanonicalCode:
    """Lexicographically least relabeled token sequence over all rotations."""
    ends = D.endpoints
    size = len(ends)
    best = None
    for r in range(size):
        rank: dict[int, int] = {}
        seq = []
        for k in range(size):
            lab, role = ends[(r + k) % size]
            if lab not in rank:
                rank[lab] = len(rank) + 1
            seq.append((role, rank[lab], D._signs[lab]))
        seq = tuple(seq)
        if best is None or seq < best:
            best = seq
    return CanonicalCode(best or ())


def relabeled(D: GaussDiagram) -> GaussDiagram:
    """Same layout with labels renumbered 1, 2, ... by first occurrence."""
    rank = {lab: i + 1 for i, lab in enumerate(D.labels)}
    return GaussDiagram(tuple((rank[lab], role) for lab, role in D.endpoints),
                        {rank[lab]: s for lab, s in D.signs.items()})


def insert_blocks(D: GaussDiagram, blocks: Sequence[tuple[int, Sequence[Endpoint]]],
                  new_signs: Mapping[int, int]) -> GaussDiagram:
    """Insert endpoint blocks into gaps.

    Gap ``g`` is the core arc running from endpoint ``g`` to endpoint ``g+1``;
    the empty diagram has the single gap 0.  Blocks sharing a gap are placed
    in the order given.
    """
    size = len(D.endpoints)
    n_gaps = max(size, 1)
    after: dict[int, list[Endpoint]] = {}
    for gap, tokens in blocks:
        if not 0 <= gap < n_gaps:
            raise ArcOutOfRange(f"arc {gap} outside [0, {n_gaps})")
        after.setdefault(gap, []).extend(tokens)
    if size == 0:
        endpoints = list(after.get(0, []))
    else:
        endpoints = []
        for i, e in enumerate(D.endpoints):
            endpoints.append(e)
            endpoints.extend(after.get(i, []))
    signs = D.signs
    signs.update(new_signs)
    return GaussDiagram.from_endpoints(endpoints, signs)


def gap_count(D: GaussDiagram) -> int:
    return max(2 * D.n, 1)


def next_label(D: GaussDiagram) -> int:
    return max(D.labels, default=0) + 1


def connected_sum(D1: GaussDiagram, D2: GaussDiagram, arc: int) -> GaussDiagram:
    """Splice ``D2`` as a contiguous block into arc ``arc`` of ``D1``."""
    shift = max(D1.labels, default=0)
    block = [(lab + shift, role) for lab, role in D2.endpoints]
    return insert_blocks(D1, [(arc, block)], {lab + shift: s for lab, s in D2.signs.items()})


def is_smaller(D1: GaussDiagram, D2: GaussDiagram, node_limit: int = 200_000) -> bool:
    """Whether ``D1`` is obtained from ``D2`` by deleting some (possibly no) chords."""
    k = D2.n - D1.n
    if k < 0:
        return False
    target = D1.canonical()
    # Deletion keeps signs, so D1's sign counts must fit inside D2's.
    s1, s2 = list(D1.signs.values()), list(D2.signs.values())
    if s1.count(1) > s2.count(1) or s1.count(-1) > s2.count(-1):
        return False
    nodes = 0
    for dead in combinations(D2.labels, k):
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"subset search exceeded {node_limit} nodes")
        if canonical(delete_chords(D2, dead)) == target:
            return True
    return False
