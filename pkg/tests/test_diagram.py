from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gaussforge import EMPTY, Chord, canonical, connected_sum, delete_chords, from_chords, interlacement
from gaussforge import is_smaller, linked, parse
from gaussforge.diagram import relabeled
from gaussforge.errors import (
    ArcOutOfRange,
    BadChordRoles,
    BudgetExceeded,
    DuplicatePosition,
    PositionOutOfRange,
    SelfLinkQuery,
    UnknownLabel,
)

from conftest import INS_CODE, NI4_LABELS
from strategies import diagrams


def brute_linked(D, a, b):
    # Walk the circle once and count how often we cross b's endpoints between a's ends.
    pa = sorted(D.positions(a))
    pb = set(D.positions(b))
    inside = sum(1 for p in range(pa[0] + 1, pa[1]) if p in pb)
    return inside == 1


def test_from_chords_empty():
    D = from_chords([])
    assert D.n == 0 and D == EMPTY


def test_from_chords_trefoil_round_trips(T3):
    D = from_chords([Chord(1, 0, 3, 1), Chord(2, 4, 1, 1), Chord(3, 2, 5, 1)])
    assert D.same_layout(T3)
    assert parse(D.code()).same_layout(D)


@pytest.mark.parametrize("chords, err", [
    ([Chord(1, 0, 1, 1), Chord(2, 0, 2, 1)], DuplicatePosition),
    ([Chord(1, 0, 2, 1)], PositionOutOfRange),
    ([Chord(1, 0, 0, 1)], BadChordRoles),
    ([Chord(1, 0, 1, 1), Chord(1, 2, 3, 1)], BadChordRoles),
    ([Chord(1, 0, 1, 0)], BadChordRoles),
])
def test_from_chords_rejects(chords, err):
    with pytest.raises(err):
        from_chords(chords)


def test_linked_examples(T3, VT, NI4):
    assert linked(T3, 1, 2)
    assert linked(VT, 1, 2)
    L = NI4_LABELS
    assert not linked(NI4, L["c"], L["d"])


def test_linked_errors(T3):
    with pytest.raises(SelfLinkQuery):
        linked(T3, 1, 1)
    with pytest.raises(UnknownLabel):
        linked(T3, 1, 9)


def test_interlacement(T3, NI4):
    assert interlacement(EMPTY) == ([], [])
    labels, m = interlacement(T3)
    assert all(m[i][j] == (i != j) for i in range(3) for j in range(3))
    labels, m = interlacement(NI4)
    L = NI4_LABELS
    edges = {frozenset((labels[i], labels[j])) for i in range(4) for j in range(4) if m[i][j]}
    assert edges == {frozenset((L["a"], L["b"])), frozenset((L["a"], L["c"])), frozenset((L["b"], L["d"]))}


def test_delete_chords(T3, VT, NI4):
    assert delete_chords(T3, set()).same_layout(T3)
    assert delete_chords(NI4, {NI4_LABELS["c"], NI4_LABELS["d"]}) == VT
    assert delete_chords(VT, {1, 2}) == EMPTY
    with pytest.raises(UnknownLabel):
        delete_chords(VT, {3})


def test_canonical_examples():
    assert canonical(EMPTY).tokens == ()
    assert canonical(parse("O1+U1+")) == canonical(parse("U1+O1+"))
    assert canonical(parse("O7-U7-")) == canonical(parse("O1-U1-"))
    # Signs and roles are not quotiented out.
    assert parse("O1+U1+") != parse("O1-U1-")


def test_canonical_keeps_core_orientation():
    D = parse("O1+O2-U1+U2-")
    reversed_core = type(D)(D.endpoints[::-1], D.signs)
    assert reversed_core != D
    # VT happens to be reversal-symmetric up to rotation.
    vt = parse("O1+O2+U1+U2+")
    assert type(vt)(vt.endpoints[::-1], vt.signs) == vt


def brute_canonical(D):
    size = len(D.endpoints)
    rotations = []
    for r in range(size):
        seq = [D.endpoints[(r + k) % size] for k in range(size)]
        rank = {}
        for lab, _ in seq:
            rank.setdefault(lab, len(rank) + 1)
        rotations.append(tuple((role, rank[lab], D.sign(lab)) for lab, role in seq))
    return min(rotations, default=())


@given(diagrams())
def test_canonical_matches_brute_force(D):
    assert canonical(D).tokens == brute_canonical(D)


@given(diagrams(), st.integers(0, 20))
def test_canonical_invariant_under_rotation_and_relabel(D, shift):
    size = len(D.endpoints)
    if size:
        shift %= size
    ends = D.endpoints[shift:] + D.endpoints[:shift]
    rot = type(D)([(lab * 7 + 3, role) for lab, role in ends], {lab * 7 + 3: s for lab, s in D.signs.items()})
    assert canonical(rot) == canonical(D)


@given(diagrams())
def test_canonical_idempotent(D):
    c = canonical(D)
    assert canonical(c.to_diagram()) == c


@given(diagrams())
def test_linked_symmetric_and_matches_brute(D):
    for a, b in combinations(D.labels, 2):
        assert linked(D, a, b) == linked(D, b, a) == brute_linked(D, a, b)


@given(diagrams(), st.data())
def test_delete_composes(D, data):
    labels = D.labels
    S = set(data.draw(st.lists(st.sampled_from(labels), unique=True))) if labels else set()
    rest = [c for c in labels if c not in S]
    T = set(data.draw(st.lists(st.sampled_from(rest), unique=True))) if rest else set()
    assert delete_chords(D, S | T) == delete_chords(delete_chords(D, S), T)


def test_is_smaller_examples(T3, VT, NI4):
    assert is_smaller(EMPTY, VT)
    assert is_smaller(VT, NI4)
    assert not is_smaller(T3, VT)
    assert is_smaller(T3, T3)


def test_is_smaller_budget(NI4):
    with pytest.raises(BudgetExceeded):
        is_smaller(parse("O1+U2+O3+U1+O2+U3+"), NI4, node_limit=1)


@settings(max_examples=40)
@given(diagrams(max_chords=6), st.data())
def test_is_smaller_reflexive_transitive(D, data):
    assert is_smaller(D, D)
    assert is_smaller(EMPTY, D)
    labels = D.labels
    S = set(data.draw(st.lists(st.sampled_from(labels), unique=True))) if labels else set()
    E = delete_chords(D, S)
    rest = E.labels
    T = set(data.draw(st.lists(st.sampled_from(rest), unique=True))) if rest else set()
    F = delete_chords(E, T)
    assert is_smaller(E, D) and is_smaller(F, E) and is_smaller(F, D)


def test_connected_sum_examples(T3, VT):
    assert connected_sum(EMPTY, T3, 0) == T3
    ins = connected_sum(T3, VT, 5)
    assert relabeled(ins).code() == INS_CODE
    with pytest.raises(ArcOutOfRange):
        connected_sum(T3, VT, 6)
    with pytest.raises(ArcOutOfRange):
        connected_sum(EMPTY, VT, 1)


@given(diagrams(max_chords=4), diagrams(max_chords=4), st.integers(0, 100))
def test_connected_sum_keeps_interlacement(D1, D2, arc):
    arc %= max(2 * D1.n, 1)
    S = connected_sum(D1, D2, arc)
    shift = max(D1.labels, default=0)
    assert S.n == D1.n + D2.n
    for a, b in combinations(D2.labels, 2):
        assert linked(S, a + shift, b + shift) == linked(D2, a, b)
    for a, b in combinations(D1.labels, 2):
        assert linked(S, a, b) == linked(D1, a, b)
    for a in D1.labels:
        for b in D2.labels:
            assert not linked(S, a, b + shift)
