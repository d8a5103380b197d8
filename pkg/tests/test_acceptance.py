"""The ten acceptance criteria, each printed as one PASS/FAIL line in the summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

from functools import lru_cache

import pytest

from gaussforge import (
    EMPTY, LaurentPolynomial, bridge_count, classicalize, f_polynomial, gaussian_parity, genus,
    is_smaller, odd_writhe, parity_group, project_gaussian, project_group,
)
from gaussforge.fuzz import make_case
from gaussforge.moves import R1_ADD, R1_REMOVE, R3
from gaussforge.oracles import naive_bracket, naive_faces
from gaussforge.parity import GAUSSIAN, check_parity_axioms
from gaussforge.surface import boundary_cycles, surface_data

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance

TREFOIL_F = LaurentPolynomial({-4: 1, -12: 1, -16: -1})


@lru_cache(maxsize=None)
def corpus(seed_base, count, max_chords, depth):
    return tuple(make_case(seed_base, i, max_chords, depth) for i in range(count))


def diagrams_n10():
    return [c.D for c in corpus(101, 1200, 10, 1)]


def record(number, name, violations, detail=""):
    ok = not violations
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {name}"
    if detail:
        line += f" ({detail})"
    if not ok:
        line += f": {len(violations)} violations, first: {violations[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_01_nonidempotent_example(NI4, VT):
    bad = []
    if project_gaussian(NI4) != VT:
        bad.append("project_gaussian(NI4) != VT")
    if project_gaussian(VT) != EMPTY:
        bad.append("project_gaussian(VT) is not empty")
    record(1, "four-chord example projects to VT, then to the unknot", bad)


def test_02_gaussian_axioms():
    pairs = [(D, m, D2) for c in corpus(202, 1100, 10, 1) for D, m, D2 in c.moves]
    bad = []
    for D, m, D2 in pairs:
        assert max(D.n, D2.n) <= 10
        rep = check_parity_axioms(D, m, D2, GAUSSIAN)
        if not rep.ok:
            bad.append(f"{D.code()} {m}: {rep.details}")
    assert len(pairs) >= 1000
    record(2, "Gaussian parity axioms", bad, f"{len(pairs)} pairs, n <= 10")


def test_03_dimension_identity(T3, VT):
    ds = diagrams_n10()
    bad = []
    for D in ds:
        g, dim = genus(D), parity_group(D).dim
        if dim not in (2 * g - 1, 2 * g) or (g == 0 and dim != 0):
            bad.append(f"{D.code()}: genus {g} dim {dim}")
    if parity_group(T3).dim != 0 or parity_group(VT).dim != 1:
        bad.append("fixture dimensions")
    assert len(ds) >= 1000
    record(3, "parity-group dimension is 2g-1 or 2g", bad, f"{len(ds)} diagrams")


def test_04_classicalize():
    ds = diagrams_n10()
    bad = []
    for D in ds:
        final = classicalize(D).final
        G = parity_group(D)
        fixed = genus(D) == 0 and all(G.is_zero([c]) for c in D.labels)
        if genus(final) != 0:
            bad.append(f"{D.code()}: final genus {genus(final)}")
        elif not is_smaller(final, D):
            bad.append(f"{D.code()}: final not smaller")
        elif (final == D) != fixed:
            bad.append(f"{D.code()}: fixed-point condition")
    record(4, "classicalize: genus 0, smaller, identity exactly when classical", bad, f"{len(ds)} diagrams")


def test_05_black_box_trefoil(T3, INS):
    bad = []
    oracle = LaurentPolynomial(naive_bracket(T3)) * LaurentPolynomial({-3 * T3.writhe(): (-1) ** T3.writhe()})
    if oracle != TREFOIL_F:
        bad.append(f"oracle gives {oracle}")
    if f_polynomial(T3) != TREFOIL_F:
        bad.append(f"f(T3) = {f_polynomial(T3)}")
    if project_group(INS) != T3:
        bad.append("project_group(INS) != T3")
    if f_polynomial(classicalize(INS).final) != TREFOIL_F:
        bad.append("f of classicalized INS")
    if genus(INS) != 1:
        bad.append("INS is not virtual")
    record(5, "trefoil with an inserted virtual pair recovers the trefoil", bad, str(TREFOIL_F))


def test_06_monotonicity():
    ds = diagrams_n10()
    bad = []
    for D in ds:
        for name, E in (("gaussian", project_gaussian(D)), ("group", project_group(D)),
                        ("classical", classicalize(D).final)):
            if E.n > D.n or bridge_count(E) > bridge_count(D):
                bad.append(f"{D.code()} {name}")
    record(6, "crossings and bridges never increase under projection", bad, f"{len(ds)} diagrams")


def test_07_well_defined():
    pairs = [(D, m, D2) for c in corpus(707, 600, 8, 1) for D, m, D2 in c.moves]
    bad = []
    for D, m, D2 in pairs:
        P, P2 = project_gaussian(D), project_gaussian(D2)
        if f_polynomial(P) != f_polynomial(P2) or odd_writhe(P) != odd_writhe(P2):
            bad.append(f"{D.code()} {m}")
    assert len(pairs) >= 500
    record(7, "Gaussian projection commutes with moves on invariants", bad, f"{len(pairs)} pairs, n <= 8")


def test_08_surface_oracle(T3, VT):
    ds = [c.D for c in corpus(808, 1000, 8, 0)]
    bad = []
    for D in ds:
        fast = sorted(sorted(c.incidence.items()) for c in boundary_cycles(D))
        slow = sorted(sorted(c.items()) for c in naive_faces(D))
        if fast != slow:
            bad.append(D.code())
    for D, want in ((T3, (5, 0)), (VT, (2, 1))):
        data = surface_data(D)
        if (data.F, data.genus) != want:
            bad.append(f"{D.code()}: {(data.F, data.genus)}")
    if genus(EMPTY) != 0:
        bad.append("empty genus")
    record(8, "face tracing agrees with the naive walker", bad, f"{len(ds)} diagrams, n <= 8")


def test_09_move_soundness():
    cases = corpus(909, 700, 9, 2)
    apps = [(D, m, D2) for c in cases for D, m, D2 in c.moves]
    bad = []
    kinds = {}
    for D, m, D2 in apps:
        kinds[m.kind] = kinds.get(m.kind, 0) + 1
        if f_polynomial(D) != f_polynomial(D2):
            bad.append(f"{D.code()} {m}: f changed")
        if m.kind in (R1_ADD, R1_REMOVE, R3) and genus(D) != genus(D2):
            bad.append(f"{D.code()} {m}: genus changed")
    assert len(apps) >= 1000
    assert kinds.get(R3, 0) >= 100
    detail = f"{len(apps)} applications, " + ", ".join(f"{k}={v}" for k, v in sorted(kinds.items()))
    record(9, "f-polynomial invariant under every move", bad, detail)


def test_10_classical_parity():
    ds = diagrams_n10() + [c.D for c in corpus(808, 1000, 8, 0)]
    planar = [D for D in ds if genus(D) == 0]
    bad = []
    for D in planar:
        if any(gaussian_parity(D).values()) or odd_writhe(D) != 0:
            bad.append(D.code())
    assert len(planar) >= 100
    record(10, "genus-0 diagrams have only even chords", bad, f"{len(planar)} genus-0 diagrams")
