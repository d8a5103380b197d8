"""Deterministic random diagrams and moves, and the property checks run on them.

A case is fully determined by ``(seed_base, index)``: the RNG is seeded with
the string ``f"{seed_base}:{index}"``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .codec import serialize
from .diagram import (
    OVER,
    UNDER,
    GaussDiagram,
    delete_chords,
    gap_count,
    insert_blocks,
    is_smaller,
    next_label,
)
from .invariants import bridge_count, f_polynomial, kauffman_bracket, odd_writhe
from .moves import (
    R1_ADD,
    R1_REMOVE,
    R2_ADD,
    R2_REMOVE,
    R3,
    R3_TABLE,
    MoveDescriptor,
    apply_move,
    enumerate_moves,
    inverse_move,
)
from .oracles import naive_bracket, naive_faces
from .parity import GAUSSIAN, GROUP, check_parity_axioms, parity_group
from .projection import classicalize, project_gaussian, project_group
from .surface import boundary_cycles, genus


def random_diagram(rng: random.Random, max_chords: int) -> GaussDiagram:
    """Uniform pairing of 2n points with random roles and signs, n in [0, max_chords]."""
    n = rng.randint(0, max(max_chords, 0))
    points = list(range(2 * n))
    rng.shuffle(points)
    ends: list = [None] * (2 * n)
    signs = {}
    for k in range(n):
        p, q = points[2 * k], points[2 * k + 1]
        if rng.random() < 0.5:
            p, q = q, p
        ends[p], ends[q] = (k + 1, OVER), (k + 1, UNDER)
        signs[k + 1] = rng.choice((1, -1))
    return GaussDiagram(ends, signs)


def plant_triangle(rng: random.Random, D: GaussDiagram) -> GaussDiagram:
    """Insert three chords forming an admissible R3 triangle at random arcs."""
    t_first, m_first, b_first, s_tm, s_tb, s_mb = rng.choice(sorted(R3_TABLE))
    tm = next_label(D)
    tb, mb = tm + 1, tm + 2
    top = [(tm, OVER), (tb, OVER)]
    mid = [(tm, UNDER), (mb, OVER)]
    bot = [(tb, UNDER), (mb, UNDER)]
    segs = [s if first else s[::-1] for s, first in ((top, t_first), (mid, m_first), (bot, b_first))]
    rng.shuffle(segs)
    blocks = [(rng.randrange(gap_count(D)), s) for s in segs]
    return insert_blocks(D, blocks, {tm: s_tm, tb: s_tb, mb: s_mb})


ROOM = {None: 0, R1_REMOVE: 1, R2_REMOVE: 2, R3: 3}


def plant(rng: random.Random, D: GaussDiagram, kind) -> GaussDiagram:
    if kind == R3:
        return plant_triangle(rng, D)
    if kind in (R1_REMOVE, R2_REMOVE):
        adds = [m for m in enumerate_moves(D, True) if m.kind == (R1_ADD if kind == R1_REMOVE else R2_ADD)]
        return apply_move(D, rng.choice(adds))
    return D


def random_move(rng: random.Random, D: GaussDiagram, max_chords: int, prefer=None):
    """Pick a kind uniformly among those available, then a site uniformly.

    ``prefer`` (if available) is chosen with probability 1/2.  Increasing
    moves are offered only while the result stays within ``max_chords``.
    """
    by_kind: dict[str, list[MoveDescriptor]] = {}
    for m in enumerate_moves(D, include_increasing=D.n + 1 <= max_chords):
        if m.kind == R2_ADD and D.n + 2 > max_chords:
            continue
        by_kind.setdefault(m.kind, []).append(m)
    if not by_kind:
        return None
    if prefer in by_kind and rng.random() < 0.5:
        kind = prefer
    else:
        kind = rng.choice(sorted(by_kind))
    return rng.choice(by_kind[kind])


@dataclass
class Case:
    seed: str
    D: GaussDiagram
    moves: list[tuple[GaussDiagram, MoveDescriptor, GaussDiagram]]


def make_case(seed_base: int, index: int, max_chords: int, move_depth: int = 1) -> Case:
    seed = f"{seed_base}:{index}"
    rng = random.Random(seed)
    kind = rng.choice([None, R1_REMOVE, R2_REMOVE, R3])
    if ROOM[kind] > max_chords:
        kind = None
    D = plant(rng, random_diagram(rng, max_chords - ROOM[kind]), kind)
    moves = []
    cur = D
    for _ in range(move_depth):
        m = random_move(rng, cur, max_chords, prefer=kind)
        if m is None:
            break
        nxt = apply_move(cur, m)
        moves.append((cur, m, nxt))
        cur, kind = nxt, None
    return Case(seed, D, moves)


# -- property checks --------------------------------------------------------
# Each takes a Case and returns a list of human-readable violations.

def check_parity_axioms_gaussian(case):
    out = []
    for D, m, D2 in case.moves:
        rep = check_parity_axioms(D, m, D2, GAUSSIAN)
        if not rep.ok:
            out.append(f"{m}: {'; '.join(rep.details)}")
    return out


def check_parity_axioms_group(case):
    out = []
    for D, m, D2 in case.moves:
        rep = check_parity_axioms(D, m, D2, GROUP)
        if not rep.ok:
            out.append(f"{m}: {'; '.join(rep.details)}")
    return out


def check_dimension(case):
    D = case.D
    g, dim = genus(D), parity_group(D).dim
    if dim not in (2 * g - 1, 2 * g) or (g == 0 and dim != 0):
        return [f"dim {dim} with genus {g}"]
    return []


def check_classicalize(case):
    D = case.D
    final = classicalize(D).final
    out = []
    if genus(final) != 0:
        out.append(f"final {serialize(final)} has genus {genus(final)}")
    if not is_smaller(final, D):
        out.append(f"final {serialize(final)} is not smaller than the input")
    G = parity_group(D)
    fixed = genus(D) == 0 and all(G.is_zero([c]) for c in D.labels)
    if (final == D) != fixed:
        out.append(f"final == input is {final == D} but genus-0-and-trivial is {fixed}")
    if classicalize(final).final != final:
        out.append("final is not a fixed point")
    return out


def check_monotone(case):
    D = case.D
    out = []
    for name, E in (("gaussian", project_gaussian(D)), ("group", project_group(D)),
                    ("classical", classicalize(D).final)):
        if E.n > D.n:
            out.append(f"{name}: crossings {D.n} -> {E.n}")
        if bridge_count(E) > bridge_count(D):
            out.append(f"{name}: bridges {bridge_count(D)} -> {bridge_count(E)}")
    return out


def check_well_defined(case):
    out = []
    for D, m, D2 in case.moves:
        P, P2 = project_gaussian(D), project_gaussian(D2)
        if f_polynomial(P) != f_polynomial(P2):
            out.append(f"{m}: f-polynomial of projections differ")
        if odd_writhe(P) != odd_writhe(P2):
            out.append(f"{m}: odd writhe of projections differ")
    return out


def check_surface_oracle(case):
    D = case.D
    fast = sorted(sorted(c.incidence.items()) for c in boundary_cycles(D))
    slow = sorted(sorted(c.items()) for c in naive_faces(D))
    if fast != slow:
        return [f"face tracers disagree: {len(fast)} vs {len(slow)} faces"]
    if sum(sum(c.incidence.values()) for c in boundary_cycles(D)) != 4 * D.n:
        return ["corner visits do not total 4n"]
    return []


def check_move_invariance(case):
    out = []
    for D, m, D2 in case.moves:
        if f_polynomial(D) != f_polynomial(D2):
            out.append(f"{m}: f-polynomial changed")
        if odd_writhe(D) != odd_writhe(D2):
            out.append(f"{m}: odd writhe changed")
        dg = genus(D2) - genus(D)
        if m.kind in (R1_ADD, R1_REMOVE, R3) and dg:
            out.append(f"{m}: genus changed by {dg}")
        if abs(dg) > 1:
            out.append(f"{m}: genus changed by {dg}")
    return out


def check_inverse(case):
    out = []
    for D, m, D2 in case.moves:
        back = apply_move(D2, inverse_move(D, m))
        if back != D:
            out.append(f"{m}: inverse move gives {serialize(back)}")
    return out


def check_classical_parity(case):
    D = case.D
    if genus(D) != 0:
        return []
    out = []
    if odd_writhe(D) != 0:
        out.append(f"genus-0 diagram has odd writhe {odd_writhe(D)}")
    from .parity import gaussian_parity
    odd = [c for c, p in gaussian_parity(D).items() if p]
    if odd:
        out.append(f"genus-0 diagram has odd chords {odd}")
    return out


def check_bracket_oracle(case):
    D = case.D
    if D.n > 8:
        return []
    if kauffman_bracket(D).coefficients != naive_bracket(D):
        return ["bracket disagrees with the naive state sum"]
    return []


def check_deletion_bridges(case):
    D = case.D
    rng = random.Random(case.seed + ":del")
    dead = [c for c in D.labels if rng.random() < 0.5]
    E = delete_chords(D, dead)
    if bridge_count(E) > bridge_count(D):
        return [f"deleting {dead} raised bridges {bridge_count(D)} -> {bridge_count(E)}"]
    return []


CHECKS = {
    "parity-axioms": check_parity_axioms_gaussian,
    "group-axioms": check_parity_axioms_group,
    "dimension": check_dimension,
    "classicalize": check_classicalize,
    "monotone": check_monotone,
    "well-defined": check_well_defined,
    "surface-oracle": check_surface_oracle,
    "move-invariance": check_move_invariance,
    "inverse": check_inverse,
    "classical-parity": check_classical_parity,
    "bracket-oracle": check_bracket_oracle,
    "deletion-bridges": check_deletion_bridges,
}


@dataclass(frozen=True)
class FuzzConfig:
    seeds: int = 100
    max_chords: int = 8
    move_depth: int = 1
    checks: tuple[str, ...] = tuple(CHECKS)
    seed_base: int = 0

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.seeds < 0 or self.max_chords < 0 or self.move_depth < 0:
            raise ValueError("seeds, max_chords and move_depth must be nonnegative")


@dataclass
class Failure:
    seed: str
    code: str
    moves: list[str]
    check: str
    detail: str

    def __str__(self):
        moves = ", ".join(self.moves) or "-"
        return f"seed {self.seed} code {self.code!r} moves [{moves}] {self.check}: {self.detail}"


@dataclass
class FuzzReport:
    cases: int = 0
    applications: int = 0
    kinds: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_case(case: Case, checks) -> list[Failure]:
    out = []
    for name in checks:
        for detail in CHECKS[name](case):
            out.append(Failure(case.seed, serialize(case.D), [str(m) for _, m, _ in case.moves], name, detail))
    return out


def run(config: FuzzConfig) -> FuzzReport:
    report = FuzzReport()
    for i in range(config.seeds):
        case = make_case(config.seed_base, i, config.max_chords, config.move_depth)
        report.cases += 1
        report.applications += len(case.moves)
        for _, m, _ in case.moves:
            report.kinds[m.kind] = report.kinds.get(m.kind, 0) + 1
        report.failures.extend(run_case(case, config.checks))
    return report
