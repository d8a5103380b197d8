"""Gaussian parity, the universal parity group over GF(2), and axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf2
from .diagram import GaussDiagram, linking_counts
from .errors import CorrespondenceMismatch, LabelOutOfRange
from .surface import boundary_cycles, genus

GAUSSIAN = "gaussian"
GROUP = "group"


def gaussian_parity(D: GaussDiagram) -> dict[int, int]:
    """Chord -> number of chords linked with it, mod 2."""
    return {lab: c % 2 for lab, c in linking_counts(D).items()}


@dataclass(frozen=True)
class ParityGroup:
    """Z/2-vector space on the crossings modulo pasted-cycle relations.

    ``labels[j]`` is the crossing behind bit ``j`` of every relation row.
    """

    labels: tuple[int, ...]
    relations: tuple[int, ...]
    basis: tuple[int, ...] = field(repr=False)

    @property
    def generator_count(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return self.generator_count - self.rank

    def vector(self, chords) -> int:
        index = {lab: j for j, lab in enumerate(self.labels)}
        v = 0
        for c in chords:
            if c not in index:
                raise LabelOutOfRange(f"chord {c} is not a generator")
            v ^= 1 << index[c]
        return v

    def is_zero(self, chords) -> bool:
        """Whether the sum of the given crossing classes vanishes."""
        return gf2.in_row_space(self.vector(chords), list(self.basis))

    def relation_matrix(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(len(self.labels))] for row in self.relations]


def parity_group(D: GaussDiagram) -> ParityGroup:
    labels = tuple(sorted(D.labels))
    index = {lab: j for j, lab in enumerate(labels)}
    rows = []
    for face in boundary_cycles(D):
        row = 0
        for lab, visits in face.incidence.items():
            if visits % 2:
                row |= 1 << index[lab]
        rows.append(row)
    return ParityGroup(labels, tuple(rows), tuple(gf2.reduce_rows(rows)))


def crossing_class_trivial(G: ParityGroup, c: int) -> bool:
    return G.is_zero([c])


def group_parity(D: GaussDiagram, G: ParityGroup | None = None) -> dict[int, int]:
    """Weak parity: 0 for crossings with trivial class, 1 otherwise."""
    G = G or parity_group(D)
    return {lab: 0 if G.is_zero([lab]) else 1 for lab in G.labels}


# -- axiom checks -----------------------------------------------------------

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


@dataclass
class AxiomReport:
    """Outcome per axiom: spectators, r1, r2, r3 (``pass``/``fail``/``not-applicable``)."""

    parity: str
    kind: str
    outcomes: dict[str, str]
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return FAIL not in self.outcomes.values()


def check_parity_axioms(D: GaussDiagram, m, D2: GaussDiagram, p: str = GAUSSIAN) -> AxiomReport:
    """Check the parity axioms for the move ``m`` taking ``D`` to ``D2``.

    Strict checks for Gaussian parity; for the group parity the weak-sense
    properties are checked, and only across genus-preserving moves.
    """
    from .moves import R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3

    corr = dict(m.correspondence)
    for a, b in corr.items():
        if a not in D or b not in D2:
            raise CorrespondenceMismatch(f"correspondence {a}->{b} does not match the diagrams")

    outcomes = {"spectators": NOT_APPLICABLE, "r1": NOT_APPLICABLE,
                "r2": NOT_APPLICABLE, "r3": NOT_APPLICABLE}
    report = AxiomReport(p, m.kind, outcomes)

    if p == GROUP and genus(D) != genus(D2):
        report.details.append("genus changes across the move")
        return report

    if p == GAUSSIAN:
        par1, par2 = gaussian_parity(D), gaussian_parity(D2)
        G1 = G2 = None
    else:
        G1, G2 = parity_group(D), parity_group(D2)
        par1, par2 = group_parity(D, G1), group_parity(D2, G2)

    # Chords created or destroyed by the move, on the side where they exist.
    if m.kind in (R1_ADD, R2_ADD):
        active, par, G = set(D2.labels) - set(corr.values()), par2, G2
    elif m.kind in (R1_REMOVE, R2_REMOVE):
        active, par, G = set(D.labels) - set(corr), par1, G1
    else:
        active, par, G = set(m.site), par1, G1

    moving = set(m.site) if m.kind == R3 else set()
    bad = [a for a, b in corr.items() if a not in moving and par1[a] != par2[b]]
    if m.kind == R3:
        bad += [a for a in moving if par1[a] != par2[corr[a]]]
    outcomes["spectators"] = FAIL if bad else PASS
    if bad:
        report.details.append(f"parity changed for {sorted(bad)}")

    def record(key, ok, why):
        outcomes[key] = PASS if ok else FAIL
        if not ok:
            report.details.append(why)

    if m.kind in (R1_ADD, R1_REMOVE):
        (c,) = active
        record("r1", par[c] == 0, f"R1 chord {c} is odd")
    elif m.kind in (R2_ADD, R2_REMOVE):
        a, b = sorted(active)
        ok = par[a] == par[b] if p == GAUSSIAN else G.is_zero([a, b])
        record("r2", ok, f"R2 chords {a},{b} have different parity")
    else:
        trio = list(active)
        if p == GAUSSIAN:
            ok = sum(par[c] for c in trio) % 2 == 0
        else:
            ok = G1.is_zero(trio) and G2.is_zero([corr[c] for c in trio])
            if sum(par[c] for c in trio) == 1:
                ok = False
        record("r3", ok, f"R3 chords {sorted(trio)} violate the sum condition")
    return report
