"""Band-presentation surface of a Gauss diagram.

Crossings become vertices of a 4-valent ribbon graph whose edges are the
2n arcs of the core circle.  Arc ``i`` runs from endpoint ``i`` to endpoint
``i+1``; its two ends (darts) are ``2i`` (the start, leaving endpoint ``i``)
and ``2i+1`` (the end, entering endpoint ``i+1``).  Faces of the ribbon graph
are the pasted cycles; capping them with discs gives the underlying surface.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .diagram import GaussDiagram
from .errors import InternalParityError

# Dart roles at a crossing, in counterclockwise order of the planar picture.
ROTATION_POSITIVE = ("over_in", "under_in", "over_out", "under_out")
ROTATION_NEGATIVE = ("over_in", "under_out", "over_out", "under_in")


def arc_ends(D: GaussDiagram) -> dict[int, dict[str, int]]:
    """Darts at each crossing keyed by role (over_in, over_out, under_in, under_out)."""
    size = len(D.endpoints)
    out = {}
    for ch in D.chords:
        p, q = ch.over_pos, ch.under_pos
        out[ch.label] = {
            "over_in": 2 * ((p - 1) % size) + 1,
            "over_out": 2 * p,
            "under_in": 2 * ((q - 1) % size) + 1,
            "under_out": 2 * q,
        }
    return out


def rotation_system(D: GaussDiagram) -> dict[int, tuple[int, int, int, int]]:
    """Counterclockwise dart order at every crossing, starting at over-in."""
    ends = arc_ends(D)
    rot = {}
    for lab, darts in ends.items():
        order = ROTATION_POSITIVE if D.sign(lab) > 0 else ROTATION_NEGATIVE
        rot[lab] = tuple(darts[r] for r in order)
    return rot


def dart_vertex(D: GaussDiagram) -> list[int]:
    """Crossing label owning each dart."""
    vertex = [0] * (2 * len(D.endpoints))
    for lab, darts in arc_ends(D).items():
        for d in darts.values():
            vertex[d] = lab
    return vertex


@dataclass(frozen=True)
class PastedCycle:
    """One boundary component of the banded surface.

    ``cycle`` lists the traversed arc sides as ``(arc, direction)`` with
    direction +1 along the core orientation; ``incidence`` counts corner
    visits per crossing.
    """

    cycle: tuple[tuple[int, int], ...]
    incidence: dict[int, int] = field(hash=False)

    def corners(self) -> int:
        return sum(self.incidence.values())


@dataclass(frozen=True)
class SurfaceData:
    faces: tuple[PastedCycle, ...]
    n: int

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def genus(self) -> int:
        twice = 2 - self.F + self.n
        if twice % 2:
            raise InternalParityError(f"F={self.F} and n={self.n} have different parity")
        return twice // 2


def boundary_cycles(D: GaussDiagram) -> list[PastedCycle]:
    """Orbits of ``rotation-successor o arc-involution`` on the 4n darts."""
    if D.n == 0:
        # Two sides of the band around a bare circle.
        return [PastedCycle((), {}), PastedCycle((), {})]
    succ = {}
    for rot in rotation_system(D).values():
        for k in range(4):
            succ[rot[k]] = rot[(k + 1) % 4]
    vertex = dart_vertex(D)
    seen = [False] * len(vertex)
    faces = []
    for start in range(len(vertex)):
        if seen[start]:
            continue
        cycle, visits = [], Counter()
        h = start
        while not seen[h]:
            seen[h] = True
            cycle.append((h // 2, 1 if h % 2 == 0 else -1))
            far = h ^ 1
            visits[vertex[far]] += 1
            h = succ[far]
        faces.append(PastedCycle(tuple(cycle), dict(visits)))
    return faces


def surface_data(D: GaussDiagram) -> SurfaceData:
    return SurfaceData(tuple(boundary_cycles(D)), D.n)


def genus(D: GaussDiagram) -> int:
    return surface_data(D).genus


def is_classical_diagram(D: GaussDiagram) -> bool:
    return genus(D) == 0
