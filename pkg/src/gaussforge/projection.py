"""Projections: delete the odd chords of a parity, optionally to a fixed point."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import GaussDiagram, delete_chords
from .parity import GAUSSIAN, GROUP, gaussian_parity, group_parity


@dataclass(frozen=True)
class Stage:
    diagram: GaussDiagram
    parity: str
    deleted: tuple[int, ...]


@dataclass(frozen=True)
class ProjectionTrace:
    """``stages[k].diagram`` is the input to round ``k``; ``deleted`` its odd chords.

    The last stage carries the output diagram and no deletions.
    """

    stages: tuple[Stage, ...] = field(default=())

    @property
    def final(self) -> GaussDiagram:
        return self.stages[-1].diagram

    def diagrams(self) -> list[GaussDiagram]:
        return [s.diagram for s in self.stages]


def odd_gaussian(D: GaussDiagram) -> list[int]:
    return sorted(c for c, p in gaussian_parity(D).items() if p)


def odd_group(D: GaussDiagram) -> list[int]:
    return sorted(c for c, p in group_parity(D).items() if p)


def project_gaussian(D: GaussDiagram) -> GaussDiagram:
    return delete_chords(D, odd_gaussian(D))


def project_group(D: GaussDiagram) -> GaussDiagram:
    """Make every crossing with a nonzero parity-group class virtual."""
    return delete_chords(D, odd_group(D))


def _iterate(D: GaussDiagram, odd, kind: str) -> ProjectionTrace:
    stages = []
    while True:
        dead = tuple(odd(D))
        stages.append(Stage(D, kind, dead))
        if not dead:
            return ProjectionTrace(tuple(stages))
        D = delete_chords(D, dead)


def project_gaussian_stable(D: GaussDiagram) -> ProjectionTrace:
    return _iterate(D, odd_gaussian, GAUSSIAN)


def classicalize(D: GaussDiagram) -> ProjectionTrace:
    """Iterate the parity-group projection until every class is trivial.

    The final diagram has a trivial parity group and hence genus 0.
    """
    return _iterate(D, odd_group, GROUP)


METHODS = {
    "gaussian": lambda D: ProjectionTrace((Stage(D, GAUSSIAN, tuple(odd_gaussian(D))),
                                           Stage(project_gaussian(D), GAUSSIAN, ()))),
    "gaussian-stable": project_gaussian_stable,
    "group": lambda D: ProjectionTrace((Stage(D, GROUP, tuple(odd_group(D))),
                                        Stage(project_group(D), GROUP, ()))),
    "classical": classicalize,
}


def project(D: GaussDiagram, method: str) -> ProjectionTrace:
    """Run a projection by its CLI name.  Single-step methods get a two-stage trace."""
    try:
        return METHODS[method](D)
    except KeyError:
        raise ValueError(f"unknown projection method {method!r}") from None
