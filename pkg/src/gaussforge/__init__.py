"""Gauss diagrams of virtual knots and their parity projections to classical knots."""

from .codec import parse, report, serialize
from .diagram import EMPTY, Chord, GaussDiagram, canonical, connected_sum, delete_chords, from_chords
from .diagram import interlacement, is_smaller, linked
from .invariants import bridge_count, f_polynomial, kauffman_bracket, odd_writhe
from .laurent import LaurentPolynomial
from .moves import MoveDescriptor, SearchBudget, apply_move, enumerate_moves, equivalence_search
from .parity import crossing_class_trivial, gaussian_parity, parity_group
from .projection import classicalize, project_gaussian, project_gaussian_stable, project_group
from .surface import boundary_cycles, genus, is_classical_diagram, rotation_system

__version__ = "0.1.0"
