"""Exact computations with rank-two local systems on the four-punctured sphere.

Cyclotomic arithmetic, monodromy tuples, Dettweiler-Reiter middle convolution,
Cayley-solution tuples, pure braid orbits on trace coordinates, and the
x-coordinate maps of the Legendre curve.
"""

from .cayley import CayleyParams, cayley_solution, cubic_residual, match_cayley, trace_field
from .convolution import CoverCharacter, induced_pushforward, middle_convolve
from .elliptic import LegendreCurve, mult_x_map, psi_p_map, torsion_x_poly
from .exactalg import CycNum, zeta
from .linalg import ExactMatrix, matrix
from .mcg import BraidMove, apply_move, orbit
from .monodromy import MonodromyTuple, is_irreducible, make_tuple, star_check, trace_coordinates

__version__ = "0.1.0"

__all__ = [
    "BraidMove", "CayleyParams", "CoverCharacter", "CycNum", "ExactMatrix", "LegendreCurve",
    "MonodromyTuple", "apply_move", "cayley_solution", "cubic_residual", "induced_pushforward",
    "is_irreducible", "make_tuple", "match_cayley", "matrix", "middle_convolve", "mult_x_map",
    "orbit", "psi_p_map", "star_check", "torsion_x_poly", "trace_coordinates", "trace_field", "zeta",
]
