"""Cayley-solution tuples, the Cayley cubic, trace fields, and parameter matching."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .exactalg import CycNum, conductor, lcm, subfield_degree, two_cos_rational, two_sin_rational
from .linalg import matrix
from .monodromy import (MonodromyTuple, PreconditionError, TraceCoordinates, is_irreducible,
                        make_tuple, star_check, trace_coordinates)

# x^2 + y^2 + z^2 + xyz - 4 as ((deg_x, deg_y, deg_z), coefficient), sorted by exponent
CAYLEY_CUBIC = (
    ((0, 0, 0), -4),
    ((0, 0, 2), 1),
    ((0, 2, 0), 1),
    ((1, 1, 1), 1),
    ((2, 0, 0), 1),
)
CAYLEY_CUBIC_STR = "x**2 + x*y*z + y**2 + z**2 - 4"
STAR_BOUNDARY = (2, 2, 2, -2)


class ParameterError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CayleyParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    @property
    def denominator(self) -> int:
        return max(self.alpha.denominator, self.beta.denominator)

    @property
    def ambient_order(self) -> int:
        return 4 * lcm(self.alpha.denominator, self.beta.denominator)

    def x_values(self) -> tuple[CycNum, CycNum, CycNum]:
        x1 = two_cos_rational((self.alpha + self.beta) / 2)
        x2 = two_sin_rational(self.alpha / 2)
        x3 = two_sin_rational(self.beta / 2)
        return x1, x2, x3

    def to_json(self) -> dict:
        return {"alpha": str(self.alpha), "beta": str(self.beta)}


def cayley_solution(p: CayleyParams) -> MonodromyTuple:
    """The explicit (star) tuple attached to rational parameters (alpha, beta)."""
    N = p.ambient_order
    x1, x2, x3 = (v.lift(N) for v in p.x_values())
    if not x1:
        raise ParameterError(f"x1 = 2cos(pi(alpha+beta)/2) vanishes for {p}")
    t = x2 * x3 / x1
    M0 = matrix([[1 + t, -(x2 * x2) / x1], [x3 * x3 / x1, 1 - t]])
    M1 = matrix([[1, -x1], [0, 1]])
    Ml = matrix([[1, 0], [x1, 1]])
    return make_tuple(M0, M1, Ml)


def cayley_trace_point(p: CayleyParams) -> tuple[CycNum, CycNum, CycNum]:
    """(x, y, z) of the Cayley tuple, computed from the tuple itself."""
    return trace_coordinates(cayley_solution(p)).xyz


def evaluate_cubic(poly, x, y, z):
    acc = CycNum.rational(0)
    for (i, j, k), c in poly:
        acc = acc + (x**i) * (y**j) * (z**k) * c
    return acc


def cubic_residual(tc: TraceCoordinates) -> CycNum:
    if tuple(tc.boundary) != tuple(CycNum.coerce(v) for v in STAR_BOUNDARY):
        raise PreconditionError("cubic residual needs boundary traces (2, 2, 2, -2)")
    return evaluate_cubic(CAYLEY_CUBIC, tc.x, tc.y, tc.z)


def tuple_traces(T: MonodromyTuple) -> list[CycNum]:
    tc = trace_coordinates(T)
    return list(tc.as_tuple()) + [(T.M0 @ T.M1 @ T.Ml).trace()]


@dataclass(frozen=True)
class TraceField:
    degree: int
    conductor: int

    def to_json(self) -> dict:
        return {"degree": self.degree, "conductor": self.conductor}


def trace_field(T: MonodromyTuple) -> TraceField:
    if T.rank != 2:
        raise PreconditionError("trace field is computed for rank-2 tuples")
    traces = tuple_traces(T)
    return TraceField(subfield_degree(traces), conductor(traces))


def is_degenerate(p: CayleyParams) -> bool:
    """Parameters whose tuple fails (star) or irreducibility (x1 = 0 included)."""
    try:
        T = cayley_solution(p)
    except ParameterError:
        return True
    return not (star_check(T) and is_irreducible(T))


def parameter_grid(max_denominator: int) -> Iterator[CayleyParams]:
    """(alpha, beta) in [0, 2)^2 with denominators <= bound, ordered by
    max denominator, then lexicographically."""
    by_den: dict[int, list[Fraction]] = {}
    for q in range(1, max_denominator + 1):
        for k in range(2 * q):
            f = Fraction(k, q)
            if f.denominator == q:
                by_den.setdefault(q, []).append(f)
    values = sorted(f for fs in by_den.values() for f in fs)
    for d in range(1, max_denominator + 1):
        for a in values:
            for b in values:
                if max(a.denominator, b.denominator) == d:
                    yield CayleyParams(a, b)


@lru_cache(maxsize=None)
def _canonical_point(p: CayleyParams):
    try:
        return tuple(v.descend() for v in cayley_trace_point(p))
    except ParameterError:
        return None


def _grid_values(denominator_bound: int) -> list[Fraction]:
    return sorted({Fraction(k, q) for q in range(1, denominator_bound + 1) for k in range(2 * q)})


def _two_cos(f: Fraction) -> float:
    return 2 * math.cos(math.pi * f)


def match_cayley(T: MonodromyTuple, denominator_bound: int) -> CayleyParams | None:
    """First Cayley parameter (in grid order) whose tuple is conjugate to T.

    Candidates come from the closed form (x, y, z) = (2cos pi b, -2cos pi(a+b),
    2cos pi a) in floating point; each survivor is confirmed exactly against the
    traces of the Cayley tuple itself.
    """
    if not star_check(T) or not is_irreducible(T):
        raise PreconditionError("match_cayley needs an irreducible (star) tuple")
    target = tuple(v.descend() for v in trace_coordinates(T).xyz)
    x, y, z = (v.to_complex() for v in target)
    values = _grid_values(denominator_bound)
    betas = [v for v in values if abs(_two_cos(v) - x) < 1e-9]
    alphas = [v for v in values if abs(_two_cos(v) - z) < 1e-9]
    cands = [CayleyParams(a, b) for a in alphas for b in betas if abs(_two_cos(a + b) + y) < 1e-9]
    cands.sort(key=lambda p: (p.denominator, p.alpha, p.beta))
    for p in cands:
        if _canonical_point(p) == target:
            return p
    return None
