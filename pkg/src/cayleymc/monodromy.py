"""Monodromy tuples on P^1 minus {0, 1, lambda, infinity}.

A tuple stores the local monodromies M0, M1, Ml around 0, 1, lambda for loops
g0, g1, gl with g0 g1 gl ginf = 1.  The matrix at infinity is always derived as
(M0 M1 Ml)^-1 so the product relation holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .exactalg import CYC, CycNum, lcm
from .linalg import (EigenvalueError, ExactMatrix, JordanType, SingularMatrixError, det,
                     jordan_type, mat_inv, matrix)

JORDAN_UNIPOTENT = JordanType(((CycNum.rational(1), 2),))
JORDAN_NEG_UNIPOTENT = JordanType(((CycNum.rational(-1), 2),))


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MonodromyTuple:
    mats: tuple[ExactMatrix, ExactMatrix, ExactMatrix]

    @property
    def M0(self) -> ExactMatrix:
        return self.mats[0]

    @property
    def M1(self) -> ExactMatrix:
        return self.mats[1]

    @property
    def Ml(self) -> ExactMatrix:
        return self.mats[2]

    @cached_property
    def Minf(self) -> ExactMatrix:
        return mat_inv(self.M0 @ self.M1 @ self.Ml)

    @property
    def rank(self) -> int:
        return self.M0.rows

    @property
    def field(self):
        return self.M0.field

    def local(self) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix]:
        return (self.M0, self.M1, self.Ml, self.Minf)

    def conjugate_by(self, P: ExactMatrix) -> MonodromyTuple:
        Pi = mat_inv(P)
        return MonodromyTuple(tuple(Pi @ M @ P for M in self.mats))

    def __eq__(self, other):
        if not isinstance(other, MonodromyTuple):
            return NotImplemented
        return all(a == b for a, b in zip(self.mats, other.mats))

    def __hash__(self):
        return hash(tuple(m.key() for m in self.mats))

    def to_json(self) -> dict:
        return {"M0": self.M0.to_json(), "M1": self.M1.to_json(), "Mlambda": self.Ml.to_json()}

    @classmethod
    def from_json(cls, obj, field=CYC) -> MonodromyTuple:
        return make_tuple(*(ExactMatrix.from_json(obj[k], field) for k in ("M0", "M1", "Mlambda")))


def make_tuple(M0, M1, Ml, field=CYC) -> MonodromyTuple:
    mats = tuple(m if isinstance(m, ExactMatrix) else matrix(m, field) for m in (M0, M1, Ml))
    n = mats[0].rows
    for m in mats:
        if not m.is_square() or m.rows != n:
            raise ValueError("local monodromies must be square of equal size")
        if not det(m):
            raise SingularMatrixError("local monodromy is singular")
    return MonodromyTuple(mats)


def star_check(T: MonodromyTuple) -> bool:
    """Unipotent J(2) at 0, 1, lambda and -J(2) at infinity (rank two only)."""
    if T.rank != 2:
        raise PreconditionError("star condition is defined for rank-2 tuples")
    try:
        for M in T.mats:
            if jordan_type(M, [1]) != JORDAN_UNIPOTENT:
                return False
        return jordan_type(T.Minf, [-1]) == JORDAN_NEG_UNIPOTENT
    except EigenvalueError:
        return False


class _Span:
    """Incrementally grown echelon basis of a space of vectors."""

    def __init__(self, field):
        self.field = field
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def add(self, v: Sequence) -> bool:
        v = list(v)
        for r, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y if y else x for x, y in zip(v, r)]
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = self.field.one / v[p]
        v = [x * inv for x in v]
        for i, r in enumerate(self.rows):
            if r[p]:
                f = r[p]
                self.rows[i] = [x - f * y if y else x for x, y in zip(r, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def __len__(self):
        return len(self.rows)


def _flat(M: ExactMatrix) -> list:
    return [a for r in M.entries for a in r]


def algebra_dimension(mats: Sequence[ExactMatrix]) -> int:
    """Dimension of the unital algebra generated by the matrices."""
    n = mats[0].rows
    F = mats[0].field
    span = _Span(F)
    I = ExactMatrix.identity(n, F)
    span.add(_flat(I))
    queue = [I]
    while queue and len(span) < n * n:
        B = queue.pop()
        for G in mats:
            C = B @ G
            if span.add(_flat(C)):
                queue.append(C)
    return len(span)


def is_irreducible(T: MonodromyTuple) -> bool:
    """Burnside criterion: the generated algebra is the full matrix algebra."""
    n = T.rank
    if n == 1:
        return True
    return algebra_dimension(T.mats) == n * n


@dataclass(frozen=True)
class TraceCoordinates:
    a0: CycNum
    a1: CycNum
    al: CycNum
    ainf: CycNum
    x: CycNum
    y: CycNum
    z: CycNum

    NAMES = ("a0", "a1", "alambda", "ainf", "x", "y", "z")

    def as_tuple(self) -> tuple[CycNum, ...]:
        return (self.a0, self.a1, self.al, self.ainf, self.x, self.y, self.z)

    @property
    def boundary(self) -> tuple[CycNum, ...]:
        return (self.a0, self.a1, self.al, self.ainf)

    @property
    def xyz(self) -> tuple[CycNum, CycNum, CycNum]:
        return (self.x, self.y, self.z)

    def to_json(self) -> dict:
        return {k: v.to_json() for k, v in zip(self.NAMES, self.as_tuple())}

    @classmethod
    def from_json(cls, obj) -> TraceCoordinates:
        return cls(*(CycNum.from_json(obj[k]) for k in cls.NAMES))


def trace_coordinates(T: MonodromyTuple) -> TraceCoordinates:
    if T.rank != 2:
        raise PreconditionError("trace coordinates are defined for rank-2 tuples")
    M0, M1, Ml, Minf = T.local()
    return TraceCoordinates(
        M0.trace(), M1.trace(), Ml.trace(), Minf.trace(),
        (M0 @ M1).trace(), (M1 @ Ml).trace(), (M0 @ Ml).trace(),
    )


def is_conjugate(T1: MonodromyTuple, T2: MonodromyTuple) -> bool:
    """Seven-trace test; valid for irreducible rank-2 tuples only."""
    for T in (T1, T2):
        if T.rank != 2:
            raise PreconditionError("conjugacy test requires rank-2 tuples")
        if not is_irreducible(T):
            raise PreconditionError("conjugacy test requires irreducible tuples")
    return trace_coordinates(T1) == trace_coordinates(T2)


@dataclass(frozen=True)
class ImageReport:
    order: int | None
    exceeded: bool

    def to_json(self) -> dict:
        return {"exceeded": True} if self.exceeded else {"order": self.order}


def finite_image(T: MonodromyTuple, bound: int) -> ImageReport:
    """Breadth-first closure of the generated matrix group, up to `bound` elements."""
    gens = list(T.mats)
    F = T.field
    order = None
    if F == CYC:
        order = 1
        for g in gens:
            order = lcm(order, g.common_order())
    I = ExactMatrix.identity(T.rank, F)
    seen = {I.key(order)}
    frontier = [I]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                B = A @ g
                k = B.key(order)
                if k not in seen:
                    seen.add(k)
                    if len(seen) > bound:
                        return ImageReport(None, True)
                    nxt.append(B)
        frontier = nxt
    return ImageReport(len(seen), False)

