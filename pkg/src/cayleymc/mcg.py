"""Pure braid (mapping class) action on monodromy tuples and orbits on trace coordinates.

Tuples are acted on through the 4-tuple (M0, M1, Ml, Minf) by the Hurwitz rule.
For orbit enumeration the squares sigma_i^2 act directly on (x, y, z) as
products of the Vieta involutions of the Fricke cubic

    x^2 + y^2 + z^2 + xyz = t1 x + t2 y + t3 z + const,
    t1 = ab + cd,  t2 = bc + ad,  t3 = ac + bd,

with (a, b, c, d) the boundary traces.  Which pair of involutions realizes
which square is fixed by the tuple-level action (see the tests).
"""

from __future__ import annotations

import os
from math import isqrt
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .exactalg import CycNum, _dense_reduction, common_order, totient
from .linalg import det, mat_inv
from .monodromy import MonodromyTuple, PreconditionError, is_irreducible, trace_coordinates

DEFAULT_BOUND = 10000


@dataclass(frozen=True)
class BraidMove:
    """sigma_i (sign +1) or its inverse (sign -1), i in {1, 2, 3}."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError("braid index must be 1, 2 or 3")
        if self.sign not in (1, -1):
            raise ValueError("braid direction must be +1 or -1")

    def inverse(self) -> BraidMove:
        return BraidMove(self.index, -self.sign)

    def __str__(self):
        return f"s{self.index}" + ("" if self.sign > 0 else "^-1")


def apply_move(T: MonodromyTuple, move: BraidMove) -> MonodromyTuple:
    """Hurwitz action on (M0, M1, Ml, Minf); the product stays equal to one."""
    quad = list(T.local())
    i = move.index - 1
    A, B = quad[i], quad[i + 1]
    if move.sign > 0:
        quad[i], quad[i + 1] = B, mat_inv(B) @ A @ B
    else:
        quad[i], quad[i + 1] = A @ B @ mat_inv(A), A
    return MonodromyTuple(tuple(quad[:3]))


def apply_word(T: MonodromyTuple, word) -> MonodromyTuple:
    for move in word:
        T = apply_move(T, move)
    return T


def pure_generator(i: int, sign: int = 1) -> tuple[BraidMove, BraidMove]:
    """sigma_i^2 (or sigma_i^-2) as a two-letter word."""
    m = BraidMove(i, sign)
    return (m, m)


# trace-coordinate action ---------------------------------------------------


@dataclass(frozen=True)
class FrickeData:
    t1: CycNum
    t2: CycNum
    t3: CycNum

    @classmethod
    def from_boundary(cls, a, b, c, d) -> FrickeData:
        return cls(a * b + c * d, b * c + a * d, a * c + b * d)

    def sx(self, p):
        x, y, z = p
        return (self.t1 - x - y * z, y, z)

    def sy(self, p):
        x, y, z = p
        return (x, self.t2 - y - x * z, z)

    def sz(self, p):
        x, y, z = p
        return (x, y, self.t3 - z - x * y)


# name -> (forward, backward) maps on (x, y, z); the backward map is the inverse
def _moves(fd: FrickeData) -> list[tuple[str, Callable]]:
    return [
        ("s1^2", lambda p: fd.sy(fd.sz(p))),
        ("s1^-2", lambda p: fd.sz(fd.sy(p))),
        ("s2^2", lambda p: fd.sz(fd.sx(p))),
        ("s2^-2", lambda p: fd.sx(fd.sz(p))),
        ("s3^2", lambda p: fd.sy(fd.sz(p))),
        ("s3^-2", lambda p: fd.sz(fd.sy(p))),
    ]


MOVE_NAMES = ("s1^2", "s1^-2", "s2^2", "s2^-2", "s3^2", "s3^-2")


def twist_point(point, name: str, fd: FrickeData):
    return dict(_moves(fd))[name](point)


@dataclass
class OrbitReport:
    representative: tuple[CycNum, CycNum, CycNum]
    size: int | None
    exceeded: bool
    bound: int
    points: list = field(default_factory=list, repr=False)
    words: dict = field(default_factory=dict, repr=False)

    def to_json(self, with_points: bool = False) -> dict:
        out = {
            "representative": [v.to_json() for v in self.representative],
            "bound": self.bound,
            "exceeded": self.exceeded,
            "size": self.size,
        }
        if with_points:
            out["points"] = [[v.to_json() for v in p] for p in self.points]
            out["words"] = [self.words[_key(p)] for p in self.points]
        return out

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["index", "word", "x", "y", "z"]]
        for i, p in enumerate(self.points):
            rows.append([str(i), self.words[_key(p)]] + [str(v.descend()) for v in p])
        return rows


def _key(p) -> tuple:
    return tuple((v.num, v.den) for v in p)


class _Overflow(ArithmeticError):
    pass


class _CycOps:
    """Generic exact arithmetic on points of CycNum."""

    def __init__(self, n: int, theta):
        self.n = n
        self.fd = FrickeData(*theta)

    def start(self, p):
        return p

    def images(self, p):
        return [(name, f(p)) for name, f in _moves(self.fd)]

    key = staticmethod(_key)

    def to_cyc(self, p):
        return p


class _IntOps:
    """Points of Z[zeta_n]^3 as int64 vectors; raises _Overflow before precision is lost."""

    def __init__(self, n: int, theta):
        self.n = n
        self.R, mr = _dense_reduction(n)
        phi = totient(n)
        self.phi = phi
        self.limit = isqrt((1 << 62) // (phi * (1 + mr * phi)))
        self.theta = [self._vec(t) for t in theta]

    def _vec(self, v: CycNum) -> np.ndarray:
        if v.den != 1:
            raise _Overflow("non-integral coordinate")
        a = np.array(v.num, dtype=np.int64)
        if np.abs(a).max() >= self.limit:
            raise _Overflow("coefficient too large")
        return a

    def _mul(self, a, b):
        p = np.convolve(a, b)
        r = p[:self.phi] + p[self.phi:] @ self.R if self.phi > 1 else p
        if np.abs(r).max() >= self.limit:
            raise _Overflow("coefficient too large")
        return r

    def start(self, p):
        return tuple(self._vec(v) for v in p)

    def images(self, p):
        t1, t2, t3 = self.theta
        x, y, z = p
        sx = lambda q: (t1 - q[0] - self._mul(q[1], q[2]), q[1], q[2])
        sy = lambda q: (q[0], t2 - q[1] - self._mul(q[0], q[2]), q[2])
        sz = lambda q: (q[0], q[1], t3 - q[2] - self._mul(q[0], q[1]))
        out = [sy(sz(p)), sz(sy(p)), sz(sx(p)), sx(sz(p))]
        return list(zip(MOVE_NAMES, out + out[:2]))

    def key(self, p):
        return b"".join(v.tobytes() for v in p)

    def to_cyc(self, p):
        return tuple(CycNum(self.n, v.tolist()) for v in p)


def _expand(args):
    ops, points = args
    return [ops.images(p) for p in points]


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("CAYLEYMC_THREADS", "1")))
    except ValueError:
        return 1


def _bfs(ops, p0, bound: int, workers: int):
    start = ops.start(p0)
    seen = {ops.key(start): ""}
    order = [start]
    frontier = [start]
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while frontier:
            if pool is not None and len(frontier) > 4 * workers:
                step = -(-len(frontier) // workers)
                chunks = [frontier[i:i + step] for i in range(0, len(frontier), step)]
                images = [r for part in pool.map(_expand, [(ops, c) for c in chunks]) for r in part]
            else:
                images = _expand((ops, frontier))
            nxt = []
            for p, imgs in zip(frontier, images):
                base = seen[ops.key(p)]
                for name, q in imgs:
                    k = ops.key(q)
                    if k not in seen:
                        seen[k] = f"{base} {name}".strip()
                        order.append(q)
                        if len(seen) > bound:
                            return order, seen, True
                        nxt.append(q)
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return order, seen, False


def orbit_of_point(point, boundary, bound: int = DEFAULT_BOUND, workers: int | None = None) -> OrbitReport:
    """Breadth-first closure of (x, y, z) under sigma_i^{+-2}, i = 1, 2, 3.

    All coordinates live at one cyclotomic order so exact keys are plain
    integer data.  Integral points run on machine integers with an overflow
    guard; anything else (or a guard trip) uses CycNum arithmetic.  The
    frontier is expanded in a fixed order, so the result does not depend on
    the number of workers.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    vals = [CycNum.coerce(v).descend() for v in list(point) + list(boundary)]
    n, vals = common_order(vals)
    p0 = tuple(vals[:3])
    fd = FrickeData.from_boundary(*vals[3:])
    theta = (fd.t1.lift(n), fd.t2.lift(n), fd.t3.lift(n))
    workers = workers or _workers()
    try:
        ops = _IntOps(n, theta)
        order, seen, exceeded = _bfs(ops, p0, bound, workers)
    except _Overflow:
        ops = _CycOps(n, theta)
        order, seen, exceeded = _bfs(ops, p0, bound, workers)
    points = [ops.to_cyc(p) for p in order]
    words = {_key(q): seen[ops.key(p)] for p, q in zip(order, points)}
    return OrbitReport(p0, None if exceeded else len(points), exceeded, bound, points, words)


def orbit(T: MonodromyTuple, bound: int = DEFAULT_BOUND, workers: int | None = None) -> OrbitReport:
    """Orbit of the conjugacy class of T on trace coordinates."""
    if T.rank != 2 or not is_irreducible(T):
        raise PreconditionError("orbit needs an irreducible rank-2 tuple")
    if any(det(M) != 1 for M in T.mats):
        raise PreconditionError("trace-coordinate orbits need local monodromies in SL2")
    tc = trace_coordinates(T)
    return orbit_of_point(tc.xyz, tc.boundary, bound, workers)
