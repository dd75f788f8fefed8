"""Exact dense linear algebra over cyclotomic and finite fields.

Matrices are small (monodromy tuples and their convolutions stay below a dozen
rows), so everything is plain Gaussian elimination with exact entries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactalg import CYC, CycNum, lcm
from .poly import Poly

MAX_CHARPOLY_DIM = 12


class SingularMatrixError(ArithmeticError):
    pass


class EigenvalueError(ValueError):
    """Raised when a characteristic polynomial does not split over the candidate set."""


def _size(x) -> int:
    if isinstance(x, CycNum):
        return sum(abs(c).bit_length() + 1 for c in x.num if c) + x.den.bit_length()
    if isinstance(x, Fraction):
        return abs(x.numerator).bit_length() + x.denominator.bit_length()
    return 1


class ExactMatrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows: Sequence[Sequence]):
        self.field = field
        self.entries = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix rows")

    @classmethod
    def _raw(cls, field, rows) -> ExactMatrix:
        m = object.__new__(cls)
        m.field = field
        m.entries = tuple(tuple(r) for r in rows)
        m.rows = len(m.entries)
        m.cols = len(m.entries[0]) if m.entries else 0
        return m

    @classmethod
    def identity(cls, n: int, field=CYC) -> ExactMatrix:
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int, field=CYC) -> ExactMatrix:
        return cls._raw(field, [[field.zero] * c for _ in range(r)])

    @classmethod
    def diag(cls, values: Sequence, field=CYC) -> ExactMatrix:
        n = len(values)
        return cls(field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # access -----------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix._raw(self.field, list(zip(*self.entries)))

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"ExactMatrix([{body}])"

    # arithmetic -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix addition")
        return ExactMatrix._raw(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix subtraction")
        return ExactMatrix._raw(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix._raw(self.field, [[-a for a in r] for r in self.entries])

    def scale(self, c) -> ExactMatrix:
        c = self.field.coerce(c)
        return ExactMatrix._raw(self.field, [[c * a for a in r] for r in self.entries])

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        return mat_mul(self, other)

    def __pow__(self, e: int) -> ExactMatrix:
        if e < 0:
            return mat_inv(self) ** (-e)
        result = ExactMatrix.identity(self.rows, self.field)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def apply(self, v: Sequence) -> tuple:
        return tuple(_dot(r, v, self.field) for r in self.entries)

    def map_entries(self, fn) -> ExactMatrix:
        return ExactMatrix._raw(self.field, [[fn(a) for a in r] for r in self.entries])

    def is_identity(self) -> bool:
        return self.is_square() and all(
            (a == 1) if i == j else not a for i, r in enumerate(self.entries) for j, a in enumerate(r))

    def is_scalar(self, c) -> bool:
        c = self.field.coerce(c)
        return self.is_square() and all(
            (a == c) if i == j else not a for i, r in enumerate(self.entries) for j, a in enumerate(r))

    def common_order(self) -> int:
        n = 1
        for r in self.entries:
            for a in r:
                n = lcm(n, a.order)
        return n

    def key(self, order: int | None = None) -> tuple:
        """Hashable exact key; cyclotomic entries are lifted to a shared order first."""
        if self.field != CYC:
            return tuple((a.a, a.b) if hasattr(a, "b") else a for r in self.entries for a in r)
        n = order or self.common_order()
        out = []
        for r in self.entries:
            for a in r:
                b = a.lift(n)
                out.append((b.num, b.den))
        return (n, tuple(out))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [self.field.to_json(a) for r in self.entries for a in r]}

    @classmethod
    def from_json(cls, obj, field=CYC) -> ExactMatrix:
        r, c = int(obj["rows"]), int(obj["cols"])
        flat = [field.coerce(x) for x in obj["entries"]]
        if len(flat) != r * c:
            raise ValueError("entries length does not match rows*cols")
        return cls._raw(field, [flat[i * c:(i + 1) * c] for i in range(r)])


def _dot(u, v, field):
    acc = field.zero
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def matrix(rows, field=CYC) -> ExactMatrix:
    return ExactMatrix(field, rows)


def mat_mul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    cols = list(zip(*B.entries))
    return ExactMatrix._raw(A.field, [[_dot(r, c, A.field) for c in cols] for r in A.entries])


def _pivot(rows, r, c):
    best, best_size = None, None
    for i in range(r, len(rows)):
        x = rows[i][c]
        if x:
            s = _size(x)
            if best is None or s < best_size:
                best, best_size = i, s
    return best


def rref(A: ExactMatrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (as lists) and pivot columns."""
    rows = [list(r) for r in A.entries]
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == len(rows):
            break
        p = _pivot(rows, r, c)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = A.field.one / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(A: ExactMatrix) -> int:
    return len(rref(A)[1])


def kernel_basis(A: ExactMatrix) -> list[tuple]:
    """Basis of {v : A v = 0}, one vector per free column of the echelon form."""
    rows, pivots = rref(A)
    F = A.field
    free = [j for j in range(A.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * A.cols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def mat_inv(A: ExactMatrix) -> ExactMatrix:
    if not A.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = A.rows
    F = A.field
    if n == 2:
        (a, b), (c, d) = A.entries
        dt = a * d - b * c
        if not dt:
            raise SingularMatrixError("matrix is singular")
        s = F.one / dt
        return ExactMatrix._raw(F, [[d * s, -b * s], [-c * s, a * s]])
    aug =ExactMatrix._raw(F, [list(r) + [F.one if i == j else F.zero for j in range(n)]
                               for i, r in enumerate(A.entries)])
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return ExactMatrix._raw(F, [r[n:] for r in rows])


def det(A: ExactMatrix):
    if not A.is_square():
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in A.entries]
    n = A.rows
    F = A.field
    d = F.one
    for c in range(n):
        p = _pivot(rows, c, c)
        if p is None:
            return F.zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d = d * piv
        inv = F.one / piv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[c])]
    return d


def span_basis(vectors: Iterable[Sequence], field=CYC) -> list[tuple]:
    """Echelon basis of the span of the given vectors."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return []
    rows, pivots = rref(ExactMatrix._raw(field, vecs))
    return [tuple(rows[i]) for i in range(len(pivots))]


def hessenberg(A: ExactMatrix) -> list[list]:
    """Upper Hessenberg form similar to A."""
    H = [list(r) for r in A.entries]
    n = A.rows
    F = A.field
    for j in range(n - 2):
        p = _pivot(H, j + 1, j)
        if p is None:
            continue
        if p != j + 1:
            H[p], H[j + 1] = H[j + 1], H[p]
            for r in H:
                r[p], r[j + 1] = r[j + 1], r[p]
        inv = F.one / H[j + 1][j]
        for k in range(j + 2, n):
            if H[k][j]:
                f = H[k][j] * inv
                H[k] = [x - f * y if y else x for x, y in zip(H[k], H[j + 1])]
                for r in H:
                    if r[k]:
                        r[j + 1] = r[j + 1] + f * r[k]
    return H


def char_poly(A: ExactMatrix) -> Poly:
    """det(t I - A) as a monic polynomial over the entry field."""
    if not A.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = A.rows
    if n > MAX_CHARPOLY_DIM:
        raise ValueError(f"char_poly limited to dimension {MAX_CHARPOLY_DIM}, got {n}")
    F = A.field
    H = hessenberg(A)
    t = Poly.x(F)
    p = [Poly.const(F, 1)]
    for m in range(n):
        pm = (t - H[m][m]) * p[m]
        prod = F.one
        for i in range(1, m + 1):
            prod = prod * H[m - i + 1][m - i]
            if not prod:
                break
            h = H[m - i][m]
            if h:
                pm = pm - p[m - i] * (prod * h)
        p.append(pm)
    return p[n]


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan blocks (eigenvalue, size)."""

    blocks: tuple

    def __eq__(self, other):
        if not isinstance(other, JordanType):
            return NotImplemented
        return Counter(self.blocks) == Counter(other.blocks)

    def __hash__(self):
        return hash(frozenset(Counter(self.blocks).items()))

    @property
    def dimension(self) -> int:
        return sum(s for _, s in self.blocks)

    def to_json(self) -> list:
        return [{"eigenvalue": e.to_json() if isinstance(e, CycNum) else str(e), "size": s}
                for e, s in self.blocks]


def eigen_multiplicities(A: ExactMatrix, candidates: Iterable) -> list[tuple[object, int]]:
    """Algebraic multiplicities over the candidate set; raises if char_poly does not split there."""
    F = A.field
    cp = char_poly(A)
    out = []
    for c in candidates:
        c = F.coerce(c)
        lin = Poly(F, [-c, 1])
        k = 0
        while cp.degree > 0:
            q, r = divmod(cp, lin)
            if r:
                break
            cp, k = q, k + 1
        if k:
            out.append((c, k))
    if cp.degree > 0:
        raise EigenvalueError("eigenvalue outside candidate set")
    return out


def jordan_type(A: ExactMatrix, candidates: Iterable) -> JordanType:
    """Jordan blocks from the rank sequence rank((A - cI)^k)."""
    n = A.rows
    I = ExactMatrix.identity(n, A.field)
    blocks = []
    for c, mult in eigen_multiplicities(A, candidates):
        N = A - I.scale(c)
        ranks = [n]
        P = I
        while True:
            P = P @ N
            ranks.append(rank(P))
            if ranks[-1] == ranks[-2] or ranks[-1] == n - mult:
                break
        ranks.append(ranks[-1])
        for k in range(1, len(ranks) - 1):
            at_least_k = ranks[k - 1] - ranks[k]
            at_least_k1 = ranks[k] - ranks[k + 1]
            blocks.extend([(c, k)] * (at_least_k - at_least_k1))
    return JordanType(tuple(blocks))
