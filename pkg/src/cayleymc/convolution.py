"""Middle convolution of monodromy tuples and induced tuples from the elliptic double cover.

``middle_convolve`` is the linear-algebra form of Katz's operation: block
matrices on V^3, quotiented by the invariant subspaces K and L.

``induced_pushforward`` builds f_* L for a finite-order character L of
H_1(E), E -> P^1 the double cover branched at 0, 1, lambda, infinity.  The
index-2 subgroup pi_1(E - E[2]) is handled by Reidemeister-Schreier rewriting
over the transversal {e, g0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactalg import CYC, CycNum, QQ, lcm, zeta
from .linalg import ExactMatrix, kernel_basis, mat_inv, matrix, span_basis
from .monodromy import MonodromyTuple, make_tuple


class DegenerateConvolution(ArithmeticError):
    """The quotient V^3 / (K + L) is zero."""


@dataclass(frozen=True)
class ConvolutionScalar:
    c: CycNum

    def __post_init__(self):
        c = CycNum.coerce(self.c)
        object.__setattr__(self, "c", c)
        if c == 1:
            raise ValueError("middle convolution needs a scalar different from 1")
        if c ** lcm(2, c.order) != 1:
            raise ValueError(f"{c} is not a root of unity")


def _as_scalar(c) -> CycNum:
    if isinstance(c, ConvolutionScalar):
        return c.c
    return ConvolutionScalar(CycNum.coerce(c)).c


def convolution_blocks(mats, c) -> list[ExactMatrix]:
    """The matrices B_k on V^r: identity outside block row k, which reads
    (c (A_1 - 1), ..., c (A_{k-1} - 1), c A_k, A_{k+1} - 1, ..., A_r - 1).

    With column vectors and the product order M0 M1 Ml Minf = 1 this placement
    of c is the one whose output satisfies the rank/Jordan and involution laws.
    """
    c = _as_scalar(c)
    r = len(mats)
    n = mats[0].rows
    F = mats[0].field
    I = ExactMatrix.identity(n, F)
    blocks = []
    for k in range(r):
        row_blocks = []
        for j in range(r):
            if j < k:
                row_blocks.append((mats[j] - I).scale(c))
            elif j == k:
                row_blocks.append(mats[j].scale(c))
            else:
                row_blocks.append(mats[j] - I)
        rows = []
        for bi in range(r):
            for i in range(n):
                if bi == k:
                    rows.append([row_blocks[j].entries[i][jj] for j in range(r) for jj in range(n)])
                else:
                    rows.append([F.one if bi * n + i == col else F.zero for col in range(r * n)])
        blocks.append(ExactMatrix._raw(F, rows))
    return blocks


def invariant_subspaces(mats, blocks) -> tuple[list[tuple], list[tuple]]:
    """Bases of K = sum_k ker(A_k - 1) (in slot k) and L = intersection of ker(B_k - 1)."""
    r = len(mats)
    n = mats[0].rows
    F = mats[0].field
    I = ExactMatrix.identity(n, F)
    K = []
    for k, A in enumerate(mats):
        for v in kernel_basis(A - I):
            w = [F.zero] * (r * n)
            w[k * n:(k + 1) * n] = v
            K.append(tuple(w))
    In = ExactMatrix.identity(r * n, F)
    stacked = ExactMatrix._raw(F, [row for B in blocks for row in (B - In).entries])
    L = kernel_basis(stacked)
    return K, L


def quotient_action(blocks, sub: list[tuple]) -> list[ExactMatrix]:
    """Induced action of the blocks on V / sub, sub an invariant subspace.

    The complement is spanned by the earliest standard basis vectors that
    complete a basis of sub.
    """
    F = blocks[0].field
    N = blocks[0].rows
    basis = span_basis(sub, F)
    d = len(basis)
    cols = list(basis)
    current = list(basis)
    for i in range(N):
        e = tuple(F.one if j == i else F.zero for j in range(N))
        trial = span_basis(current + [e], F)
        if len(trial) > len(current):
            current = trial
            cols.append(e)
        if len(cols) == N:
            break
    P = ExactMatrix._raw(F, list(zip(*cols)))
    Pi = mat_inv(P)
    out = []
    for B in blocks:
        C = Pi @ B @ P
        out.append(ExactMatrix._raw(F, [row[d:] for row in C.entries[d:]]))
    return out


def middle_convolve(T: MonodromyTuple, c=-1) -> MonodromyTuple:
    """MC_c(T) on the quotient V^3 / (K + L)."""
    c = _as_scalar(c)
    mats = list(T.mats)
    blocks = convolution_blocks(mats, c)
    K, L = invariant_subspaces(mats, blocks)
    sub = K + L
    span_dim = len(span_basis(sub, T.field)) if sub else 0
    if span_dim == 3 * T.rank:
        raise DegenerateConvolution("middle convolution has dimension 0")
    return MonodromyTuple(tuple(quotient_action(blocks, sub)))


def convolution_dimensions(T: MonodromyTuple, c=-1) -> dict:
    c = _as_scalar(c)
    mats = list(T.mats)
    blocks = convolution_blocks(mats, c)
    K, L = invariant_subspaces(mats, blocks)
    span_dim = len(span_basis(K + L, T.field)) if K + L else 0
    return {"total": 3 * T.rank, "K": len(K), "L": len(L), "quotient": 3 * T.rank - span_dim}


# induced tuples from the elliptic double cover ---------------------------

# generators g0, g1, gl are letters 0, 1, 2; a word is a tuple of (letter, +-1)
_TRANSVERSAL = {0: (), 1: ((0, 1),)}
# nontrivial Schreier generators gamma(t, s) = rep(t) s rep(ts)^-1, in fixed order
SCHREIER_GENERATORS = ((1, 0), (1, 1), (1, 2), (0, 1), (0, 2))
SCHREIER_NAMES = ("g0^2", "g0*g1", "g0*gl", "g1*g0^-1", "gl*g0^-1")


def _coset(word) -> int:
    return len(word) % 2


def rewrite(word) -> list[tuple[int, int]]:
    """Reidemeister-Schreier rewriting of a word lying in the index-2 subgroup."""
    if _coset(word) != 0:
        raise ValueError("word is not in the covering subgroup")
    out = []
    c = 0
    for s, e in word:
        if e > 0:
            gamma, c = (c, s), 1 - c
        else:
            c = 1 - c
            gamma = (c, s)
        if gamma != (0, 0):
            out.append((SCHREIER_GENERATORS.index(gamma), e))
    return out


def abelianize(word) -> tuple[int, ...]:
    v = [0] * len(SCHREIER_GENERATORS)
    for g, e in rewrite(word):
        v[g] += e
    return tuple(v)


def _power(word, k):
    return tuple(word) * k


G0, G1, GL = ((0, 1),), ((1, 1),), ((2, 1),)
PUNCTURE_RELATORS = (_power(G0, 2), _power(G1, 2), _power(GL, 2), _power(G0 + G1 + GL, 2))


@lru_cache(maxsize=None)
def homology_projection() -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Linear map Z^5 -> H_1(E) = Z^2 killing puncture loops, normalized so that
    [g0 g1] -> (1, 0) and [g0 gl] -> (0, 1)."""
    relators = [abelianize(w) for w in PUNCTURE_RELATORS]
    rel_basis = span_basis([[Fraction(x) for x in v] for v in relators], QQ)
    e1 = abelianize(G0 + G1)
    e2 = abelianize(G0 + GL)
    rows = [list(v) for v in rel_basis] + [list(map(Fraction, e1)), list(map(Fraction, e2))]
    M = matrix(rows, QQ)
    if M.rows != M.cols:
        raise ArithmeticError("puncture relations do not cut H_1 down to rank 2")
    Minv = mat_inv(M)
    k = len(rel_basis)
    # projection p satisfies M p^T = targets; targets zero on relators
    targets = [[Fraction(0)] * 2 for _ in range(k)] + [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    P = Minv @ matrix(targets, QQ)
    return tuple(P.column(0)), tuple(P.column(1))


def homology_class(word) -> tuple[int, int]:
    v = abelianize(word)
    p1, p2 = homology_projection()
    c1 = sum(Fraction(x) * y for x, y in zip(v, p1))
    c2 = sum(Fraction(x) * y for x, y in zip(v, p2))
    if c1.denominator != 1 or c2.denominator != 1:
        raise ArithmeticError("non-integral homology class")
    return int(c1), int(c2)


@dataclass(frozen=True)
class CoverCharacter:
    """Character of H_1(E) = Z^2 sending the basis cycles to zeta_m^a, zeta_m^b."""

    m: int
    a: int
    b: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("character order must be positive")
        object.__setattr__(self, "a", self.a % self.m)
        object.__setattr__(self, "b", self.b % self.m)

    @property
    def exact_order(self) -> int:
        return self.m // gcd(self.m, gcd(self.a, self.b))

    def is_trivial(self) -> bool:
        return self.a == 0 and self.b == 0

    def primitive(self) -> CoverCharacter:
        """Same character written over its exact order."""
        k = self.m // self.exact_order
        return CoverCharacter(self.exact_order, self.a // k, self.b // k)

    def inverse(self) -> CoverCharacter:
        return CoverCharacter(self.m, -self.a, -self.b)

    def scaled(self, k: int) -> CoverCharacter:
        return CoverCharacter(self.m, k * self.a, k * self.b)

    def value(self, cls: tuple[int, int]) -> CycNum:
        return zeta(self.m, cls[0] * self.a + cls[1] * self.b)

    def to_json(self) -> dict:
        return {"m": self.m, "a": self.a, "b": self.b}


def characters_of_exact_order(m: int) -> list[CoverCharacter]:
    return [CoverCharacter(m, a, b) for a in range(m) for b in range(m) if gcd(m, gcd(a, b)) == 1]


def _inverse_word(word):
    return tuple((s, -e) for s, e in reversed(word))


def induced_pushforward(chi: CoverCharacter) -> MonodromyTuple:
    """Monodromy of f_* L_chi: the representation induced from the covering subgroup."""
    reps = [_TRANSVERSAL[0], _TRANSVERSAL[1]]
    mats = []
    for g in (G0, G1, GL):
        rows = [[CycNum.rational(0, chi.m)] * 2 for _ in range(2)]
        for i in range(2):
            for j in range(2):
                w = _inverse_word(reps[j]) + g + reps[i]
                if _coset(w) == 0:
                    rows[j][i] = chi.value(homology_class(w))
        mats.append(matrix(rows, CYC))
    return make_tuple(*mats)
