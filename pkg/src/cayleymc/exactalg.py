"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_N).

Elements of Q(zeta_N) are stored in the power basis {zeta^i : 0 <= i < phi(N)}
modulo the N-th cyclotomic polynomial, as an integer numerator vector over a
common positive denominator.  Two elements of the same order are equal iff
their stored data are equal.  Binary operations lift both operands to the lcm
of their orders; nothing is descended automatically (see :meth:`CycNum.descend`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Iterator, Sequence

import numpy as np

Rat = Fraction


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


def units(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if gcd(k, n) == 1] if n > 1 else [1]


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # integer polynomials, low -> high, den monic
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            out[i - dq] = c
            for j, d in enumerate(den):
                num[i - dq + j] -= c * d
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # row j = sparse form of x^j mod Phi_n, for 0 <= j < n
    phi = totient(n)
    cyc = cyclotomic_poly(n)
    rows = []
    vec = [0] * phi
    vec[0] = 1
    for j in range(n):
        if j < phi:
            vec = [0] * phi
            vec[j] = 1
        else:
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(phi):
                    vec[i] -= top * cyc[i]
        rows.append(tuple((i, c) for i, c in enumerate(vec) if c))
    return tuple(rows)


def _reduce(n: int, terms: Iterable[tuple[int, int]]) -> list[int]:
    """Reduce sum c * x^e (exponents taken mod n) into the power basis."""
    phi = totient(n)
    table = _reduction_table(n)
    acc = [0] * phi
    for e, c in terms:
        if not c:
            continue
        e %= n
        if e < phi:
            acc[e] += c
        else:
            for i, t in table[e]:
                acc[i] += c * t
    return acc


@lru_cache(maxsize=None)
def _dense_reduction(n: int) -> tuple[np.ndarray, int]:
    """Rows x^j mod Phi_n for phi <= j < 2 phi - 1, and the largest |entry|."""
    phi = totient(n)
    table = _reduction_table(n)
    R = np.zeros((max(phi - 1, 0), phi), dtype=np.int64)
    for r, j in enumerate(range(phi, 2 * phi - 1)):
        for i, c in table[j % n]:
            R[r, i] = c
    return R, int(np.abs(R).max()) if R.size else 0


_INT64_SAFE = 1 << 62


def _mul_int64(n: int, a: tuple, b: tuple) -> list[int] | None:
    """Product of two numerator vectors in machine integers, or None if it could overflow."""
    phi = len(a)
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    R, mr = _dense_reduction(n)
    if ma * mb * phi * (1 + mr * phi) >= _INT64_SAFE:
        return None
    prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
    acc = prod[:phi] + prod[phi:] @ R
    return acc.tolist()


def _mult_matrix(n: int, a: Sequence[int]) -> np.ndarray:
    """Matrix of multiplication by a (numerator vector) in the power basis, as floats."""
    phi = len(a)
    T = np.zeros((2 * phi - 1, phi))
    for i in range(phi):
        T[i:i + phi, i] = a
    R, _ = _dense_reduction(n)
    return T[:phi] + R.T.astype(float) @ T[phi:]


def _float_inverse(n: int, num: tuple) -> list[int] | None:
    """Integer vector u and integer d with num * u = d, guessed in floating point.

    The caller verifies the guess exactly.
    """
    M = _mult_matrix(n, num)
    with np.errstate(all="ignore"):
        d = np.linalg.det(M)
    if not np.isfinite(d) or abs(d) > 1e12 or abs(d) < 0.5:
        return None
    d = round(d)
    e0 = np.zeros(len(num))
    e0[0] = d
    try:
        u = np.linalg.solve(M, e0)
    except np.linalg.LinAlgError:
        return None
    return [int(round(x)) for x in u] + [d]


def _is_prime32(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in (2, 7, 61):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


_MOD_PRIMES: list[int] = []


def _mod_prime(i: int) -> int:
    """The i-th prime below 2^26, counting downwards (small enough for int64 mat-vec products)."""
    p = _MOD_PRIMES[-1] - 2 if _MOD_PRIMES else (1 << 26) - 1
    while len(_MOD_PRIMES) <= i:
        if _is_prime32(p):
            _MOD_PRIMES.append(p)
        p -= 2
    return _MOD_PRIMES[i]


def _exact_mult_matrix(n: int, num: Sequence[int]) -> np.ndarray:
    phi = len(num)
    R, mr = _dense_reduction(n)
    small = max(map(abs, num)) * (1 + mr * phi) < _INT64_SAFE
    T = np.zeros((2 * phi - 1, phi), dtype=np.int64 if small else object)
    for i in range(phi):
        T[i:i + phi, i] = list(num)
    if small:
        return (T[:phi] + R.T @ T[phi:]).astype(object)
    return T[:phi] + R.T.astype(object).dot(T[phi:])


def _inverse_mod_p(M: np.ndarray, p: int) -> np.ndarray | None:
    """Inverse of an integer matrix modulo p by Gauss-Jordan, or None if singular mod p."""
    k = M.shape[0]
    A = np.zeros((k, 2 * k), dtype=np.int64)
    A[:, :k] = (M % p).astype(np.int64)
    A[:, k:] = np.eye(k, dtype=np.int64)
    for col in range(k):
        nz = np.nonzero(A[col:, col])[0]
        if not nz.size:
            return None
        r = col + int(nz[0])
        if r != col:
            A[[col, r]] = A[[r, col]]
        A[col] = A[col] * pow(int(A[col, col]), p - 2, p) % p
        f = A[:, col].copy()
        f[col] = 0
        A = (A - np.outer(f, A[col]) % p) % p
    return A[:, k:]


def _ratrec(a: int, m: int) -> tuple[int, int] | None:
    bound = isqrt(m // 2)
    r0, r1, t0, t1 = m, a % m, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, t1) != 1:
        return None
    return (r1, t1) if t1 > 0 else (-r1, -t1)


def _modular_inverse(n: int, num: tuple, max_steps: int = 1 << 14) -> Iterator[list[Fraction]]:
    """Candidate inverses of an integral element: p-adic (Dixon) lifting of the
    multiplication-matrix solve, then rational reconstruction.  Unverified."""
    M = _exact_mult_matrix(n, num)
    for i in range(8):
        p = _mod_prime(i)
        C = _inverse_mod_p(M, p)
        if C is not None:
            break
    else:
        return
    phi = len(num)
    r = np.zeros(phi, dtype=object)
    r[0] = 1
    X = [0] * phi
    pk, attempt = 1, 1
    for step in range(1, max_steps + 1):
        x = C.dot(np.array([int(v) % p for v in r], dtype=np.int64)) % p
        xo = x.astype(object)
        r = (r - M.dot(xo)) // p
        X = [a + pk * int(b) for a, b in zip(X, x)]
        pk *= p
        if step < attempt:
            continue
        attempt *= 2
        D, out = 1, []
        for v in X:
            rr = _ratrec(v * D % pk, pk)
            if rr is None:
                break
            D *= rr[1]
            out.append(Fraction(rr[0], D))
        else:
            yield out


class CycNum:
    """An element of Q(zeta_order) in reduced power-basis form."""

    __slots__ = ("order", "num", "den", "_canon")

    def __init__(self, order: int, num: Sequence[int], den: int = 1, *, _normalized: bool = False):
        if not _normalized:
            if order < 1:
                raise ValueError("order must be positive")
            if len(num) != totient(order):
                raise ValueError(f"expected {totient(order)} coefficients, got {len(num)}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num, den = [-c for c in num], -den
            g = den
            for c in num:
                g = gcd(g, c)
                if g == 1:
                    break
            if not any(num):
                num, den = [0] * len(num), 1
            elif g > 1:
                num, den = [c // g for c in num], den // g
        self.order = order
        self.num = tuple(num)
        self.den = den
        self._canon = None

    # construction -----------------------------------------------------
    @classmethod
    def from_coeffs(cls, order: int, coeffs: Sequence) -> CycNum:
        fr = [Fraction(c) for c in coeffs]
        d = 1
        for c in fr:
            d = lcm(d, c.denominator)
        return cls(order, [c.numerator * (d // c.denominator) for c in fr], d)

    @classmethod
    def rational(cls, q, order: int = 1) -> CycNum:
        q = Fraction(q)
        num = [0] * totient(order)
        num[0] = q.numerator
        return cls(order, num, q.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycNum:
        return cls(n, _reduce(n, [(k, 1)]))

    @classmethod
    def coerce(cls, x) -> CycNum:
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        if isinstance(x, str):
            return cls.rational(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    # representation ---------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**i for i, c in enumerate(self.num)) / self.den

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> CycNum:
        if isinstance(obj, (int, str)):
            return cls.coerce(obj)
        return cls.from_coeffs(int(obj["order"]), [Fraction(c) for c in obj["coeffs"]])

    def __repr__(self) -> str:
        return f"CycNum({self.order}, {list(map(str, self.coeffs))})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = f"z{self.order}" + (f"^{i}" if i > 1 else "")
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    # order management -------------------------------------------------
    def lift(self, order: int) -> CycNum:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) in Q(zeta_{order})")
        k = order // self.order
        return CycNum(order, _reduce(order, [(i * k, c) for i, c in enumerate(self.num)]), self.den,
                      _normalized=True)

    def _descend_to(self, d: int) -> CycNum | None:
        if self.order % d:
            return None
        if d == self.order:
            return self
        if self.is_rational():
            return CycNum(d, [self.num[0]] + [0] * (totient(d) - 1), self.den, _normalized=True)
        k = self.order // d
        cols = [_reduce(self.order, [(i * k, 1)]) for i in range(totient(d))]
        if len(self.num) >= 8:
            # integral coordinates exist iff the element lies in Q(zeta_d); guess, then check
            A = np.array(cols, dtype=float).T
            b = np.array(self.num, dtype=float)
            sol, *_ = np.linalg.lstsq(A, b, rcond=None)
            guess = [int(round(x)) for x in sol]
            if _reduce(self.order, [(i * k, c) for i, c in enumerate(guess)]) == list(self.num):
                return CycNum(d, guess, self.den)
            if np.abs(A @ sol - b).max() > 1e-3 * (1 + np.abs(b).max()):
                return None
        sol = _solve_columns(cols, list(self.num))
        if sol is None:
            return None
        return CycNum.from_coeffs(d, [s / self.den for s in sol])

    def descend(self) -> CycNum:
        """Rewrite in the smallest cyclotomic field containing this element."""
        if self._canon is None:
            if self.is_rational():
                self._canon = self._descend_to(1)
            else:
                for d in divisors(self.order):
                    if d % 4 == 2:
                        continue
                    res = self._descend_to(d)
                    if res is not None:
                        self._canon = res
                        break
            self._canon._canon = self._canon
        return self._canon

    def conductor(self) -> int:
        return self.descend().order

    # arithmetic -------------------------------------------------------
    def _unify(self, other) -> tuple[CycNum, CycNum]:
        other = CycNum.coerce(other)
        if self.order == other.order:
            return self, other
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        try:
            a, b = self._unify(other)
        except TypeError:
            return NotImplemented
        d = lcm(a.den, b.den)
        fa, fb = d // a.den, d // b.den
        return CycNum(a.order, [x * fa + y * fb for x, y in zip(a.num, b.num)], d)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-c for c in self.num], self.den, _normalized=True)

    def __sub__(self, other):
        try:
            return self + (-CycNum.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b = self._unify(other)
        except TypeError:
            return NotImplemented
        if b.is_rational():
            a, b = b, a
        if a.is_rational():
            c = a.num[0]
            return CycNum(b.order, [c * x for x in b.num], a.den * b.den)
        n = a.order
        phi = len(a.num)
        if phi >= 8:
            acc = _mul_int64(n, a.num, b.num)
            if acc is not None:
                return CycNum(n, acc, a.den * b.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        if len(prod) > phi:
            acc = _reduce(n, enumerate(prod[phi:], start=phi))
            for i in range(phi):
                acc[i] += prod[i]
        else:
            acc = prod
        return CycNum(n, acc, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycNum.rational(Fraction(self.den, self.num[0]), self.order)
        n = self.order
        if len(self.num) >= 8:
            guess = _float_inverse(n, self.num)
            if guess is not None:
                u, d = CycNum(n, guess[:-1]), guess[-1]
                if u * CycNum(n, self.num) == CycNum.rational(d, n):
                    return CycNum(n, u.num, u.den * d) * self.den
        a = CycNum(n, self.num)
        for cand in _modular_inverse(n, self.num):
            u = CycNum.from_coeffs(n, cand)
            if u * a == 1:
                return u * self.den
        inv = _poly_inverse_mod([Fraction(c, self.den) for c in self.num], list(cyclotomic_poly(n)))
        inv += [Fraction(0)] * (totient(n) - len(inv))
        return CycNum.from_coeffs(n, inv)

    def __truediv__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (CycNum, int, Fraction)):
            return NotImplemented
        a, b = self._unify(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        c = self.descend()
        if c.order == 1:
            return hash(Fraction(c.num[0], c.den))
        return hash((c.order, c.num, c.den))

    def __bool__(self):
        return not self.is_zero()

    # Galois -----------------------------------------------------------
    def galois(self, k: int) -> CycNum:
        """Apply zeta_N -> zeta_N^k (k must be a unit mod N)."""
        n = self.order
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        if self.is_rational():
            return self
        return CycNum(n, _reduce(n, [(i * k, c) for i, c in enumerate(self.num)]), self.den,
                      _normalized=True)

    def conjugate(self) -> CycNum:
        return self.galois(-1)


def _solve_columns(cols: list[list[int]], rhs: list[int]) -> list[Fraction] | None:
    """Solve sum_j v_j * cols[j] = rhs exactly; None if inconsistent."""
    m = len(rhs)
    n = len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][n] for i in range(r, m)):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = rows[i][n]
    return sol


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_inverse_mod(a: list[Fraction], m: list[int]) -> list[Fraction]:
    # extended Euclid over Q[x]: returns u with u*a = 1 mod m
    r0, r1 = _trim([Fraction(c) for c in m]), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q = [Fraction(0)] * (len(r0) - len(r1) + 1)
        r = list(r0)
        lead = r1[-1]
        for i in range(len(r) - len(r1), -1, -1):
            c = r[i + len(r1) - 1] / lead
            q[i] = c
            if c:
                for j, y in enumerate(r1):
                    r[i + j] -= c * y
        r = _trim(r[: len(r1) - 1])
        qs = [Fraction(0)] * (len(q) + len(s1))
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    qs[i + j] += x * y
        s_new = [Fraction(0)] * max(len(s0), len(qs))
        for i, x in enumerate(s0):
            s_new[i] += x
        for i, x in enumerate(qs):
            s_new[i] -= x
        r0, r1 = r1, r
        s0, s1 = s1, _trim(s_new)
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


# special values ---------------------------------------------------------


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.zeta(n, k)


def two_cos(k: int, n: int) -> CycNum:
    """2cos(pi k / n) = zeta_{2n}^k + zeta_{2n}^{-k}."""
    if n < 1:
        raise ValueError("n must be positive")
    return CycNum(2 * n, _reduce(2 * n, [(k, 1), (-k, 1)]))


def two_sin(k: int, n: int) -> CycNum:
    """2sin(pi k / n) = -zeta_4 (zeta_{2n}^k - zeta_{2n}^{-k})."""
    if n < 1:
        raise ValueError("n must be positive")
    order = lcm(4, 2 * n)
    s = order // (2 * n)
    q = order // 4
    # -zeta_4 * zeta^k = -zeta^(q + s k), -zeta_4 * -zeta^-k = +zeta^(q - s k)
    return CycNum(order, _reduce(order, [(q + s * k, -1), (q - s * k, 1)]))


def two_cos_rational(r) -> CycNum:
    r = Fraction(r)
    return two_cos(r.numerator, r.denominator)


def two_sin_rational(r) -> CycNum:
    r = Fraction(r)
    return two_sin(r.numerator, r.denominator)


# Galois group -----------------------------------------------------------


@dataclass(frozen=True)
class GaloisElement:
    order: int
    exponent: int

    def __post_init__(self):
        if gcd(self.exponent, self.order) != 1:
            raise ValueError(f"{self.exponent} is not a unit modulo {self.order}")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def compose(self, other: GaloisElement) -> GaloisElement:
        if other.order != self.order:
            raise ValueError("Galois elements of different orders")
        return GaloisElement(self.order, self.exponent * other.exponent)

    def __call__(self, a) -> CycNum:
        return galois_apply(self, a)


def galois_apply(sigma: GaloisElement, a) -> CycNum:
    a = CycNum.coerce(a)
    if a.order != sigma.order:
        if sigma.order % a.order:
            raise ValueError("element not in the field acted on")
        a = a.lift(sigma.order)
    return a.galois(sigma.exponent)


def common_order(elements: Iterable) -> tuple[int, list[CycNum]]:
    elems = [CycNum.coerce(e) for e in elements]
    n = 1
    for e in elems:
        n = lcm(n, e.order)
    return n, [e.lift(n) for e in elems]


def conductor(elements: Iterable) -> int:
    """Smallest N such that every element lies in Q(zeta_N)."""
    n = 1
    for e in elements:
        n = lcm(n, CycNum.coerce(e).conductor())
    # lcm of conductors may be 2 mod 4 only through Q(zeta_2) = Q
    return n // 2 if n % 4 == 2 else n


def subfield_degree(elements: Iterable) -> int:
    """[Q(elements) : Q] via the Galois stabilizer inside the smallest common cyclotomic field."""
    elems = [CycNum.coerce(e) for e in elements]
    n = conductor(elems)
    if n == 1:
        return 1
    elems = [e.descend().lift(n) for e in elems]
    stab = sum(1 for k in units(n) if all(e.galois(k) == e for e in elems))
    return totient(n) // stab


# field descriptors ------------------------------------------------------


class CyclotomicField:
    """Descriptor for the union of all Q(zeta_N); operands are lifted on demand."""

    name = "cyclotomic"
    characteristic = 0

    @property
    def zero(self) -> CycNum:
        return CycNum.rational(0)

    @property
    def one(self) -> CycNum:
        return CycNum.rational(1)

    def coerce(self, x) -> CycNum:
        if isinstance(x, dict):
            return CycNum.from_json(x)
        return CycNum.coerce(x)

    def to_json(self, x: CycNum):
        return x.to_json()

    def __eq__(self, other):
        return isinstance(other, CyclotomicField)

    def __hash__(self):
        return hash("cyclotomic")

    def __repr__(self):
        return "CYC"


class RationalField:
    name = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, CycNum):
            return x.to_fraction()
        return Fraction(x)

    def to_json(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


CYC = CyclotomicField()
QQ = RationalField()
