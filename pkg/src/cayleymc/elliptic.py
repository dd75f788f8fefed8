"""Legendre curves y^2 = x(x-1)(x-lambda) over Q and small finite fields.

Group law, division polynomials, x-coordinate maps of [m], torsion
x-polynomials, and the degree p^2 map g with g(x(P)) = x([p]P).

Division polynomials are stored in x only: for odd m, psi_m itself; for even
m, f_m = psi_m / (2y).  With G = (2y)^2 = 4 x(x-1)(x-lambda) this gives the
usual recurrences with every even-index factor of 2y collected into G.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .exactalg import QQ
from .finitefield import GF, FFElem, is_prime
from .poly import Poly, poly_gcd, radical


class OffCurveError(ValueError):
    pass


@dataclass(frozen=True)
class ECPoint:
    """Affine point, or the point at infinity when x is None."""

    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json(self):
        if self.is_infinity:
            return "inf"
        return [str(self.x), str(self.y)]


INF = ECPoint()


@dataclass(frozen=True, eq=False)
class LegendreCurve:
    field: object
    lam: object

    def __post_init__(self):
        lam = self.field.coerce(self.lam)
        object.__setattr__(self, "lam", lam)
        if lam == self.field.zero or lam == self.field.one:
            raise ValueError("lambda must differ from 0 and 1")

    def __eq__(self, other):
        return isinstance(other, LegendreCurve) and self.field == other.field and self.lam == other.lam

    def __hash__(self):
        return hash((self.field, self.lam))

    def __repr__(self):
        return f"LegendreCurve({self.field!r}, lambda={self.lam})"

    @property
    def a2(self):
        return -(self.field.one + self.lam)

    @property
    def a4(self):
        return self.lam

    @cached_property
    def cubic(self) -> Poly:
        return Poly.from_roots(self.field, [0, 1, self.lam])

    def rhs(self, x):
        return x * (x - 1) * (x - self.lam)

    def contains(self, P: ECPoint) -> bool:
        return P.is_infinity or P.y * P.y == self.rhs(P.x)

    def point(self, x, y) -> ECPoint:
        P = ECPoint(self.field.coerce(x), self.field.coerce(y))
        if not self.contains(P):
            raise OffCurveError(f"({x}, {y}) is not on {self}")
        return P

    def over(self, F) -> LegendreCurve:
        """The same lambda read in another field (reduction or extension)."""
        return LegendreCurve(F, F.coerce(self.lam))

    def lift_x(self, x0) -> ECPoint | None:
        """A point with x-coordinate x0 over this curve's field, if one exists."""
        x0 = self.field.coerce(x0)
        r = self.rhs(x0)
        if isinstance(r, FFElem):
            y = r.sqrt()
            return None if y is None else ECPoint(x0, y)
        r = Fraction(r)
        if r < 0:
            return None
        ny, dy = _isqrt_exact(r.numerator), _isqrt_exact(r.denominator)
        if ny is None or dy is None:
            return None
        return ECPoint(x0, Fraction(ny, dy))

    def random_point(self, rng: random.Random) -> ECPoint:
        if not isinstance(self.field, GF):
            raise TypeError("random points need a finite base field")
        while True:
            P = self.lift_x(self.field.random(rng))
            if P is not None:
                if rng.random() < 0.5:
                    P = neg(P)
                return P

    def group_order(self) -> int:
        """#E(F), by summing quadratic characters (fine for the small fields used here)."""
        F = self.field
        if not isinstance(F, GF):
            raise TypeError("group order is defined over finite fields")
        if F.k == 2 and self.lam == F.coerce(self.lam.a):
            base = LegendreCurve(GF(F.p), self.lam.a)
            ap = F.p + 1 - base.group_order()
            return F.q + 1 - (ap * ap - 2 * F.p)
        total = F.q + 1
        for x in F.elements():
            r = self.rhs(x)
            if r:
                total += 1 if r.is_square() else -1
        return total


def _isqrt_exact(n: int) -> int | None:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


# group law ----------------------------------------------------------------


def neg(P: ECPoint) -> ECPoint:
    return P if P.is_infinity else ECPoint(P.x, -P.y)


def _add(E: LegendreCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or not P.y:
            return INF
        s = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        s = (Q.y - P.y) / (Q.x - P.x)
    x3 = s * s - E.a2 - P.x - Q.x
    return ECPoint(x3, s * (P.x - x3) - P.y)


def point_add(E: LegendreCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    for R in (P, Q):
        if not E.contains(R):
            raise OffCurveError(f"{R} is not on {E}")
    return _add(E, P, Q)


def scalar_mul(E: LegendreCurve, n: int, P: ECPoint) -> ECPoint:
    """[n]P by double-and-add."""
    if not E.contains(P):
        raise OffCurveError(f"{P} is not on {E}")
    if n < 0:
        n, P = -n, neg(P)
    acc = INF
    while n:
        if n & 1:
            acc = _add(E, acc, P)
        P = _add(E, P, P)
        n >>= 1
    return acc


def _add_twisted(E: LegendreCurve, d, P: ECPoint, Q: ECPoint) -> ECPoint:
    # group law on d y^2 = x(x-1)(x-lambda)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or not P.y:
            return INF
        s = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * d * P.y)
    else:
        s = (Q.y - P.y) / (Q.x - P.x)
    x3 = d * s * s - E.a2 - P.x - Q.x
    return ECPoint(x3, s * (P.x - x3) - P.y)


def scalar_mul_x(E: LegendreCurve, n: int, x0):
    """x([n]P) for a point P with x(P) = x0, or None when [n]P = O.

    P need not be defined over the base field: when x0(x0-1)(x0-lambda) = d
    is not a square, P corresponds to (x0, 1) on the quadratic twist
    d y^2 = x(x-1)(x-lambda), which is isomorphic to E over F(sqrt d).
    """
    x0 = E.field.coerce(x0)
    d = E.rhs(x0)
    P = E.lift_x(x0)
    if P is not None:
        R = scalar_mul(E, abs(n), P)
        return None if R.is_infinity else R.x
    acc, P = INF, ECPoint(x0, E.field.one)
    n = abs(n)
    while n:
        if n & 1:
            acc = _add_twisted(E, d, acc, P)
        P = _add_twisted(E, d, P, P)
        n >>= 1
    return None if acc.is_infinity else acc.x


def point_order(E: LegendreCurve, P: ECPoint, group_order: int | None = None) -> int:
    N = group_order or E.group_order()
    order = N
    for ell in _prime_factors(N):
        while order % ell == 0 and scalar_mul(E, order // ell, P).is_infinity:
            order //= ell
    return order


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# division polynomials -----------------------------------------------------


class _DivisionTable:
    def __init__(self, E: LegendreCurve):
        F = E.field
        b2, b4, b8 = 4 * E.a2, 2 * E.a4, -(E.a4 * E.a4)
        x = Poly.x(F)
        self.G = E.cubic * 4
        self.f = {
            0: Poly(F, []),
            1: Poly.const(F, 1),
            2: Poly.const(F, 1),
            3: Poly(F, [b8, 0, 3 * b4, b2, 3]),
            4: Poly(F, [b4 * b8, b2 * b8, 10 * b8, 0, 5 * b4, b2, 2]),
        }
        self.x = x

    def __call__(self, m: int) -> Poly:
        if m in self.f:
            return self.f[m]
        n = m // 2
        f, G = self, self.G
        if m % 2:
            if n % 2 == 0:
                r = G * G * f(n + 2) * f(n) ** 3 - f(n - 1) * f(n + 1) ** 3
            else:
                r = f(n + 2) * f(n) ** 3 - G * G * f(n - 1) * f(n + 1) ** 3
        else:
            r = f(n) * (f(n + 2) * f(n - 1) ** 2 - f(n - 2) * f(n + 1) ** 2)
        self.f[m] = r
        return r


_TABLES: dict = {}


def _table(E: LegendreCurve) -> _DivisionTable:
    if E not in _TABLES:
        _TABLES[E] = _DivisionTable(E)
    return _TABLES[E]


def division_poly(E: LegendreCurve, m: int) -> Poly:
    """psi_m for odd m; psi_m / (2y) for even m (a polynomial in x)."""
    if m < 1:
        raise ValueError("division polynomial index must be positive")
    return _table(E)(m)


def division_poly_squared(E: LegendreCurve, m: int) -> Poly:
    """psi_m^2 as a polynomial in x, with y^2 replaced by x(x-1)(x-lambda)."""
    f = division_poly(E, m)
    return f * f * (_table(E).G if m % 2 == 0 else 1)


@dataclass(frozen=True)
class RationalMap:
    """x -> num(x) / den(x) on P^1, with coprime num, den and monic den."""

    num: Poly
    den: Poly

    @classmethod
    def reduced(cls, num: Poly, den: Poly) -> RationalMap:
        if not den:
            raise ZeroDivisionError("rational map with zero denominator")
        g = poly_gcd(num, den) if num else den.monic()
        num, den = num.exact_div(g), den.exact_div(g)
        c = den.lead
        return cls(num * (num.field.one / c), den.monic())

    @property
    def field(self):
        return self.num.field if self.num else self.den.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __call__(self, x):
        """Evaluate on P^1; None stands for infinity."""
        if x is None:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return None
            if dn < dd:
                return self.field.zero
            return self.num.lead / self.den.lead
        d = self.den(x)
        if not d:
            return None
        return self.num(x) / d

    def is_separable(self) -> bool:
        """False when both numerator and denominator are polynomials in x^p."""
        p = getattr(self.field, "characteristic", 0)
        if p == 0:
            return True
        return any(i % p for poly in (self.num, self.den) for i, a in enumerate(poly.c) if a)

    def compose(self, other: RationalMap) -> RationalMap:
        """self o other."""
        d = self.degree
        u, v = other.num, other.den
        F = self.field

        def hom(P: Poly) -> Poly:
            acc = Poly(F, [])
            for i, a in enumerate(P.c):
                if a:
                    acc = acc + u**i * v ** (d - i) * a
            return acc

        return RationalMap.reduced(hom(self.num), hom(self.den))

    def reduce_mod(self, F) -> RationalMap:
        return RationalMap.reduced(self.num.map_coeffs(F), self.den.map_coeffs(F))

    def to_json(self) -> dict:
        return {"num": [str(a) for a in self.num.c], "den": [str(a) for a in self.den.c],
                "degree": self.degree}


def _mult_x_fraction(E: LegendreCurve, m: int) -> tuple[Poly, Poly]:
    f = _table(E)
    G, x = f.G, f.x
    fm = f(m)
    if m % 2:
        return x * fm * fm - G * f(m - 1) * f(m + 1), fm * fm
    return x * fm * fm * G - f(m - 1) * f(m + 1), fm * fm * G


def mult_x_map(E: LegendreCurve, m: int) -> RationalMap:
    """x o [m] as a reduced rational map."""
    if m < 1:
        raise ValueError("m must be positive")
    return RationalMap.reduced(*_mult_x_fraction(E, m))


def psi_p_map(E: LegendreCurve, p: int) -> RationalMap:
    """The map g on P^1 with g(x(P)) = x([p]P), p an odd prime.

    In characteristic p the map is inseparable; see RationalMap.is_separable.
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return mult_x_map(E, p)


def torsion_x_poly(E: LegendreCurve, m: int) -> Poly:
    """Squarefree monic polynomial whose roots are x(P) for P != O with [m]P = O."""
    if m < 2:
        raise ValueError("torsion polynomial needs m >= 2")
    f = division_poly(E, m)
    if m % 2 == 0:
        f = f * E.cubic
    return radical(f)


@dataclass(frozen=True)
class TorsionReport:
    order: int | None
    point: ECPoint | None
    group_order: int | None

    def to_json(self) -> dict:
        return {"order": self.order,
                "point": None if self.point is None else self.point.to_json(),
                "group_order": self.group_order}


def is_torsion_x(E: LegendreCurve, x0, m_bound: int) -> TorsionReport:
    """Exact order of a point over x0 if it is at most m_bound.

    x0 is lifted to E(F_p), or to E(F_{p^2}) when x(x-1)(x-lambda) is not a
    square in F_p; the order then comes from factoring the group order.  If
    no lift exists the order is found on the quadratic twist.
    """
    F = E.field
    if not isinstance(F, GF):
        raise TypeError("is_torsion_x works over finite fields")
    x0 = F.coerce(x0)
    P = E.lift_x(x0)
    curve = E
    if P is None and F.k == 1:
        curve = E.over(GF(F.p, 2))
        P = curve.lift_x(x0)
    if P is None:
        # no lift over F_{p^2}: work on the quadratic twist through x0
        for m in range(2, m_bound + 1):
            if scalar_mul_x(curve, m, x0) is None:
                return TorsionReport(m, None, None)
        return TorsionReport(None, None, None)
    N = curve.group_order()
    order = point_order(curve, P, N)
    return TorsionReport(order if order <= m_bound else None, P, N)


# flow-diagram check --------------------------------------------------------


@dataclass
class FlowReport:
    lam: str
    p: int
    q: int
    samples: int
    diagram_ok: int
    fixes_branch_points: bool
    degree: int
    separable: bool
    reduction_agrees: bool | None
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.diagram_ok == self.samples and self.fixes_branch_points and self.degree == self.p**2
                and self.reduction_agrees is not False)

    def to_json(self) -> dict:
        return {"lambda": self.lam, "p": self.p, "field": self.q, "samples": self.samples,
                "diagram_ok": self.diagram_ok, "fixes_branch_points": self.fixes_branch_points,
                "degree": self.degree, "separable": self.separable,
                "reduction_agrees": self.reduction_agrees, "failures": self.failures[:5]}


def flow_check(lam, p: int, q: int, samples: int = 100, seed: int = 0) -> FlowReport:
    """Sample P in E(F_{q^2}) and compare g(x(P)) with x([p]P).

    The map g is computed directly over F_q; when q != p it is also computed
    over Q, reduced mod q and compared.
    """
    Fq = GF(q)
    Fq2 = GF(q, 2)
    E = LegendreCurve(Fq, lam)
    E2 = E.over(Fq2)
    g = psi_p_map(E, p)
    g2 = g.reduce_mod(Fq2)
    agrees = None
    if q != p:
        gQ = psi_p_map(LegendreCurve(QQ, Fraction(lam)), p)
        agrees = gQ.reduce_mod(Fq) == g
    rng = random.Random(seed)
    ok, failures = 0, []
    for _ in range(samples):
        P = E2.random_point(rng)
        lhs = g2(P.x)
        R = scalar_mul(E2, p, P)
        rhs = None if R.is_infinity else R.x
        if lhs == rhs:
            ok += 1
        else:
            failures.append({"point": P.to_json()})
    fixed = all(g(Fq.coerce(t)) == Fq.coerce(t) for t in (0, 1, E.lam)) and g(None) is None
    return FlowReport(str(Fraction(lam)), p, q, samples, ok, fixed, g.degree, g.is_separable(), agrees, failures)
