"""Dense univariate polynomials over an exact field (Q, cyclotomic, or finite)."""

from __future__ import annotations

import random
from typing import Sequence


class Poly:
    __slots__ = ("field", "c")

    def __init__(self, field, coeffs: Sequence = ()):
        cs = [field.coerce(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.c = tuple(cs)

    @classmethod
    def _raw(cls, field, coeffs: list) -> Poly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.field = field
        p.c = tuple(coeffs)
        return p

    @classmethod
    def x(cls, field) -> Poly:
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, a) -> Poly:
        return cls(field, [a])

    @classmethod
    def from_roots(cls, field, roots) -> Poly:
        p = cls.const(field, 1)
        for r in roots:
            p = p * cls._raw(field, [-field.coerce(r), field.one])
        return p

    # basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self):
        return self.c[-1] if self.c else self.field.zero

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else self.field.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        try:
            return self.c == Poly.const(self.field, other).c
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"({a})" + (f"*x^{i}" if i > 1 else "*x" if i == 1 else ""))
        return " + ".join(reversed(terms)) if terms else "0"

    def to_json(self) -> list:
        return [self.field.to_json(a) for a in self.c]

    # arithmetic -------------------------------------------------------
    def _co(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(self.field, other)

    def __add__(self, other):
        o = self._co(other)
        n = max(len(self.c), len(o.c))
        z = self.field.zero
        return Poly._raw(self.field, [(self.c[i] if i < len(self.c) else z) + (o.c[i] if i < len(o.c) else z)
                                      for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            s = self.field.coerce(other)
            return Poly._raw(self.field, [a * s for a in self.c])
        if not self.c or not other.c:
            return Poly._raw(self.field, [])
        out = [self.field.zero] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._co(other)
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(o.c) - 1
        if len(r) <= dq:
            return Poly._raw(self.field, []), self
        inv = self.field.one / o.c[-1]
        q = [self.field.zero] * (len(r) - dq)
        for i in range(len(r) - 1, dq - 1, -1):
            a = r[i]
            if a:
                f = a * inv
                q[i - dq] = f
                for j, b in enumerate(o.c):
                    if b:
                        r[i - dq + j] = r[i - dq + j] - f * b
        return Poly._raw(self.field, q), Poly._raw(self.field, r[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> Poly:
        if not self.c:
            return self
        inv = self.field.one / self.c[-1]
        return Poly._raw(self.field, [a * inv for a in self.c])

    def deriv(self) -> Poly:
        return Poly._raw(self.field, [a * i for i, a in enumerate(self.c)][1:])

    def __call__(self, x):
        acc = self.field.zero if not self.c else self.c[-1]
        for a in reversed(self.c[:-1]):
            acc = acc * x + a
        return acc

    def compose(self, other: Poly) -> Poly:
        acc = Poly._raw(self.field, [])
        for a in reversed(self.c):
            acc = acc * other + a
        return acc

    def powmod(self, e: int, mod: Poly) -> Poly:
        result = Poly.const(self.field, 1) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def map_coeffs(self, field, fn=None) -> Poly:
        fn = fn or field.coerce
        return Poly(field, [fn(a) for a in self.c])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def pth_root(f: Poly) -> Poly:
    """g with g^p = f, for f over a finite field of characteristic p with f' = 0."""
    F = f.field
    p = F.characteristic
    e = F.q // p
    return Poly._raw(F, [f.c[i] ** e for i in range(0, len(f.c), p)])


def radical(f: Poly) -> Poly:
    """Monic squarefree polynomial with the same roots as f."""
    if f.degree <= 0:
        return Poly.const(f.field, 1)
    d = f.deriv()
    if not d:
        return radical(pth_root(f))
    g = poly_gcd(f, d)
    r1 = f.exact_div(g).monic()
    if g.degree <= 0:
        return r1
    return poly_lcm(r1, radical(g))


def roots_in_field(f: Poly, seed: int = 0) -> list:
    """Distinct roots of f lying in its finite coefficient field, sorted by representation."""
    F = f.field
    if f.degree <= 0:
        return []
    x = Poly.x(F)
    h = poly_gcd(f, x.powmod(F.q, f) - x)
    rng = random.Random(seed)
    out = []
    stack = [h]
    while stack:
        g = stack.pop()
        if g.degree <= 0:
            continue
        if g.degree == 1:
            out.append(-g.c[0] / g.c[1])
            continue
        while True:
            delta = F.random(rng)
            w = (x + delta).powmod((F.q - 1) // 2, g) - 1
            d = poly_gcd(g, w)
            if 0 < d.degree < g.degree:
                stack.extend([d, g.exact_div(d)])
                break
    return sorted(out, key=lambda r: (getattr(r, "b", 0), getattr(r, "a", 0)))
