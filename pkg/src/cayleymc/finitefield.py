"""Prime fields F_p and their quadratic extensions F_{p^2}."""

from __future__ import annotations

from random import Random
from fractions import Fraction
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if n % d == 0:
            return n == d
    d = 17
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GF:
    """F_{p^k} for k in {1, 2}; F_{p^2} is F_p[t]/(t^2 - r) with r a non-residue."""

    characteristic: int

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p) or p == 2:
            raise ValueError(f"{p} is not an odd prime")
        if k not in (1, 2):
            raise ValueError("only F_p and F_{p^2} are supported")
        self.p = p
        self.k = k
        self.characteristic = p
        self.q = p**k
        self.r = _nonresidue(p) if k == 2 else 0
        self.name = f"GF({p}^{k})" if k > 1 else f"GF({p})"
        self._nonsquare = None

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))

    def __repr__(self):
        return self.name

    @property
    def zero(self) -> FFElem:
        return FFElem(self, 0, 0)

    @property
    def one(self) -> FFElem:
        return FFElem(self, 1, 0)

    @property
    def gen(self) -> FFElem:
        """The adjoined square root t of the non-residue (F_{p^2} only)."""
        if self.k != 2:
            raise ValueError("F_p has no extension generator")
        return FFElem(self, 0, 1)

    def coerce(self, x) -> FFElem:
        if isinstance(x, FFElem):
            if x.field == self:
                return x
            if x.field.p == self.p and x.field.k == 1:
                return FFElem(self, x.a, 0)
            raise ValueError(f"cannot coerce {x.field} element into {self}")
        if isinstance(x, int):
            return FFElem(self, x % self.p, 0)
        if isinstance(x, (Fraction, str)):
            x = Fraction(x)
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return FFElem(self, x.numerator * pow(x.denominator, -1, self.p) % self.p, 0)
        if isinstance(x, (tuple, list)) and len(x) == 2:
            return FFElem(self, int(x[0]) % self.p, int(x[1]) % self.p)
        if hasattr(x, "to_fraction"):
            return self.coerce(x.to_fraction())
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def to_json(self, x: FFElem):
        return [x.a, x.b] if self.k == 2 else x.a

    def elements(self):
        for b in range(self.p if self.k == 2 else 1):
            for a in range(self.p):
                yield FFElem(self, a, b)

    def random(self, rng: Random) -> FFElem:
        return FFElem(self, rng.randrange(self.p), rng.randrange(self.p) if self.k == 2 else 0)

    def nonsquare(self) -> FFElem:
        if self._nonsquare is None:
            for e in self.elements():
                if e and not e.is_square():
                    self._nonsquare = e
                    break
        return self._nonsquare


@lru_cache(maxsize=None)
def _nonresidue(p: int) -> int:
    return next(r for r in range(2, p) if pow(r, (p - 1) // 2, p) == p - 1)


class FFElem:
    __slots__ = ("field", "a", "b")

    def __init__(self, field: GF, a: int, b: int = 0):
        self.field = field
        self.a = a
        self.b = b

    def _co(self, other):
        if isinstance(other, FFElem):
            if other.field is self.field or other.field == self.field:
                return other
            if other.field.p == self.field.p:
                if other.field.k == 1:
                    return FFElem(self.field, other.a, 0)
                if self.field.k == 1:
                    raise TypeError("extension element combined with base element on the left")
            raise TypeError(f"mixed fields {self.field} and {other.field}")
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElem(self.field, (self.a + o.a) % p, (self.b + o.b) % p)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, -self.a % p, -self.b % p)

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElem(self.field, (self.a - o.a) % p, (self.b - o.b) % p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        f = self.field
        p = f.p
        if f.k == 1:
            return FFElem(f, self.a * o.a % p, 0)
        return FFElem(f, (self.a * o.a + f.r * self.b * o.b) % p, (self.a * o.b + self.b * o.a) % p)

    __rmul__ = __mul__

    def norm(self) -> int:
        f = self.field
        return (self.a * self.a - f.r * self.b * self.b) % f.p

    def inverse(self) -> FFElem:
        if not self:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        f = self.field
        p = f.p
        if f.k == 1:
            return FFElem(f, pow(self.a, -1, p), 0)
        n = pow(self.norm(), -1, p)
        return FFElem(f, self.a * n % p, -self.b * n % p)

    def __truediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.field.p == other.field.p and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            try:
                o = self.field.coerce(other)
            except ZeroDivisionError:
                return False
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self):
        return bool(self.a or self.b)

    def is_zero(self) -> bool:
        return not (self.a or self.b)

    def __repr__(self):
        if self.field.k == 1 or not self.b:
            return str(self.a)
        return f"{self.a}+{self.b}t"

    def frobenius(self) -> FFElem:
        return self**self.field.p

    def is_square(self) -> bool:
        if not self:
            return True
        return self ** ((self.field.q - 1) // 2) == 1

    def sqrt(self) -> FFElem | None:
        """A square root (Tonelli-Shanks), or None if this is a non-square."""
        if not self:
            return self
        if not self.is_square():
            return None
        q = self.field.q
        s, t = 0, q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.field.nonsquare()
        c = z**t
        x = self ** ((t + 1) // 2)
        b = self**t
        m = s
        while b != 1:
            i, bb = 0, b
            while bb != 1:
                bb = bb * bb
                i += 1
            g = c ** (1 << (m - i - 1))
            x = x * g
            c = g * g
            b = b * c
            m = i
        return x
