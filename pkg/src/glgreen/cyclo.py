"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are stored as rational coordinate vectors in the power basis
1, z, ..., z^(phi(N)-1) of Q[x]/Phi_N(x), so equality is coordinate
comparison.  Only what the Green tables need is provided: ring and field
operations, roots of unity, Galois twists z -> z^t, and rationality tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError

_F0 = Fraction(0)
_F1 = Fraction(1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Dense integer coefficient tuple of Phi_n, low degree first."""
    if n < 1:
        raise ValidationError("cyclotomic index must be >= 1")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    num = [-_F1] + [_F0] * (n - 1) + [_F1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_div_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    out = [_F0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        out[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
    if any(a):
        raise ValidationError("inexact polynomial division")
    return out


def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Coordinates of z^k, k = 0..n-1, in the power basis of Q[x]/Phi_n."""
    deg = _phi_degree(n)
    phi = cyclotomic_polynomial(n)
    rows = []
    row = [_F1] + [_F0] * (deg - 1) if deg > 0 else []
    for _ in range(n):
        rows.append(tuple(row))
        # multiply by x modulo Phi_n
        new = [_F0] * deg
        carry = row[deg - 1] if deg > 0 else _F0
        for i in range(deg - 1, 0, -1):
            new[i] = row[i - 1]
        if deg > 0:
            new[0] = _F0
        if carry != 0:
            for i in range(deg):
                new[i] -= carry * phi[i]
        row = new
    return tuple(rows)


class Cyc:
    """An element of Q(zeta_N) in canonical power-basis coordinates."""

    __slots__ = ("n", "vec")

    def __init__(self, n: int, vec):
        deg = _phi_degree(n)
        v = list(vec)
        if len(v) != deg:
            raise ValidationError(f"expected {deg} coordinates for N={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vec", tuple(v))

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(n: int, c) -> "Cyc":
        c = Fraction(c)
        deg = _phi_degree(n)
        return Cyc(n, [c] + [_F0] * (deg - 1)) if deg else Cyc(n, [])

    @staticmethod
    def root(n: int, k: int = 1) -> "Cyc":
        """zeta_N^k."""
        rows = _reduction_rows(n)
        return Cyc(n, rows[k % n])

    @staticmethod
    def root_of_unity(order: int, k: int, field_n: int) -> "Cyc":
        """zeta_order^k expressed inside Q(zeta_field_n); order must divide field_n."""
        if field_n % order != 0:
            raise ValidationError(f"{order} does not divide ambient modulus {field_n}")
        return Cyc.root(field_n, (field_n // order) * (k % order))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.vec)

    def __bool__(self):
        return not self.is_zero()

    def as_rational(self) -> Fraction:
        if any(c != 0 for c in self.vec[1:]):
            raise ValidationError(f"{self} is not rational")
        return self.vec[0] if self.vec else _F0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(self.n, other)
        if not isinstance(other, Cyc):
            return NotImplemented
        if self.n != other.n:
            return self._to(lcm := _lcm(self.n, other.n)) == other._to(lcm)
        return self.vec == other.vec

    def __hash__(self):
        return hash((self.n, self.vec))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(self.n, other)
        if isinstance(other, Cyc):
            if other.n != self.n:
                raise ValidationError("mixed cyclotomic moduli; embed first")
            return other
        raise TypeError(f"cannot coerce {other!r} to Cyc")

    def __add__(self, other):
        o = self._coerce(other)
        return Cyc(self.n, [a + b for a, b in zip(self.vec, o.vec)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-a for a in self.vec])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        deg = len(self.vec)
        if deg == 0:
            return self
        prod = [_F0] * (2 * deg - 1)
        for i, a in enumerate(self.vec):
            if a == 0:
                continue
            for j, b in enumerate(o.vec):
                if b != 0:
                    prod[i + j] += a * b
        phi = cyclotomic_polynomial(self.n)
        for k in range(len(prod) - 1, deg - 1, -1):
            c = prod[k]
            if c != 0:
                for i in range(deg + 1):
                    prod[k - deg + i] -= c * phi[i]
        return Cyc(self.n, prod[:deg])

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Field inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        deg = len(self.vec)
        if deg == 0:
            raise ZeroDivisionError("inverse in trivial field")
        a = list(cyclotomic_polynomial(self.n))
        b = list(self.vec)
        # extended euclid: s*a + t*b = gcd; want t with t*b = 1 mod a
        s0, s1 = [_F1], [_F0]
        t0, t1 = [_F0], [_F1]
        A, B = a, b
        while any(B):
            q, r = _poly_divmod(A, B)
            A, B = B, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        # A is now the gcd, a nonzero constant for a field element
        while len(A) > 1 and A[-1] == 0:
            A.pop()
        if len(A) != 1 or A[0] == 0:
            raise ValidationError("element not invertible modulo Phi_N")
        inv = [c / A[0] for c in t0]
        inv = (inv + [_F0] * deg)[:deg]
        # reduce mod Phi just in case t0 exceeded the degree
        out = Cyc(self.n, [_F0] * deg)
        for k, c in enumerate(inv):
            if c != 0:
                out = out + Cyc(self.n, _reduction_rows(self.n)[k % self.n]) * c
        return out

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    # -- Galois ------------------------------------------------------------

    def galois(self, t: int) -> "Cyc":
        """Apply zeta -> zeta^t; t must be a unit modulo N."""
        import math

        if math.gcd(t, self.n) != 1:
            raise ValidationError(f"{t} is not a unit mod {self.n}")
        rows = _reduction_rows(self.n)
        deg = len(self.vec)
        acc = [_F0] * deg
        # write self in the group-ring spanning set: power basis k -> z^k
        for k, c in enumerate(self.vec):
            if c == 0:
                continue
            row = rows[(t * k) % self.n]
            for i in range(deg):
                acc[i] += c * row[i]
        return Cyc(self.n, acc)

    def conjugate(self) -> "Cyc":
        return self.galois(self.n - 1) if self.n > 1 else self

    def _to(self, m: int) -> "Cyc":
        """Embed into Q(zeta_m); N must divide m."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise ValidationError(f"{self.n} does not divide {m}")
        rows = _reduction_rows(m)
        deg = _phi_degree(m)
        acc = [_F0] * deg
        step = m // self.n
        for k, c in enumerate(self.vec):
            if c == 0:
                continue
            row = rows[(step * k) % m]
            for i in range(deg):
                acc[i] += c * row[i]
        return Cyc(m, acc)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.vec):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                zp = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(zp)
                elif c == -1:
                    parts.append(f"-{zp}")
                else:
                    parts.append(f"{c}*{zp}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Cyc[{self.n}]({self})"


def _lcm(a: int, b: int) -> int:
    import math

    return a * b // math.gcd(a, b)


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    bb = b[:]
    while len(bb) > 1 and bb[-1] == 0:
        bb.pop()
    if bb == [_F0] or not bb:
        raise ZeroDivisionError
    q = [_F0] * max(1, len(a) - len(bb) + 1)
    while len(a) >= len(bb) and any(a):
        shift = len(a) - len(bb)
        f = a[-1] / bb[-1]
        q[shift] = f
        for i, c in enumerate(bb):
            a[shift + i] -= f * c
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if all(c == 0 for c in a):
            a = [_F0]
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else _F0) - (b[i] if i < len(b) else _F0) for i in range(n)
    ]
