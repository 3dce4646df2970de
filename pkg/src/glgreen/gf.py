"""Small finite fields with exact table arithmetic, and dense linear algebra
over them.

Elements of GF(p^e) are integers 0..p^e-1 encoding coefficient vectors of
F_p[x]/(f) in base p, with f the lexicographically smallest monic irreducible
of degree e.  Fields up to a few thousand elements get full multiplication
tables; everything the oracles enumerate fits well inside that.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BoundError, ValidationError

_TABLE_LIMIT = 256


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mulmod(a: tuple, b: tuple, f: tuple, p: int) -> tuple:
    e = len(f) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    # reduce modulo monic f
    for k in range(len(out) - 1, e - 1, -1):
        c = out[k]
        if c:
            for i in range(e + 1):
                out[k - e + i] = (out[k - e + i] - c * f[i]) % p
    out = out[:e]
    while len(out) < e:
        out.append(0)
    return tuple(out)


def _poly_powmod(a: tuple, n: int, f: tuple, p: int) -> tuple:
    e = len(f) - 1
    result = tuple([1] + [0] * (e - 1)) if e > 0 else ()
    base = a
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        n >>= 1
    return result


def _poly_gcd_fp(a: list[int], b: list[int], p: int) -> list[int]:
    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a[:]), trim(b[:])
    while b:
        inv = pow(b[-1], p - 2, p)
        r = a[:]
        while len(r) >= len(b) and trim(r):
            if not r:
                break
            shift = len(r) - len(b)
            c = (r[-1] * inv) % p
            for i, x in enumerate(b):
                r[shift + i] = (r[shift + i] - c * x) % p
            r = trim(r)
        a, b = b, r
    return a


def _irreducible(p: int, e: int) -> tuple:
    """Smallest monic irreducible of degree e over F_p (x for e = 1)."""
    if e == 1:
        return (0, 1)
    xx = tuple([0, 1] + [0] * (e - 2))
    for enc in range(p**e):
        coeffs = []
        v = enc
        for _ in range(e):
            coeffs.append(v % p)
            v //= p
        f = tuple(coeffs) + (1,)
        # irreducible iff x^(p^e) == x mod f and gcd(x^(p^(e/l)) - x, f) = 1
        if _poly_powmod(xx, p**e, f, p) != xx:
            continue
        ok = True
        ell = 2
        ee = e
        primes = set()
        while ell * ell <= ee:
            if ee % ell == 0:
                primes.add(ell)
                while ee % ell == 0:
                    ee //= ell
            ell += 1
        if ee > 1:
            primes.add(ee)
        for ell in primes:
            xp = _poly_powmod(xx, p ** (e // ell), f, p)
            diff = [(xp[i] - xx[i]) % p for i in range(e)]
            g = _poly_gcd_fp(diff, list(f), p)
            if len(g) != 1:
                ok = False
                break
        if ok:
            return f
    raise BoundError(f"no irreducible of degree {e} over F_{p} found")


class GF:
    """The finite field of order p^e with integer-encoded elements."""

    def __init__(self, p: int, e: int = 1):
        if not _is_prime(p):
            raise ValidationError(f"{p} is not prime")
        if e < 1:
            raise ValidationError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = _irreducible(p, e)
        self._mul_table = None
        self._inv_table = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    @staticmethod
    @lru_cache(maxsize=None)
    def of_order(q: int) -> "GF":
        for p in range(2, q + 1):
            if _is_prime(p):
                e = 0
                v = q
                while v % p == 0:
                    v //= p
                    e += 1
                if v == 1 and e >= 1:
                    return GF(p, e)
                if q % p == 0:
                    break
        raise ValidationError(f"{q} is not a prime power")

    # -- encoding ------------------------------------------------------------

    def _dec(self, a: int) -> tuple:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _enc(self, v) -> int:
        out = 0
        for c in reversed(list(v)):
            out = out * self.p + (c % self.p)
        return out

    def _build_tables(self):
        q = self.q
        dec = [self._dec(a) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = self._enc(_poly_mulmod(dec[a], dec[b], self.modulus, self.p))
                mul[a][b] = v
                mul[b][a] = v
        self._mul_table = mul
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        da, db = self._dec(a), self._dec(b)
        return self._enc((x + y) % self.p for x, y in zip(da, db))

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        da, db = self._dec(a), self._dec(b)
        return self._enc((x - y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        if self.e == 1:
            return (a * b) % self.p
        return self._enc(_poly_mulmod(self._dec(a), self._dec(b), self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF")
        if self._inv_table is not None:
            return self._inv_table[a]
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        n %= self.q - 1 if a != 0 else 1
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def elements(self):
        return range(self.q)

    def int_embed(self, k: int) -> int:
        """The image of the rational integer k."""
        return k % self.p

    def generator(self) -> int:
        """Smallest multiplicative generator in the integer encoding."""
        target = self.q - 1
        for g in range(2, self.q):
            seen = 1
            x = g
            while x != 1:
                x = self.mul(x, g)
                seen += 1
            if seen == target:
                return g
        raise ValidationError("no generator found (field of order 2?)")


# ---------------------------------------------------------------------------
# Dense linear algebra over a GF instance.  Matrices are lists of row lists.
# ---------------------------------------------------------------------------


def mat_mul(F: GF, a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] = F.add(oi[j], F.mul(x, bt[j]))
    return out


def mat_vec(F: GF, a, v):
    return [
        _dot(F, row, v)
        for row in a
    ]


def _dot(F: GF, row, v):
    acc = 0
    for x, y in zip(row, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_pow(F: GF, a, k: int):
    n = len(a)
    out = mat_identity(n)
    base = [row[:] for row in a]
    while k:
        if k & 1:
            out = mat_mul(F, out, base)
        base = mat_mul(F, base, base)
        k >>= 1
    return out


def mat_inv(F: GF, a):
    n = len(a)
    aug = [row[:] + mat_identity(n)[i] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValidationError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(x, inv) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_det(F: GF, a):
    n = len(a)
    m = [row[:] for row in a]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = F.neg(det)
        det = F.mul(det, m[col][col])
        inv = F.inv(m[col][col])
        for r in range(col + 1, n):
            if m[r][col]:
                f = F.mul(m[r][col], inv)
                m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[col])]
    return det


def rref(F: GF, a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(x, inv) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def mat_rank(F: GF, a) -> int:
    if not a:
        return 0
    return len(rref(F, a)[1])


def kernel_basis(F: GF, a):
    """Basis of the right kernel of the matrix a (list of vectors)."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    red, pivots = rref(F, a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(red[r][fc])
        basis.append(v)
    return basis


def solve_linear(F: GF, a, b):
    """One solution x of a x = b, or None."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    red, pivots = rref(F, aug)
    if cols in pivots:
        return None
    x = [0] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x
