"""Order polynomials and dimension bookkeeping for GL_n, SL_n, SU_n and their
Levi subgroups with all factors of one size.

Everything is symbolic in q.  The characteristic enters only through the
prime-to-p part of n, which callers pass around as data; order polynomials
themselves are characteristic independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError, ValidationError
from .partitions import Partition, class_dims, transpose
from .qpoly import LaurentPoly, RatQ
from .symgroup import perm_from_cycle_type

GL_SPLIT = "GL_split"
SL_SPLIT = "SL_split"
SL_NONSPLIT = "SL_nonsplit"
KINDS = (GL_SPLIT, SL_SPLIT, SL_NONSPLIT)


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    n: int
    p: int | str = "generic"  # a prime, or "generic" meaning coprime to n

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"kind must be one of {KINDS}")
        if self.n < 1:
            raise ValidationError("n must be >= 1")
        if self.p != "generic" and (not isinstance(self.p, int) or self.p < 2):
            raise ValidationError("p must be a prime or 'generic'")

    @property
    def twisted(self) -> bool:
        return self.kind == SL_NONSPLIT

    @property
    def dim(self) -> int:
        return self.n * self.n if self.kind == GL_SPLIT else self.n * self.n - 1


@dataclass(frozen=True)
class LeviSpec:
    """A Levi with m diagonal factors of size d (d*m = n)."""

    d: int
    m: int

    @property
    def n(self) -> int:
        return self.d * self.m


def n_prime(n: int, p) -> int:
    """Largest divisor of n coprime to the characteristic."""
    if p == "generic":
        return n
    while n % p == 0:
        n //= p
    return n


def gl_order(n: int) -> RatQ:
    """|GL_n(F_q)| = q^(n(n-1)/2) * prod (q^i - 1)."""
    poly = LaurentPoly.q(n * (n - 1) // 2)
    for i in range(1, n + 1):
        poly = poly * (LaurentPoly.q(i) - LaurentPoly.const(Fraction(1)))
    return RatQ(poly)


def group_order(spec: GroupSpec) -> RatQ:
    if spec.kind == GL_SPLIT:
        return gl_order(spec.n)
    split = gl_order(spec.n) / (RatQ.q() - 1)
    if spec.kind == SL_SPLIT:
        return split
    # |SU_n| = (-1)^(n-1) |SL_n|(-q)
    twisted = split.subs_neg_q() * RatQ.const((-1) ** (spec.n - 1))
    return twisted


def mat_det_poly(rows: list[list[int]]) -> RatQ:
    """det(q*Id - A) for an integer matrix A, exact, by cofactor expansion."""
    r = len(rows)
    for row in rows:
        if len(row) != r:
            raise ValidationError("matrix must be square")
    q = LaurentPoly.q()
    one = LaurentPoly.const(Fraction(1))

    # entries of q*Id - A as Laurent polynomials
    entries = [
        [
            (q if i == j else LaurentPoly()) - LaurentPoly.const(Fraction(rows[i][j]))
            for j in range(r)
        ]
        for i in range(r)
    ]

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def minor(row_start: int, cols: frozenset) -> LaurentPoly:
        if row_start == r:
            return one
        total = LaurentPoly()
        sign = 1
        for j in sorted(cols):
            e = entries[row_start][j]
            if not e.is_zero():
                sub = minor(row_start + 1, cols - {j})
                term = e * sub
                total = total + (term if sign > 0 else -term)
            sign = -sign
        return total

    return RatQ(minor(0, frozenset(range(r))))


def twisted_torus_order(action: list[list[int]]) -> RatQ:
    """Order polynomial det(q*Id - A) of a torus whose Frobenius acts on the
    cocharacter lattice as q times the finite-order integer matrix A."""
    det = mat_det_poly(action)
    if det.is_zero():
        raise InternalConsistencyError("torus order vanished; A not finite order?")
    return det


def _perm_matrix(w: tuple[int, ...]) -> list[list[int]]:
    m = len(w)
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[w[i]][i] = 1
    return rows


def _mat_mul_int(a, b):
    r = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)] for i in range(r)]


def _restrict_to_sum_zero(a: list[list[int]]) -> list[list[int]]:
    """Restrict a lattice endomorphism of Z^m preserving the sum-zero
    sublattice to the basis e_i - e_(i+1)."""
    m = len(a)
    # images of f_i = e_i - e_{i+1} expressed in f-basis: the f-coordinates of
    # a vector v with sum 0 are partial sums c_k = v_1 + ... + v_k.
    out = []
    for i in range(m - 1):
        v = [a[r][i] - a[r][i + 1] for r in range(m)]
        coords = []
        s = 0
        for k in range(m - 1):
            s += v[k]
            coords.append(s)
        out.append(coords)
    # transpose: columns are images
    return [[out[j][i] for j in range(m - 1)] for i in range(m - 1)]


def levi_lattice_action(
    spec: GroupSpec, levi: LeviSpec, w, twisted: bool
) -> list[list[int]]:
    """Integer matrix of the Frobenius twist acting on the cocharacter lattice
    of the connected centre of the Levi, for the twist w of the relative Weyl
    group S_m.

    Split: the permutation matrix of w.  Non-split: -(w * w0) as a permutation
    matrix, w0 the order reversal.  For SL kinds the action is restricted to
    the rank m-1 sum-zero sublattice.
    """
    if isinstance(w, Partition):
        w = perm_from_cycle_type(w)
    m = levi.m
    if len(w) != m:
        raise ValidationError(f"twist degree {len(w)} != m = {m}")
    if twisted and spec.kind != SL_NONSPLIT:
        raise ValidationError("twisted torus orders require the SL_nonsplit kind")
    if twisted:
        w0 = tuple(range(m - 1, -1, -1))
        v = tuple(w[w0[i]] for i in range(m))  # w o w0
        mat = [[-x for x in row] for row in _perm_matrix(v)]
    else:
        mat = _perm_matrix(w)
    if spec.kind == GL_SPLIT:
        return mat
    return _restrict_to_sum_zero(mat)


def levi_torus_order(spec: GroupSpec, levi: LeviSpec, w, twisted: bool) -> RatQ:
    """|Z^0_(L^w)^F| as a polynomial in q."""
    if levi.n != spec.n:
        raise ValidationError(f"Levi size {levi.n} != n = {spec.n}")
    if levi.m == 1 and spec.kind != GL_SPLIT:
        # rank zero centre: the trivial torus
        return RatQ.one()
    return twisted_torus_order(levi_lattice_action(spec, levi, w, twisted))


@dataclass(frozen=True)
class A0R:
    a0: int
    r: int

    @property
    def a0_plus_r(self) -> int:
        return self.a0 + self.r


def levi_dims(spec: GroupSpec, levi: LeviSpec) -> tuple[int, int, int]:
    """(dim L, dim Z_L, dim C0) for the Levi with m size-d factors; C0 is the
    regular unipotent class of L."""
    d, m = levi.d, levi.m
    if spec.kind == GL_SPLIT:
        dim_l = m * d * d
        dim_z = m
    else:
        dim_l = m * d * d - 1
        dim_z = m - 1
    dim_c0 = m * (d * d - d)
    return dim_l, dim_z, dim_c0


def a0_r(spec: GroupSpec, levi: LeviSpec, lam: Partition) -> A0R:
    """The exponents a0 = -dim Z_L - dim C and r = dim G - dim L + dim C0 +
    dim Z_L attached to the class of Jordan type lam in the given series."""
    if lam.size != spec.n:
        raise ValidationError(f"|lam| = {lam.size} != n = {spec.n}")
    if any(p % levi.d for p in lam.parts):
        raise ValidationError(f"{lam} is not divisible by d = {levi.d}")
    kind = "GL" if spec.kind == GL_SPLIT else "SL"
    dims = class_dims(spec.n, lam, kind)
    dim_l, dim_z, dim_c0 = levi_dims(spec, levi)
    a0 = -dim_z - dims.dim_C
    r = spec.dim - dim_l + dim_c0 + dim_z
    out = A0R(a0=a0, r=r)
    if out.a0_plus_r % 2 != 0:
        raise InternalConsistencyError(f"a0 + r odd for {lam} in {spec}")
    return out


def centralizer_order(kind: str, lam: Partition) -> RatQ:
    """|Z_G(u_lam)^F| as a polynomial in q for a split element u_lam.

    GL_split: q^(sum of squared transpose parts) * prod_i prod_(k<=m_i)
    (1 - q^(-k)).  SL divides by the torus factor (q - 1); the non-split
    kinds substitute -q in the GL factor and divide by (q + 1).
    """
    z = sum(c * c for c in transpose(lam).parts)
    poly = RatQ.q(z)
    for mult in lam.multiplicities().values():
        for k in range(1, mult + 1):
            poly = poly * (RatQ.one() - RatQ.q(-k))
    if kind == GL_SPLIT:
        return poly
    if kind == SL_SPLIT:
        return poly / (RatQ.q() - 1)
    if kind == SL_NONSPLIT:
        gl_twisted = poly.subs_neg_q() * RatQ.const((-1) ** z)
        return gl_twisted / (RatQ.q() + 1)
    raise ValidationError(f"unknown kind {kind!r}")
