"""Generalized Springer series data for GL_n and SL_n.

A series is indexed by a divisor d of the prime-to-p part of n.  Its block
consists of one datum per d-divisible Jordan type lambda, carrying the S_(n/d)
irrep label mu = lambda/d, the local-system exponent, and the exponents a0, r.
Blocks are sorted by increasing orbit dimension (lexicographic tie-break),
which refines the closure order and is what makes the solved P unitriangular.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .cyclo import Cyc
from .errors import ValidationError
from .partitions import Partition, class_dims, d_divisible_partitions, d_quotient, n_invariant
from .reductive import (
    GL_SPLIT,
    SL_NONSPLIT,
    SL_SPLIT,
    GroupSpec,
    LeviSpec,
    a0_r,
    n_prime,
)
from .symgroup import a_value

SPLIT = "split"
NONSPLIT = "nonsplit"
F_KINDS = (SPLIT, NONSPLIT)


@dataclass(frozen=True)
class SeriesLabel:
    d: int
    cuspidal: bool

    def __str__(self):
        return f"d={self.d}" + (" (cuspidal)" if self.cuspidal else "")


def enumerate_series(n: int, p) -> list[SeriesLabel]:
    """One series per divisor d of the prime-to-p part of n."""
    np_ = n_prime(n, p)
    return [
        SeriesLabel(d=d, cuspidal=(d == n))
        for d in range(1, np_ + 1)
        if np_ % d == 0
    ]


@dataclass(frozen=True)
class SpringerDatum:
    lam: Partition
    rho_exponent: int  # exponent mod n_prime_lambda of the local-system character
    mu: Partition  # lambda/d, the S_m irrep label
    n_prime_lambda: int
    a_E: int
    d_u: int
    delta: int
    a0: int
    r: int
    dim_C: int

    @property
    def label(self) -> str:
        return str(self.lam)

    def as_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "rho_exponent": self.rho_exponent,
            "mu": str(self.mu),
            "n_prime_lambda": self.n_prime_lambda,
            "a_E": self.a_E,
            "d_u": self.d_u,
            "delta": self.delta,
            "a0": self.a0,
            "r": self.r,
            "dim_C": self.dim_C,
        }


def _group_kind(kind_or_fkind: str) -> str:
    if kind_or_fkind in (GL_SPLIT, SL_SPLIT, SL_NONSPLIT):
        return kind_or_fkind
    raise ValidationError(f"unknown group kind {kind_or_fkind!r}")


def spec_for(n: int, p, f_kind: str, gl: bool = False) -> GroupSpec:
    if f_kind not in F_KINDS:
        raise ValidationError(f"F kind must be one of {F_KINDS}")
    if gl:
        if f_kind == NONSPLIT:
            raise ValidationError("the GL engine only supports split F")
        return GroupSpec(GL_SPLIT, n, p)
    return GroupSpec(SL_SPLIT if f_kind == SPLIT else SL_NONSPLIT, n, p)


def enumerate_block(
    n: int, p, eta: SeriesLabel, f_kind: str, gl: bool = False
) -> list[SpringerDatum]:
    """The ordered index set of the series eta.

    Every datum of a live series is stable under both split and non-split
    Frobenius in type A (the stability congruence depends only on d, not on
    lambda), so the two F kinds enumerate the same set.
    """
    if f_kind not in F_KINDS:
        raise ValidationError(f"F kind must be one of {F_KINDS}")
    np_ = n_prime(n, p)
    if np_ % eta.d != 0:
        raise ValidationError(f"d = {eta.d} does not divide n' = {np_}")
    if gl and eta.d != 1:
        raise ValidationError("GL_n carries only the principal (d = 1) series")
    spec = spec_for(n, p, f_kind, gl)
    levi = LeviSpec(d=eta.d, m=n // eta.d)
    out = []
    for lam in d_divisible_partitions(n, eta.d):
        mu = d_quotient(lam, eta.d)
        npl = math.gcd(np_, *lam.parts)
        if npl % eta.d != 0:
            raise ValidationError(f"series d = {eta.d} has no local system on {lam}")
        exps = a0_r(spec, levi, lam)
        kind = "GL" if gl else "SL"
        dims = class_dims(n, lam, kind)
        a_e = a_value(mu)
        d_u = n_invariant(lam)
        datum = SpringerDatum(
            lam=lam,
            rho_exponent=(npl // eta.d) % npl if npl > 1 else 0,
            mu=mu,
            n_prime_lambda=npl,
            a_E=a_e,
            d_u=d_u,
            delta=a_e - d_u,
            a0=exps.a0,
            r=exps.r,
            dim_C=dims.dim_C,
        )
        assert exps.a0_plus_r == 2 * d_u
        out.append(datum)
    out.sort(key=lambda s: (s.dim_C, s.lam.parts))
    return out


@dataclass(frozen=True)
class ComponentGroup:
    order: int
    multiplier_sign: int  # +1: F acts by q on Z_(n'_lambda); -1: by -q

    def tau_residue(self, q_residue: int) -> int:
        return (self.multiplier_sign * q_residue) % self.order if self.order > 1 else 0

    def twist_classes(self, q_residue: int) -> list[int]:
        """Representatives of the F-twisted conjugacy classes: the cokernel of
        multiplication by (tau - 1) on Z_(n'_lambda)."""
        if self.order == 1:
            return [0]
        t = self.tau_residue(q_residue)
        g = math.gcd(self.order, t - 1)
        return list(range(g))


def component_group(n: int, p, lam: Partition, f_kind: str) -> ComponentGroup:
    if lam.size != n:
        raise ValidationError(f"|{lam}| != {n}")
    npl = math.gcd(n_prime(n, p), *lam.parts)
    return ComponentGroup(order=npl, multiplier_sign=1 if f_kind == SPLIT else -1)


def check_q_residue(n: int, p, eta: SeriesLabel, f_kind: str, q_residue: int) -> int:
    """Validate the residue of q modulo n' against the series.

    The local systems of the series are F-stable exactly when d divides q - 1
    (split) or q + 1 (non-split); a residue violating this has no Y^0 table.
    """
    np_ = n_prime(n, p)
    q_residue %= max(np_, 1)
    if np_ > 1 and math.gcd(q_residue, np_) != 1:
        raise ValidationError(f"q residue {q_residue} is not a unit mod n' = {np_}")
    sign = 1 if f_kind == SPLIT else -1
    if (sign * q_residue - 1) % eta.d != 0:
        raise ValidationError(
            f"series d = {eta.d} requires q = {sign} mod d; residue {q_residue} violates it"
        )
    return q_residue


@dataclass(frozen=True)
class Y0Table:
    """Rows: block data.  Columns: pairs (lambda, twist class).  Entries are
    exact roots of unity in Q(zeta_n'), zero off the row's own class."""

    eta: SeriesLabel
    data: tuple[SpringerDatum, ...]
    columns: tuple[tuple[Partition, int], ...]
    entries: tuple[tuple[Cyc, ...], ...]
    ambient_n: int

    def entry(self, i: int, j: int) -> Cyc:
        return self.entries[i][j]


def y0_table(
    n: int, p, eta: SeriesLabel, f_kind: str, q_residue: int, gl: bool = False
) -> Y0Table:
    q_residue = check_q_residue(n, p, eta, f_kind, q_residue)
    data = enumerate_block(n, p, eta, f_kind, gl)
    ambient = max(n_prime(n, p), 1)
    columns: list[tuple[Partition, int]] = []
    for s in data:
        cg = ComponentGroup(s.n_prime_lambda, 1 if f_kind == SPLIT else -1)
        if gl:
            columns.append((s.lam, 0))
        else:
            columns.extend((s.lam, a) for a in cg.twist_classes(q_residue))
    rows = []
    for s in data:
        row = []
        for lam, a in columns:
            if lam != s.lam:
                row.append(Cyc.rational(ambient, 0))
            else:
                row.append(
                    Cyc.root_of_unity(
                        max(s.n_prime_lambda, 1), s.rho_exponent * a, ambient
                    )
                )
        rows.append(tuple(row))
    return Y0Table(
        eta=eta,
        data=tuple(data),
        columns=tuple(columns),
        entries=tuple(rows),
        ambient_n=ambient,
    )


def block_to_json(n: int, p, eta: SeriesLabel, f_kind: str, gl: bool = False) -> str:
    data = enumerate_block(n, p, eta, f_kind, gl)
    doc = {
        "n": n,
        "p": p if isinstance(p, int) else "generic",
        "series": {"d": eta.d, "cuspidal": eta.cuspidal},
        "f_kind": f_kind,
        "data": [s.as_dict() for s in data],
    }
    return json.dumps(doc, indent=2, sort_keys=True)
