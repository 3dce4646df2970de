"""Build the omega matrix of a series and solve tP * Lambda * P = Omega for
block-unitriangular P and block-diagonal Lambda.

The sum over the relative Weyl group S_m collapses to a sum over cycle types
weighted by class sizes.  In the non-split case the preferred extension
contributes (-1)^(a_i + a_j) and both the character values and the torus
orders are keyed by the cycle type of w*w0, which re-indexes the sum
bijectively.

External block systems (for groups whose data this engine does not generate)
are accepted through a small JSON document and solved by the same
elimination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalConsistencyError, ValidationError
from .partitions import Partition, partitions_of
from .qpoly import RatQ, format_ratq, parse_ratq
from .reductive import (
    GroupSpec,
    LeviSpec,
    group_order,
    levi_lattice_action,
    twisted_torus_order,
)
from .springer import (
    NONSPLIT,
    SPLIT,
    SeriesLabel,
    SpringerDatum,
    enumerate_block,
    spec_for,
)
from .symgroup import (
    a_value,
    character_value,
    class_size,
    compose,
    longest_element,
    perm_from_cycle_type,
)

SCHEMA = "omega-system/v1"


@dataclass(frozen=True)
class IndexEntry:
    label: str
    dim_C: int
    block: int
    delta: int = 0
    datum: SpringerDatum | None = None


@dataclass
class OmegaSystem:
    series: str
    indices: list[IndexEntry]
    omega: list[list[RatQ]]
    solved_P: list[list[RatQ]] | None = None
    solved_Lambda: list[list[RatQ]] | None = None
    expect_integral: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.indices)

    def blocks(self) -> list[list[int]]:
        """Consecutive index positions grouped by block id."""
        out: list[list[int]] = []
        cur: list[int] = []
        for pos, entry in enumerate(self.indices):
            if cur and self.indices[cur[-1]].block != entry.block:
                out.append(cur)
                cur = []
            cur.append(pos)
        if cur:
            out.append(cur)
        return out

    def validate(self):
        n = self.size
        if n == 0:
            raise ValidationError("empty block list")
        if len(self.omega) != n or any(len(row) != n for row in self.omega):
            raise ValidationError("omega must be square of the index size")
        for i in range(n):
            for j in range(i, n):
                if self.omega[i][j] != self.omega[j][i]:
                    raise ValidationError(
                        f"omega not symmetric at ({i},{j}): "
                        f"{self.omega[i][j]} != {self.omega[j][i]}"
                    )
        seen_blocks = set()
        last_block = None
        last_dim = None
        for entry in self.indices:
            if entry.block != last_block:
                if entry.block in seen_blocks:
                    raise ValidationError("block ids must be contiguous")
                seen_blocks.add(entry.block)
                last_block = entry.block
                if last_dim is not None and entry.dim_C < last_dim:
                    raise ValidationError(
                        "blocks must be ordered by non-decreasing dim_C"
                    )
            last_dim = entry.dim_C


def omega_matrix(
    n: int, p, eta: SeriesLabel, f_kind: str, gl: bool = False
) -> OmegaSystem:
    """The omega matrix of the series eta, exact in q."""
    spec = spec_for(n, p, f_kind, gl)
    levi = LeviSpec(d=eta.d, m=n // eta.d)
    data = enumerate_block(n, p, eta, f_kind, gl)
    m = levi.m
    order_g = group_order(spec)
    twisted = f_kind == NONSPLIT

    # torus factors |G^F| / |Z^0_(L^w)^F| keyed by cycle type (of w if split,
    # of w*w0 if twisted); always a polynomial.
    w0 = longest_element(m)
    ratios: dict[tuple[int, ...], RatQ] = {}
    sizes: dict[tuple[int, ...], int] = {}
    for rho in partitions_of(m):
        v = perm_from_cycle_type(rho)
        if twisted:
            # twist by w with w*w0 = v, i.e. w = v*w0
            action = levi_lattice_action(spec, levi, compose(v, w0), twisted=True)
        else:
            action = levi_lattice_action(spec, levi, v, twisted=False)
        torus = twisted_torus_order(action) if action else RatQ.one()
        ratio = order_g / torus
        if not ratio.is_polynomial():
            raise InternalConsistencyError(
                f"|G|/|torus| not polynomial for cycle type {rho}"
            )
        ratios[rho.parts] = ratio
        sizes[rho.parts] = class_size(rho)

    fact = 1
    for k in range(2, m + 1):
        fact *= k
    inv_order = RatQ.const(Fraction(1, fact))
    dim_g = spec.dim

    size = len(data)
    omega = [[RatQ.zero()] * size for _ in range(size)]
    for i, di in enumerate(data):
        for j in range(i, size):
            dj = data[j]
            acc = RatQ.zero()
            for rho_parts, ratio in ratios.items():
                rho = Partition(rho_parts)
                tr_i = character_value(di.mu, rho)
                tr_j = character_value(dj.mu, rho)
                if tr_i == 0 or tr_j == 0:
                    continue
                acc = acc + RatQ.const(sizes[rho_parts] * tr_i * tr_j) * ratio
            if twisted:
                sign = (-1) ** (a_value(di.mu) + a_value(dj.mu))
                acc = acc * RatQ.const(sign)
            shift = -dim_g - (di.a0 + dj.a0) // 2
            entry = inv_order * acc * RatQ.q(shift) if acc else RatQ.zero()
            if not entry.is_polynomial():
                raise InternalConsistencyError(
                    f"omega entry ({di.lam},{dj.lam}) not polynomial: {entry}"
                )
            omega[i][j] = entry
            omega[j][i] = entry

    indices = [
        IndexEntry(
            label=str(s.lam), dim_C=s.dim_C, block=b, delta=s.delta, datum=s
        )
        for b, s in enumerate(data)
    ]
    sys = OmegaSystem(
        series=f"{'GL' if gl else 'SL'}{n} {f_kind} d={eta.d}",
        indices=indices,
        omega=omega,
        expect_integral=True,
        meta={"n": n, "p": p, "d": eta.d, "f_kind": f_kind, "gl": gl},
    )
    sys.validate()
    return sys


# ---------------------------------------------------------------------------
# Block elimination.
# ---------------------------------------------------------------------------


def _mat_mul(a, b):
    rows, mid, cols = len(a), len(b), len(b[0])
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(mid)), RatQ.zero())
            for j in range(cols)
        ]
        for i in range(rows)
    ]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_transpose(a):
    return [list(col) for col in zip(*a)]


def _mat_inverse(a):
    """Gauss-Jordan inverse over the rational function field; None if singular."""
    k = len(a)
    aug = [[a[i][j] for j in range(k)] + [RatQ.one() if i == j else RatQ.zero() for j in range(k)] for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if not aug[r][col].is_zero()), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = RatQ.one() / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def solve(system: OmegaSystem) -> OmegaSystem:
    """Solve tP * Lambda * P = Omega along the block order.

    Returns a new system with solved_P and solved_Lambda set; the factorization
    is re-multiplied and compared with omega before returning.
    """
    system.validate()
    blocks = system.blocks()
    n = system.size
    P = [[RatQ.zero()] * n for _ in range(n)]
    L = [[RatQ.zero()] * n for _ in range(n)]
    for pos in range(n):
        P[pos][pos] = RatQ.one()

    def sub(mat, rows, cols):
        return [[mat[r][c] for c in cols] for r in rows]

    lam_blocks: list[list[list[RatQ]]] = []
    for ai, a_rows in enumerate(blocks):
        omega_aa = sub(system.omega, a_rows, a_rows)
        acc = omega_aa
        for bi in range(ai):
            b_rows = blocks[bi]
            p_ba = sub(P, b_rows, a_rows)
            acc = _mat_sub(acc, _mat_mul(_mat_transpose(p_ba), _mat_mul(lam_blocks[bi], p_ba)))
        lam_a = acc
        inv = _mat_inverse(lam_a)
        if inv is None:
            raise ValidationError(
                f"non-singular block-diagonal violated at block {ai} "
                f"({system.indices[a_rows[0]].label})"
            )
        lam_blocks.append(lam_a)
        for r, i in enumerate(a_rows):
            for c, j in enumerate(a_rows):
                L[i][j] = lam_a[r][c]
        for ci in range(ai + 1, len(blocks)):
            c_rows = blocks[ci]
            omega_ac = sub(system.omega, a_rows, c_rows)
            acc = omega_ac
            for bi in range(ai):
                b_rows = blocks[bi]
                p_ba = sub(P, b_rows, a_rows)
                p_bc = sub(P, b_rows, c_rows)
                acc = _mat_sub(
                    acc, _mat_mul(_mat_transpose(p_ba), _mat_mul(lam_blocks[bi], p_bc))
                )
            p_ac = _mat_mul(inv, acc)
            for r, i in enumerate(a_rows):
                for c, j in enumerate(c_rows):
                    P[i][j] = p_ac[r][c]

    # verification by full multiplication
    check = _mat_mul(_mat_transpose(P), _mat_mul(L, P))
    for i in range(n):
        for j in range(n):
            if check[i][j] != system.omega[i][j]:
                raise InternalConsistencyError(
                    f"verification failed at ({i},{j}): {check[i][j]} != {system.omega[i][j]}"
                )
    if system.expect_integral:
        for mat, name in ((P, "P"), (L, "Lambda")):
            for i in range(n):
                for j in range(n):
                    if not mat[i][j].is_zero() and not mat[i][j].has_integer_coeffs():
                        raise InternalConsistencyError(
                            f"{name}[{i}][{j}] = {mat[i][j]} is not an integer polynomial"
                        )
    solved = replace_system(system, P, L)
    return solved


def replace_system(system: OmegaSystem, P, L) -> OmegaSystem:
    return OmegaSystem(
        series=system.series,
        indices=list(system.indices),
        omega=[row[:] for row in system.omega],
        solved_P=P,
        solved_Lambda=L,
        expect_integral=system.expect_integral,
        meta=dict(system.meta),
    )


# ---------------------------------------------------------------------------
# Serialization: schema "omega-system/v1".
# ---------------------------------------------------------------------------


def system_to_json(system: OmegaSystem) -> str:
    doc = {
        "schema": SCHEMA,
        "series": system.series,
        "indices": [
            {"label": e.label, "dim_C": e.dim_C, "block": e.block, "delta": e.delta}
            for e in system.indices
        ],
        "omega": [[format_ratq(x) for x in row] for row in system.omega],
    }
    if system.solved_P is not None:
        doc["P"] = [[format_ratq(x) for x in row] for row in system.solved_P]
    if system.solved_Lambda is not None:
        doc["Lambda"] = [[format_ratq(x) for x in row] for row in system.solved_Lambda]
    return json.dumps(doc, indent=2, sort_keys=True)


def load_external_system(document: str | dict) -> OmegaSystem:
    """Parse and validate an externally supplied block system."""
    doc = json.loads(document) if isinstance(document, str) else document
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise ValidationError(f"expected schema {SCHEMA!r}, got {doc.get('schema')!r}")
    for key in ("series", "indices", "omega"):
        if key not in doc:
            raise ValidationError(f"missing key {key!r}")
    indices = []
    if not doc["indices"]:
        raise ValidationError("empty block list")
    for entry in doc["indices"]:
        try:
            indices.append(
                IndexEntry(
                    label=str(entry["label"]),
                    dim_C=int(entry["dim_C"]),
                    block=int(entry["block"]),
                    delta=int(entry.get("delta", 0)),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed index entry {entry!r}: {exc}") from exc
    omega = [[parse_ratq(cell) for cell in row] for row in doc["omega"]]
    sys = OmegaSystem(series=str(doc["series"]), indices=indices, omega=omega)
    sys.validate()
    if "P" in doc:
        sys.solved_P = [[parse_ratq(cell) for cell in row] for row in doc["P"]]
    if "Lambda" in doc:
        sys.solved_Lambda = [[parse_ratq(cell) for cell in row] for row in doc["Lambda"]]
    return sys
