"""Green function tables and the Ennola (split vs non-split) comparison.

A table row is a twisting class of the relative Weyl group S_m, labelled by a
cycle type; in the non-split case the row labelled rho denotes the twist w
with w*w0 of cycle type rho, which is the indexing under which the split and
non-split tables line up entry by entry.  Columns are pairs (Jordan type,
twist class of the component group).  Entries are polynomials in q with exact
cyclotomic coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyc
from .errors import InternalConsistencyError, ValidationError
from .partitions import Partition, partitions_of
from .qpoly import LaurentPoly, RatQ, format_poly
from .solver import OmegaSystem, omega_matrix, solve
from .springer import (
    NONSPLIT,
    SPLIT,
    SeriesLabel,
    Y0Table,
    check_q_residue,
    enumerate_block,
    y0_table,
)
from .symgroup import a_value, character_value

# ---------------------------------------------------------------------------
# Cyclotomic-coefficient polynomials: plain LaurentPoly instances whose
# coefficients are Cyc values.
# ---------------------------------------------------------------------------


def to_cyc_poly(f: RatQ, ambient_n: int) -> LaurentPoly:
    if not f.is_polynomial():
        raise InternalConsistencyError(f"expected polynomial, got {f}")
    return f.num.map_coeffs(lambda c: Cyc.rational(ambient_n, c))


def cyc_poly_str(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        cs = str(c)
        composite = ("+" in cs[1:]) or ("-" in cs[1:]) or "z" in cs
        if e == 0:
            parts.append(f"({cs})" if composite and ("+" in cs or " - " in cs) else cs)
            continue
        qpart = "q" if e == 1 else f"q^{e}"
        if cs == "1":
            parts.append(qpart)
        elif cs == "-1":
            parts.append(f"-{qpart}")
        elif composite:
            parts.append(f"({cs})*{qpart}")
        else:
            parts.append(f"{cs}*{qpart}")
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# Gamma normalization scalars.
# ---------------------------------------------------------------------------


def gamma_values(
    n: int,
    p,
    eta: SeriesLabel,
    f_kind: str,
    nu_inputs: dict[Partition, Cyc] | None = None,
    ambient_n: int | None = None,
    gl: bool = False,
) -> list[Cyc]:
    """One scalar per block datum, in block order.

    Split Frobenius: all 1.  Non-split: nu_lambda * (-1)^delta_i, where
    nu_lambda is 1 for lambda = (n) and for the principal series, and must be
    supplied (from the finite-field oracle or by hand) otherwise.
    """
    data = enumerate_block(n, p, eta, f_kind, gl)
    from .reductive import n_prime

    amb = ambient_n if ambient_n is not None else max(n_prime(n, p), 1)
    nu_inputs = nu_inputs or {}
    out = []
    one = Cyc.rational(amb, 1)
    for s in data:
        if f_kind == SPLIT:
            out.append(one)
            continue
        if eta.d == 1 or s.lam == Partition((n,)):
            nu = nu_inputs.get(s.lam, one)
        elif s.lam in nu_inputs:
            nu = nu_inputs[s.lam]
        else:
            raise ValidationError(
                f"non-split series d = {eta.d} needs nu for lambda = {s.lam}"
            )
        if nu.n != amb:
            nu = nu._to(amb) if amb % nu.n == 0 else nu
        sign = one if s.delta % 2 == 0 else -one
        out.append(nu * sign)
    return out


# ---------------------------------------------------------------------------
# X functions and the Green table.
# ---------------------------------------------------------------------------


def x_functions(
    system: OmegaSystem, y0: Y0Table, gammas: list[Cyc]
) -> list[list[LaurentPoly]]:
    """X_i as a function of the unipotent classes: X_i = sum_j p_(ji) Y_j with
    Y_j = gamma_j * Y_j^0.  Rows follow the block order, columns follow the
    Y^0 table columns."""
    if system.solved_P is None:
        raise ValidationError("system must be solved before building X")
    size = system.size
    if len(y0.data) != size or len(gammas) != size:
        raise ValidationError("dimension mismatch between system, Y0 and gammas")
    amb = y0.ambient_n
    out = []
    for i in range(size):
        row = []
        for c, _col in enumerate(y0.columns):
            acc = LaurentPoly()
            for j in range(size):
                p_ji = system.solved_P[j][i]
                if p_ji.is_zero():
                    continue
                y = y0.entry(j, c)
                if not y:
                    continue
                acc = acc + to_cyc_poly(p_ji, amb).scale(gammas[j] * y)
            row.append(acc)
        out.append(row)
    return out


@dataclass
class GreenTable:
    eta: SeriesLabel
    f_kind: str
    rows: list[Partition]  # cycle types; non-split rows are labelled by w*w0
    columns: list[tuple[Partition, int]]
    entries: list[list[LaurentPoly]]  # cyclotomic-coefficient polynomials
    ambient_n: int
    system: OmegaSystem

    def entry(self, rho: Partition, col: tuple[Partition, int]) -> LaurentPoly:
        return self.entries[self.rows.index(rho)][self.columns.index(col)]

    def to_json(self) -> str:
        doc = {
            "schema": "green-table/v1",
            "series": self.system.series,
            "rows": [str(r) for r in self.rows],
            "columns": [f"{lam}|{a}" for lam, a in self.columns],
            "entries": [[cyc_poly_str(e) for e in row] for row in self.entries],
            "cyclotomic_order": self.ambient_n,
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        lines = ["w," + ",".join(f"{lam}|{a}" for lam, a in self.columns)]
        for rho, row in zip(self.rows, self.entries):
            cells = ['"' + cyc_poly_str(e) + '"' for e in row]
            lines.append('"' + str(rho) + '",' + ",".join(cells))
        return "\n".join(lines) + "\n"


def green_table(
    n: int,
    p,
    eta: SeriesLabel,
    f_kind: str,
    nu_inputs: dict[Partition, Cyc] | None = None,
    q_residue: int = 1,
    gl: bool = False,
    system: OmegaSystem | None = None,
) -> GreenTable:
    """The table of generalized Green function values on unipotent classes.

    Entry (w, (lambda, a)) is sum_i Tr(w sigma_i, E~_i) X_i(u_(lambda,a))
    q^((a0+r)_i / 2).  The normalization is the positive one: the identity
    twist row of the principal split series counts rational points of the
    fixed-flag varieties.
    """
    if system is None:
        system = solve(omega_matrix(n, p, eta, f_kind, gl))
    y0 = y0_table(n, p, eta, f_kind, q_residue, gl)
    gammas = gamma_values(n, p, eta, f_kind, nu_inputs, y0.ambient_n, gl)
    xs = x_functions(system, y0, gammas)
    m = n // eta.d
    data = y0.data
    rows = list(partitions_of(m))
    entries = []
    for rho in rows:
        row = []
        for c in range(len(y0.columns)):
            acc = LaurentPoly()
            for i, s in enumerate(data):
                tr = character_value(s.mu, rho)
                if f_kind == NONSPLIT:
                    tr *= (-1) ** a_value(s.mu)
                if tr == 0:
                    continue
                x = xs[i][c]
                if x.is_zero():
                    continue
                acc = acc + x.shift(s.d_u).scale(
                    Cyc.rational(y0.ambient_n, tr)
                )
            row.append(acc)
        entries.append(row)
    return GreenTable(
        eta=eta,
        f_kind=f_kind,
        rows=rows,
        columns=list(y0.columns),
        entries=entries,
        ambient_n=y0.ambient_n,
        system=system,
    )


# ---------------------------------------------------------------------------
# Ennola comparison.
# ---------------------------------------------------------------------------


@dataclass
class EnnolaReport:
    identities: dict[str, bool]
    counterexamples: dict[str, str]

    @property
    def passed(self) -> bool:
        return all(self.identities.values())

    def summary(self) -> str:
        lines = []
        for name, ok in self.identities.items():
            line = f"{name}: {'pass' if ok else 'FAIL'}"
            if not ok:
                line += f"  [{self.counterexamples[name]}]"
            lines.append(line)
        return "\n".join(lines)


def _subs_neg_q_cyc(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({e: (c if e % 2 == 0 else -c) for e, c in p.coeffs.items()})


def ennola_check(
    n: int,
    p,
    eta: SeriesLabel,
    nu_inputs: dict[Partition, Cyc] | None = None,
    q_residue: int | None = None,
) -> EnnolaReport:
    """Compare the independently computed non-split and split systems.

    (a) omega^twist = D omega^split(-q) D with D = diag((-1)^delta_i);
    (b) the same transport for P and Lambda;
    (c) the table identity: every non-split entry equals nu_lambda times the
        split entry at the matching row and twist class, evaluated at -q.
    """
    from .reductive import n_prime

    np_ = max(n_prime(n, p), 1)
    if q_residue is None:
        q_residue = next(
            (r for r in range(1, max(np_, 2)) if _residue_ok(r, np_, eta.d)), None
        )
        if q_residue is None:
            raise ValidationError(f"no valid q residue mod {np_} for d = {eta.d}")
    q_residue %= max(np_, 1)
    split_residue = (-q_residue) % np_ if np_ > 1 else 0

    tw_sys = solve(omega_matrix(n, p, eta, NONSPLIT))
    sp_sys = solve(omega_matrix(n, p, eta, SPLIT))
    size = tw_sys.size
    deltas = [e.delta for e in tw_sys.indices]

    identities: dict[str, bool] = {}
    examples: dict[str, str] = {}

    def check_mat(name: str, tw, sp):
        for i in range(size):
            for j in range(size):
                want = sp[i][j].subs_neg_q() * RatQ.const((-1) ** (deltas[i] + deltas[j]))
                if tw[i][j] != want:
                    identities[name] = False
                    examples[name] = (
                        f"entry ({tw_sys.indices[i].label},{tw_sys.indices[j].label}): "
                        f"{tw[i][j]} != {want}"
                    )
                    return
        identities[name] = True

    check_mat("omega", tw_sys.omega, sp_sys.omega)
    check_mat("P", tw_sys.solved_P, sp_sys.solved_P)
    check_mat("Lambda", tw_sys.solved_Lambda, sp_sys.solved_Lambda)

    # (c) table identity
    try:
        tw_tab = green_table(
            n, p, eta, NONSPLIT, nu_inputs, q_residue, system=tw_sys
        )
        sp_tab = green_table(n, p, eta, SPLIT, None, split_residue, system=sp_sys)
    except ValidationError as exc:
        identities["table"] = False
        examples["table"] = f"table construction failed: {exc}"
        return EnnolaReport(identities, examples)

    if tw_tab.columns != sp_tab.columns:
        identities["table"] = False
        examples["table"] = (
            f"twist class labels differ: {tw_tab.columns} vs {sp_tab.columns}"
        )
        return EnnolaReport(identities, examples)

    amb = tw_tab.ambient_n
    nu_by_class: dict[Partition, Cyc] = {}
    gammas = gamma_values(n, p, eta, NONSPLIT, nu_inputs, amb)
    for s, g in zip(enumerate_block(n, p, eta, NONSPLIT), gammas):
        sign = 1 if s.delta % 2 == 0 else -1
        nu_by_class[s.lam] = g * Cyc.rational(amb, sign)

    identities["table"] = True
    for r, rho in enumerate(tw_tab.rows):
        for c, (lam, a) in enumerate(tw_tab.columns):
            lhs = tw_tab.entries[r][c]
            rhs = _subs_neg_q_cyc(sp_tab.entries[r][c]).scale(nu_by_class[lam])
            if lhs != rhs:
                identities["table"] = False
                examples["table"] = (
                    f"row {rho}, column {lam}|{a}: "
                    f"{cyc_poly_str(lhs)} != {cyc_poly_str(rhs)}"
                )
                return EnnolaReport(identities, examples)
    return EnnolaReport(identities, examples)


def _residue_ok(r: int, np_: int, d: int) -> bool:
    import math

    if np_ > 1 and math.gcd(r, np_) != 1:
        return False
    return (-r - 1) % d == 0
