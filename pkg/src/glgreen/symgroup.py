"""Symmetric group character data: Murnaghan-Nakayama values, the a-function,
twisted traces against the longest element, and Young-subgroup restriction
multiplicities.

Character tables are built once per degree m and cached; all values are exact
integers.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import ValidationError
from .partitions import Partition, n_invariant, partitions_of


def _check_sizes(mu: Partition, rho: Partition):
    if mu.size != rho.size:
        raise ValidationError(f"size mismatch: |{mu}| != |{rho}|")


@lru_cache(maxsize=None)
def _mn_value(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion on raw part tuples, via beta-numbers.

    Removing a rim hook of length k corresponds to lowering one beta-number
    by k onto a free slot; the sign is (-1)^(number of occupied slots jumped
    over), which is the leg length of the hook.
    """
    if not rho:
        return 1
    if not mu:
        return 0
    k, rest = rho[0], rho[1:]
    r = len(mu)
    beta = [mu[i] + (r - 1 - i) for i in range(r)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newmu = tuple(newbeta[j] - (r - 1 - j) for j in range(r))
        newmu = tuple(x for x in newmu if x > 0)
        total += (-1) ** height * _mn_value(newmu, rest)
    return total


def character_value(mu: Partition, rho: Partition) -> int:
    """chi^mu evaluated at the conjugacy class of cycle type rho."""
    _check_sizes(mu, rho)
    return _mn_value(mu.parts, tuple(sorted(rho.parts, reverse=True)))


@lru_cache(maxsize=None)
def character_table(m: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """Full character table of S_m as {(mu.parts, rho.parts): value}."""
    table = {}
    for mu in partitions_of(m):
        for rho in partitions_of(m):
            table[(mu.parts, rho.parts)] = character_value(mu, rho)
    return table


def class_size(rho: Partition) -> int:
    """Number of permutations of cycle type rho."""
    m = rho.size
    z = 1
    for part, mult in rho.multiplicities().items():
        z *= part**mult * math.factorial(mult)
    return math.factorial(m) // z


def a_value(mu: Partition) -> int:
    """Lusztig's a-function on the symmetric group: n(mu)."""
    return n_invariant(mu)


def dimension(mu: Partition) -> int:
    """Degree of chi^mu (value on the identity class)."""
    m = mu.size
    if m == 0:
        return 1
    return character_value(mu, Partition((1,) * m))


# ---------------------------------------------------------------------------
# Permutations (tuples mapping i -> w[i], zero-indexed) and the twisted trace
# against the order-2 diagram automorphism, realised on representations as
# (-1)^{a} times the longest element.
# ---------------------------------------------------------------------------


def identity_perm(m: int) -> tuple[int, ...]:
    return tuple(range(m))


def longest_element(m: int) -> tuple[int, ...]:
    """The order-reversing permutation, the longest element of S_m."""
    return tuple(range(m - 1, -1, -1))


def compose(w: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(w o v)(i) = w(v(i))."""
    return tuple(w[v[i]] for i in range(len(w)))


def cycle_type(w: tuple[int, ...]) -> Partition:
    m = len(w)
    seen = [False] * m
    parts = []
    for i in range(m):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = w[j]
            length += 1
        parts.append(length)
    return Partition(tuple(sorted(parts, reverse=True)))


def perm_from_cycle_type(rho: Partition) -> tuple[int, ...]:
    """A canonical permutation with the given cycle type."""
    out = []
    start = 0
    for part in rho.parts:
        out.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(out)


def twisted_trace(
    mu: Partition, w: Partition | tuple[int, ...], twisted: bool, m: int
) -> int:
    """Trace of w (untwisted) or of w acting through the preferred extension.

    Untwisted, w may be given by cycle type.  Twisted, the value is
    (-1)^{a(mu)} chi^mu(w w0), which needs w as an explicit permutation; a
    cycle type is accepted and interpreted through its canonical
    representative.
    """
    if mu.size != m:
        raise ValidationError(f"|mu| = {mu.size} != m = {m}")
    if not twisted:
        rho = w if isinstance(w, Partition) else cycle_type(w)
        return character_value(mu, rho)
    perm = perm_from_cycle_type(w) if isinstance(w, Partition) else w
    if len(perm) != m:
        raise ValidationError("permutation degree mismatch")
    v = compose(perm, longest_element(m))
    return (-1) ** a_value(mu) * character_value(mu, cycle_type(v))


def trace_on_twisted_class(mu: Partition, rho_of_v: Partition) -> int:
    """Preferred-extension trace keyed directly by the cycle type of w*w0."""
    return (-1) ** a_value(mu) * character_value(mu, rho_of_v)


# ---------------------------------------------------------------------------
# Restriction to Young subgroups.
# ---------------------------------------------------------------------------


def restriction_multiplicity(mu: Partition, factors: list[Partition]) -> int:
    """Multiplicity of the outer tensor product of the factor irreps in the
    restriction of chi^mu to the Young subgroup S_{m1} x ... x S_{mk}.

    Computed as an exact character inner product: sum over tuples of cycle
    types, weighted by class sizes.
    """
    m = mu.size
    sizes = [f.size for f in factors]
    if sum(sizes) != m:
        raise ValidationError(f"factor sizes {sizes} do not sum to {m}")
    total = 0
    order = 1
    for s in sizes:
        order *= math.factorial(s)

    def rec(idx: int, weight: int, merged: list[int], inner: int):
        nonlocal total
        if idx == len(factors):
            rho = Partition(tuple(sorted(merged, reverse=True)))
            total += weight * inner * character_value(mu, rho)
            return
        f = factors[idx]
        for rho_j in partitions_of(f.size):
            rec(
                idx + 1,
                weight * class_size(rho_j),
                merged + list(rho_j.parts),
                inner * character_value(f, rho_j),
            )

    rec(0, 1, [], 1)
    if total % order != 0:
        raise ValidationError("inner product is not an integer; bad input")
    return total // order
