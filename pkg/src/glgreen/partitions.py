"""Partition combinatorics for Jordan types and symmetric group irrep labels.

Parts are stored weakly decreasing.  The dominance order doubles as the
closure order on unipotent classes of the general linear group, which is what
the solver's block ordering relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from .errors import ValidationError


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValidationError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition({','.join(map(str, self.parts))})"

    def __str__(self):
        return ",".join(map(str, self.parts))

    @staticmethod
    def parse(text: str) -> "Partition":
        text = text.strip()
        if not text:
            return Partition(())
        return Partition(tuple(int(t) for t in text.split(",")))

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out


def transpose(lam: Partition) -> Partition:
    """Conjugate partition (column lengths of the Young diagram)."""
    if not lam.parts:
        return lam
    cols = [sum(1 for p in lam.parts if p > i) for i in range(lam.parts[0])]
    return Partition(cols)


def n_invariant(lam: Partition) -> int:
    """n(lam) = sum (i-1) * lam_i; the dimension of the Springer fiber of the
    unipotent class with Jordan type lam in a general or special linear group."""
    return sum(i * p for i, p in enumerate(lam.parts))


def d_quotient(lam: Partition, d: int) -> Partition | None:
    """Divide every part by d, or None when some part is not divisible."""
    if d < 1:
        raise ValidationError("d must be >= 1")
    if any(p % d for p in lam.parts):
        return None
    return Partition(tuple(p // d for p in lam.parts))


@dataclass(frozen=True)
class ClassDims:
    dim_C: int
    dim_Z_of_u: int
    d_u: int


def class_dims(n: int, lam: Partition, kind: str = "GL") -> ClassDims:
    """Orbit and centralizer dimensions of the unipotent class of type lam.

    The orbit dimension is the same for GL_n and SL_n; the centralizer loses
    one dimension in SL_n.
    """
    if lam.size != n:
        raise ValidationError(f"|{lam}| = {lam.size} != n = {n}")
    if kind not in ("GL", "SL"):
        raise ValidationError(f"kind must be GL or SL, got {kind!r}")
    z = sum(c * c for c in transpose(lam).parts)
    dim_c = n * n - z
    dim_z = z if kind == "GL" else z - 1
    return ClassDims(dim_C=dim_c, dim_Z_of_u=dim_z, d_u=n_invariant(lam))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when lam >= mu in dominance order (partial sums comparison)."""
    if lam.size != mu.size:
        raise ValidationError("dominance is defined between partitions of equal size")
    a = list(accumulate(lam.parts))
    b = list(accumulate(mu.parts))
    k = max(len(a), len(b))
    a += [a[-1]] * (k - len(a)) if a else [0] * k
    b += [b[-1]] * (k - len(b)) if b else [0] * k
    return all(x >= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order, (n) first."""
    if n == 0:
        return (Partition(()),)

    def gen(total, maxpart):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maxpart), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def d_divisible_partitions(n: int, d: int) -> tuple[Partition, ...]:
    """Partitions of n all of whose parts are divisible by d."""
    if n % d != 0:
        return ()
    return tuple(
        Partition(tuple(p * d for p in mu)) for mu in partitions_of(n // d)
    )
