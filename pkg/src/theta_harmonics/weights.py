"""Type-A weight and root combinatorics for SL(n).

Dominant weights are kept in the "polynomial" convention: a weakly
decreasing tuple of nonnegative integers whose last entry is zero.
The Weyl vector is represented as (n-1, n-2, ..., 0); it differs from
the trace-zero representative by a constant shift that cancels in every
pairing against a root e_i - e_j, which is all this package ever uses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionViolated


@dataclass(frozen=True, order=True)
class HighestWeight:
    """A dominant integral weight of SL(n)."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank parameter must be at least 2")
        if len(self.entries) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(self.entries)}")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"not weakly decreasing: {self.entries}")
        if self.entries[-1] != 0:
            raise ValueError(f"not normalized (last entry {self.entries[-1]})")
        if self.entries[0] < 0:
            raise ValueError("negative entries")

    @staticmethod
    def of(n: int, entries) -> "HighestWeight":
        """Build from any weakly decreasing integer tuple, normalizing
        so the last entry is zero."""
        entries = tuple(int(v) for v in entries)
        if len(entries) == n - 1:
            entries = entries + (0,)
        last = entries[-1]
        if last != 0:
            entries = tuple(v - last for v in entries)
        return HighestWeight(n, entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def plus_rho(self) -> tuple[int, ...]:
        r = weyl_vector(self.n)
        return tuple(a + b for a, b in zip(self.entries, r))


@dataclass(frozen=True, order=True)
class PositiveRoot:
    """The root e_i - e_j of SL(n), with 1 <= i < j <= n."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"bad root indices ({self.i},{self.j})")


def weyl_vector(n: int) -> tuple[int, ...]:
    """(n-1, n-2, ..., 0), the half-sum of positive roots up to a shift
    that every root pairing ignores."""
    if n < 2:
        raise ValueError("rank parameter must be at least 2")
    return tuple(range(n - 1, -1, -1))


def positive_roots(n: int) -> tuple[PositiveRoot, ...]:
    return tuple(
        PositiveRoot(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
    )


def root_pairing(alpha: PositiveRoot, v) -> int:
    """<alpha, v> = v_i - v_j for alpha = e_i - e_j."""
    return v[alpha.i - 1] - v[alpha.j - 1]


@dataclass(frozen=True)
class ResidueSets:
    """The 36 positive roots of SL(9) split by <alpha, L+rho> mod 3."""

    s0: tuple[PositiveRoot, ...]
    s1: tuple[PositiveRoot, ...]
    s2: tuple[PositiveRoot, ...]
    values: dict = field(compare=False)

    def sizes(self) -> tuple[int, int, int]:
        return (len(self.s0), len(self.s1), len(self.s2))


def residue_partition(L: HighestWeight) -> ResidueSets:
    """Partition the positive roots of SL(9) by the residue mod 3 of
    their pairing with L + rho."""
    if L.n != 9:
        raise PreconditionViolated("residue partition is defined for SL(9) weights")
    v = L.plus_rho()
    buckets: tuple[list, list, list] = ([], [], [])
    values = {}
    for alpha in positive_roots(9):
        p = root_pairing(alpha, v)
        values[alpha] = p
        buckets[p % 3].append(alpha)
    return ResidueSets(tuple(buckets[0]), tuple(buckets[1]), tuple(buckets[2]), values)
