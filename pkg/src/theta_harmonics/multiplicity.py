"""Harmonic multiplicity engines for the two pairs, by independent routes.

Three-qutrit pair (case "e6"), multiplicity of F^{m1,n1} x F^{m2,n2} x
F^{m3,n3} in the harmonics:

* closed form: 0 unless the m_i + n_i agree mod 3; otherwise (D + eps)/9
  where D is the product of the three Weyl dimensions and eps is 0, 8,
  -8 according to D mod 9 being 0, 1, 8;
* averaging: the fixed-space dimension (1/81) sum of character values
  over the 81 centralizer triples.

Trivector pair (case "e8"), multiplicity of the SL(9) irreducible L:

* closed form: 0 unless |L| is divisible by 3; dim/27 when more than
  nine root pairings vanish mod 3; otherwise (dim + 26 chi(mu))/27 with
  chi(mu) given by the residue-product closed form;
* direct mu route: same shape but with chi(mu) evaluated as an actual
  Schur polynomial at mu's eigenvalues;
* full averaging: (1/81) sum of character values over all 81 matrices.

Agreement of the routes is the content being verified, so disagreement
is a reported outcome, not an exception; the test suite escalates it to
a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .characters import (
    char_at_mu_closed_form,
    char_value,
    mu_eigenvalues,
    weyl_dimension,
)
from .cyclotomic import Cyclotomic, ZERO
from .errors import FormulaViolation, PreconditionViolated
from .groups import e6_centralizer_group, e8_centralizer_group, eigenvalues
from .weights import HighestWeight, residue_partition


@dataclass(frozen=True, order=True)
class E6Weight:
    """Highest weight of SL3 x SL3 x SL3 as three (m, n) pairs."""

    m1: int
    n1: int
    m2: int
    n2: int
    m3: int
    n3: int

    def __post_init__(self):
        for m, n in self.pairs:
            if not m >= n >= 0:
                raise ValueError(f"need m >= n >= 0 in each factor, got {self}")

    @property
    def pairs(self):
        return ((self.m1, self.n1), (self.m2, self.n2), (self.m3, self.n3))

    @property
    def factors(self):
        return tuple(HighestWeight(3, (m, n, 0)) for m, n in self.pairs)

    def as_tuple(self):
        return (self.m1, self.n1, self.m2, self.n2, self.m3, self.n3)


def e6_congruence(w: E6Weight) -> bool:
    """Whether the scalar subgroup of the centralizer acts trivially:
    m1+n1, m2+n2, m3+n3 all congruent mod 3."""
    sums = [(m + n) % 3 for m, n in w.pairs]
    return sums[0] == sums[1] == sums[2]


def e6_dimension(w: E6Weight) -> int:
    d = 1
    for hw in w.factors:
        d *= weyl_dimension(hw)
    return d


def e6_closed_form(w: E6Weight) -> int:
    """Harmonic multiplicity by the closed formula (D + eps)/9."""
    if not e6_congruence(w):
        return 0
    d = e6_dimension(w)
    residue = d % 9
    if residue == 0:
        eps = 0
    elif residue == 1:
        eps = 8
    elif residue == 8:
        eps = -8
    else:
        raise FormulaViolation(
            f"dimension {d} is {residue} mod 9 despite the congruence holding"
        )
    q, r = divmod(d + eps, 9)
    if r:
        raise FormulaViolation("(dim + eps) not divisible by 9")
    return q


def e6_averaging(w: E6Weight) -> int:
    """Harmonic multiplicity as the dimension of the fixed space of the
    81 centralizer triples: brute-force character average."""
    hws = w.factors
    total = ZERO
    for g in e6_centralizer_group():
        term = char_value(hws[0], eigenvalues(g.g1))
        term = term * char_value(hws[1], eigenvalues(g.g2))
        term = term * char_value(hws[2], eigenvalues(g.g3))
        total = total + term
    return (total / 81).as_integer()


def e8_closed_form(L: HighestWeight) -> int:
    """Harmonic multiplicity of the SL(9) irreducible L by the closed
    formula; every division is checked exact."""
    if L.n != 9:
        raise PreconditionViolated("closed form is for SL(9) weights")
    if L.total % 3 != 0:
        return 0
    dim = weyl_dimension(L)
    s0_size = len(residue_partition(L).s0)
    if s0_size < 9:
        raise FormulaViolation("fewer than nine roots pair to 0 mod 3")
    if s0_size > 9:
        q, r = divmod(dim, 27)
    else:
        chi = char_at_mu_closed_form(L).as_integer()
        q, r = divmod(dim + 26 * chi, 27)
    if r:
        raise FormulaViolation(f"multiplicity formula for {L.entries} did not divide by 27")
    return q


def e8_direct_mu(L: HighestWeight) -> int:
    """(dim + 26 chi(mu))/27 with chi(mu) evaluated directly as a Schur
    polynomial at mu's eigenvalues; no residue bookkeeping involved.
    Zero outright when |L| is not divisible by 3 (no harmonics then)."""
    if L.n != 9:
        raise PreconditionViolated("mu route is for SL(9) weights")
    if L.total % 3 != 0:
        return 0
    chi = char_value(L, mu_eigenvalues())
    total = (Cyclotomic.integer(weyl_dimension(L)) + chi * 26) / 27
    return total.as_integer()


def e8_full_averaging(L: HighestWeight) -> int:
    """Brute-force character average over all 81 centralizer matrices."""
    if L.n != 9:
        raise PreconditionViolated("averaging is for SL(9) weights")
    total = ZERO
    for g in e8_centralizer_group():
        total = total + char_value(L, eigenvalues(g))
    return (total / 81).as_integer()


# ---------------------------------------------------------------------------
# Cross-engine reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityReport:
    """One weight, every computed route, and whether they all agree."""

    weight: tuple
    dim: int
    closed: int
    averaging: int
    direct_mu: int | None = None

    @property
    def agree(self) -> bool:
        values = {self.closed, self.averaging}
        if self.direct_mu is not None:
            values.add(self.direct_mu)
        return len(values) == 1


def e6_weight_range(max_entry: int):
    """All E6 weights with entries bounded by max_entry, sorted."""
    pairs = [
        (m, n) for m in range(max_entry + 1) for n in range(m + 1)
    ]
    out = [
        E6Weight(*p1, *p2, *p3) for p1, p2, p3 in product(pairs, pairs, pairs)
    ]
    out.sort(key=E6Weight.as_tuple)
    return out


def e8_weight_range(max_entry: int):
    """All dominant SL(9) weights with entries bounded by max_entry, sorted."""
    out = []

    def build(prefix, bound):
        if len(prefix) == 8:
            out.append(HighestWeight(9, prefix + (0,)))
            return
        for v in range(bound, -1, -1):
            build(prefix + (v,), v)

    build((), max_entry)
    out.sort(key=lambda hw: hw.entries)
    return out


def report_for_e6(w: E6Weight) -> MultiplicityReport:
    return MultiplicityReport(
        weight=w.as_tuple(),
        dim=e6_dimension(w),
        closed=e6_closed_form(w),
        averaging=e6_averaging(w),
    )


def report_for_e8(L: HighestWeight) -> MultiplicityReport:
    return MultiplicityReport(
        weight=L.entries[:8],
        dim=weyl_dimension(L),
        closed=e8_closed_form(L),
        averaging=e8_full_averaging(L),
        direct_mu=e8_direct_mu(L),
    )


def report(case: str, max_entry: int):
    """One MultiplicityReport per weight in the range, in weight order.

    A negative bound gives an empty report list.
    """
    if max_entry < 0:
        return []
    if case == "e6":
        return [report_for_e6(w) for w in e6_weight_range(max_entry)]
    if case == "e8":
        return [report_for_e8(L) for L in e8_weight_range(max_entry)]
    raise PreconditionViolated(f"unknown case {case!r}")
