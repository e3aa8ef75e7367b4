"""Degree-by-degree brute force over Sym^d(V), independent of every formula.

The weight multiplicities of Sym^d(V) are computed by a multiset dynamic
program over the 27 (three-qutrit) or 84 (trivector) weight-one basis
vectors: items are taken in a fixed basis order so each monomial is
counted exactly once, and weight vectors are packed into integers (six
bits per coordinate, which bounds entries by 63 -- far above any feasible
degree).  Characters are then decomposed by repeated subtraction of
Freudenthal weight diagrams, largest dominant weight first, and the
invariant Hilbert series is deconvolved out of the graded multiplicities
to give graded harmonic multiplicities (freeness makes the module a free
module over the invariants, so the quotient series must have nonnegative
coefficients -- a strong end-to-end consistency check).

Weight keys are the natural nonnegative "polynomial" coordinates; at a
fixed degree they are already translation-normalized, so no shifting is
applied.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .characters import dominant_multiplicities, weyl_dimension
from .errors import NegativeCoefficient, NegativeRemainder, PreconditionViolated, ScaleExceeded
from .multiplicity import E6Weight
from .weights import HighestWeight

DIM_V = {"e6": 27, "e8": 84}

E8_DEFAULT_CAP = 6
ENV_CAP = "THETA_ORACLE_MAX_DEGREE"

_SHIFT = 6
_MASK = (1 << _SHIFT) - 1


def e8_degree_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return E8_DEFAULT_CAP
    return int(raw)


def _check_case(case: str):
    if case not in DIM_V:
        raise PreconditionViolated(f"unknown case {case!r}")


def _check_scale(case: str, degree: int):
    if degree < 0:
        raise PreconditionViolated("degree must be nonnegative")
    if degree > _MASK:
        raise ScaleExceeded("degree does not fit the packed representation")
    if case == "e8" and degree > e8_degree_cap():
        raise ScaleExceeded(
            f"trivector oracle capped at degree {e8_degree_cap()} "
            f"(override with {ENV_CAP})"
        )


def _pack(indices) -> int:
    w = 0
    for i in indices:
        w += 1 << (_SHIFT * i)
    return w


def _unpack(w: int) -> tuple:
    return tuple((w >> (_SHIFT * t)) & _MASK for t in range(9))


@lru_cache(maxsize=None)
def _packed_items(case: str) -> tuple:
    if case == "e6":
        return tuple(
            _pack((i, 3 + j, 6 + k))
            for i, j, k in product(range(3), range(3), range(3))
        )
    return tuple(_pack(t) for t in combinations(range(9), 3))


@lru_cache(maxsize=4)
def _dp(case: str, max_degree: int) -> tuple:
    """Packed weight->count dicts for Sym^0..Sym^max_degree."""
    layers: list[dict] = [{} for _ in range(max_degree + 1)]
    layers[0][0] = 1
    for p in _packed_items(case):
        for j in range(1, max_degree + 1):
            cur = layers[j]
            get = cur.get
            for w, c in layers[j - 1].items():
                k = w + p
                cur[k] = get(k, 0) + c
    return tuple(layers)


def _public_key(case, packed):
    t = _unpack(packed)
    if case == "e6":
        return (t[0:3], t[3:6], t[6:9])
    return t


@dataclass(frozen=True)
class WeightMultTable:
    """Exact weight multiplicities of Sym^degree(V)."""

    case: str
    degree: int
    counts: dict

    def total_mass(self) -> int:
        return sum(self.counts.values())


def symd_weights(case: str, degree: int) -> WeightMultTable:
    _check_case(case)
    _check_scale(case, degree)
    packed = _dp(case, degree)[degree]
    counts = {_public_key(case, w): c for w, c in packed.items()}
    return WeightMultTable(case, degree, counts)


def dim_sym(case: str, degree: int) -> int:
    _check_case(case)
    return comb(DIM_V[case] + degree - 1, degree)


# ---------------------------------------------------------------------------
# Decomposition into irreducibles
# ---------------------------------------------------------------------------


def _is_dominant(case, key) -> bool:
    if case == "e6":
        return all(chunk[0] >= chunk[1] >= chunk[2] for chunk in key)
    return all(a >= b for a, b in zip(key, key[1:]))


@lru_cache(maxsize=None)
def _gl_dominant_diagram(n: int, glkey: tuple) -> dict:
    """Dominant weight multiplicities of the GL(n) irreducible with
    polynomial highest weight glkey (a partition padded to length n)."""
    shift = glkey[-1]
    hw = HighestWeight.of(n, glkey)
    return {
        tuple(v + shift for v in mu): m
        for mu, m in dominant_multiplicities(hw).items()
    }


def _constituent_diagram(case, lam):
    if case == "e8":
        yield from _gl_dominant_diagram(9, lam).items()
        return
    d1, d2, d3 = (_gl_dominant_diagram(3, p) for p in lam)
    for (k1, m1), (k2, m2), (k3, m3) in product(
        d1.items(), d2.items(), d3.items()
    ):
        yield (k1, k2, k3), m1 * m2 * m3


def _decompose_dominant(case, dominant_counts, pick=None):
    """Multiplicities of the irreducible constituents of a character
    given by its dominant weight multiplicities.

    Repeatedly take a dominance-maximal weight with positive count
    (lexicographic maximum by default; any valid pick gives the same
    answer), subtract that constituent's full dominant diagram, repeat.
    A negative intermediate means the input was not a character.
    """
    rem = {k: v for k, v in dominant_counts.items() if v}
    if any(v < 0 for v in rem.values()):
        raise NegativeRemainder("input table has a negative multiplicity")
    out = {}
    while rem:
        lam = max(rem) if pick is None else pick(rem)
        mult = rem[lam]
        for mu, dm in _constituent_diagram(case, lam):
            new = rem.get(mu, 0) - mult * dm
            if new < 0:
                raise NegativeRemainder(
                    f"subtracting {lam} drove weight {mu} to {new}"
                )
            if new:
                rem[mu] = new
            else:
                rem.pop(mu, None)
        out[lam] = mult
    return out


def decompose(table: WeightMultTable, pick=None) -> dict:
    """Decompose one Sym^d weight table into irreducibles.

    Returns a mapping from highest weights (HighestWeight for the
    trivector case, a triple of HighestWeight for the three-qutrit case)
    to multiplicities.  Only the dominant part of the table is consulted;
    the rest is determined by coordinate-permutation symmetry.
    """
    dom = {k: v for k, v in table.counts.items() if _is_dominant(table.case, k)}
    raw = _decompose_dominant(table.case, dom, pick=pick)
    if table.case == "e8":
        return {HighestWeight.of(9, k): v for k, v in raw.items()}
    return {
        tuple(HighestWeight.of(3, p) for p in k): v for k, v in raw.items()
    }


@lru_cache(maxsize=4)
def _graded_gl(case: str, max_degree: int) -> tuple:
    """GL-keyed decomposition of Sym^d for every d up to max_degree."""
    layers = _dp(case, max_degree)
    out = []
    for d in range(max_degree + 1):
        dom = {}
        for w, c in layers[d].items():
            key = _public_key(case, w)
            if _is_dominant(case, key):
                dom[key] = c
        out.append(_decompose_dominant(case, dom))
    return tuple(out)


def dimension_conserved(case: str, degree: int) -> bool:
    """Whether the decomposition at this degree accounts for every
    dimension of Sym^degree(V)."""
    _check_case(case)
    _check_scale(case, degree)
    total = 0
    for key, mult in _graded_gl(case, degree)[degree].items():
        if case == "e8":
            total += mult * weyl_dimension(HighestWeight.of(9, key))
        else:
            block = 1
            for p in key:
                block *= weyl_dimension(HighestWeight.of(3, p))
            total += mult * block
    return total == dim_sym(case, degree)


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    """Integer coefficient list indexed by degree, truncated."""

    coefficients: tuple

    def __getitem__(self, d):
        return self.coefficients[d]

    def __len__(self):
        return len(self.coefficients)


def _trivial_gl_key(case, degree):
    if degree % 3:
        return None
    k = degree // 3
    if case == "e8":
        return (k,) * 9
    return ((k,) * 3,) * 3


def invariant_series(case: str, max_degree: int) -> HilbertSeries:
    """Dimensions of the invariants degree by degree (the multiplicity
    of the trivial constituent in each Sym^d)."""
    _check_case(case)
    _check_scale(case, max_degree)
    layers = _graded_gl(case, max_degree)
    coeffs = []
    for d in range(max_degree + 1):
        key = _trivial_gl_key(case, d)
        coeffs.append(layers[d].get(key, 0) if key is not None else 0)
    if coeffs[0] != 1:
        raise NegativeRemainder("degree-0 invariants should be the constants")
    return HilbertSeries(tuple(coeffs))


def _graded_multiplicity(case, weight, layer, degree) -> int:
    """Multiplicity of the SL-irreducible `weight` inside Sym^degree,
    read off the GL-keyed decomposition layer."""
    if case == "e8":
        c, r = divmod(3 * degree - weight.total, 9)
        if r or c < 0:
            return 0
        key = tuple(v + c for v in weight.entries)
        return layer.get(key, 0)
    key = []
    for hw in weight.factors:
        c, r = divmod(degree - hw.total, 3)
        if r or c < 0:
            return 0
        key.append(tuple(v + c for v in hw.entries))
    return layer.get(tuple(key), 0)


def harmonic_series(case: str, weight, max_degree: int) -> HilbertSeries:
    """Graded harmonic multiplicities of one irreducible, obtained by
    deconvolving the invariant series out of its graded multiplicities.

    weight is a HighestWeight for the trivector case and an E6Weight for
    the three-qutrit case.  Freeness of the coordinate ring over the
    invariants forces every coefficient to be a nonnegative integer;
    a negative one would falsify the bookkeeping and raises.
    """
    _check_case(case)
    _check_scale(case, max_degree)
    if case == "e6" and not isinstance(weight, E6Weight):
        raise PreconditionViolated("three-qutrit weights are E6Weight instances")
    if case == "e8" and not (isinstance(weight, HighestWeight) and weight.n == 9):
        raise PreconditionViolated("trivector weights are SL(9) HighestWeight instances")
    inv = invariant_series(case, max_degree).coefficients
    layers = _graded_gl(case, max_degree)
    graded = [
        _graded_multiplicity(case, weight, layers[d], d)
        for d in range(max_degree + 1)
    ]
    h: list[int] = []
    for d in range(max_degree + 1):
        val = graded[d]
        for j in range(1, d + 1):
            val -= inv[j] * h[d - j]
        if val < 0:
            raise NegativeCoefficient(
                f"harmonic series coefficient {val} at degree {d}"
            )
        h.append(val)
    return HilbertSeries(tuple(h))
