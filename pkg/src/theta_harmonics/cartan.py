"""Cartan-subspace identities for the two Vinberg pairs, in exact arithmetic.

For the three-qutrit pair the Cartan basis is the three rank-three
tensors V1, V2, V3 in C^3 x C^3 x C^3; for the trivector pair it is the
four trivectors OMEGA_1..OMEGA_4 in wedge^3 C^9.  This module checks,
with zero tolerance, that the basis vectors commute under the graded
bracket and that they are critical (all Lie-algebra inner products
<X v_i, v_j> vanish).

Conventions fixed once and documented here:

* wedge^2 C^3 is identified with the dual of C^3 by
  e_a ^ e_b -> sign(a, b, c) e_c* where {a, b, c} = {1, 2, 3};
* the pairing of two trivectors lands in wedge^6 C^9, whose basis is
  indexed by the *complementary* 3-subset; the sign is computed with the
  lexicographically smaller triple written first, which makes the
  pairing symmetric.  Only vanishing is asserted for distinct basis
  vectors, so the sign convention carries no mathematical weight.

All coordinates are rational; indices are 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


def _sign_of(seq) -> int:
    inv = 0
    for a, b in combinations(seq, 2):
        if a > b:
            inv += 1
    return -1 if inv & 1 else 1


@dataclass(frozen=True)
class Tensor333:
    """Element of C^3 x C^3 x C^3 with rational coordinates, keyed by
    index triples (i, j, k) in {0,1,2}^3."""

    coords: dict

    @staticmethod
    def of(entries) -> "Tensor333":
        return Tensor333({k: Fraction(v) for k, v in entries.items() if v})

    def is_zero(self) -> bool:
        return not self.coords


@dataclass(frozen=True)
class Wedge3of9:
    """Trivector in wedge^3 C^9 with rational coordinates, keyed by
    increasing index triples."""

    coords: dict

    @staticmethod
    def of(triples) -> "Wedge3of9":
        coords = {}
        for t in triples:
            key = tuple(sorted(t))
            if len(set(key)) != 3:
                raise ValueError(f"repeated index in {t}")
            coords[key] = coords.get(key, Fraction(0)) + _sign_of(t) * Fraction(1)
        return Wedge3of9({k: v for k, v in coords.items() if v})

    def is_zero(self) -> bool:
        return not self.coords


V1 = Tensor333.of({(0, 0, 0): 1, (1, 1, 1): 1, (2, 2, 2): 1})
V2 = Tensor333.of({(0, 1, 2): 1, (2, 0, 1): 1, (1, 2, 0): 1})
V3 = Tensor333.of({(2, 1, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1})
E6_CARTAN_BASIS = (V1, V2, V3)

OMEGA_1 = Wedge3of9.of([(0, 1, 2), (3, 4, 5), (6, 7, 8)])
OMEGA_2 = Wedge3of9.of([(0, 3, 6), (1, 4, 7), (2, 5, 8)])
OMEGA_3 = Wedge3of9.of([(0, 4, 8), (1, 5, 6), (2, 3, 7)])
OMEGA_4 = Wedge3of9.of([(0, 5, 7), (1, 3, 8), (2, 4, 6)])
E8_CARTAN_BASIS = (OMEGA_1, OMEGA_2, OMEGA_3, OMEGA_4)


# ---------------------------------------------------------------------------
# Three-qutrit pair
# ---------------------------------------------------------------------------


def _wedge2_dual(a: int, b: int):
    """e_a ^ e_b in wedge^2 C^3 as +-e_c*; returns (c, sign) or None."""
    if a == b:
        return None
    c = 3 - a - b
    return c, _sign_of((a, b, c))


def e6_bracket(x: Tensor333, y: Tensor333) -> dict:
    """Bilinear extension of
    [x1 x2 x3, y1 y2 y3] = (x1^y1) (x2^y2) (x3^y3),
    with each wedge^2 factor read as a dual vector.  Coordinates on the
    dual-cubed space, keyed by dual index triples."""
    out: dict = {}
    for kx, cx in x.coords.items():
        for ky, cy in y.coords.items():
            sign = 1
            key = []
            for a, b in zip(kx, ky):
                w = _wedge2_dual(a, b)
                if w is None:
                    break
                key.append(w[0])
                sign *= w[1]
            else:
                k = tuple(key)
                out[k] = out.get(k, Fraction(0)) + sign * cx * cy
    return {k: v for k, v in out.items() if v}


#: Generators of Lie(SL3 x SL3 x SL3) used for criticality checks: each
#: acts in a single tensor factor, as E_rs (r != s) or E_rr - E_ss (r < s).
E6_GENERATORS = tuple(
    ("E", f, r, s) for f in range(3) for r in range(3) for s in range(3) if r != s
) + tuple(
    ("H", f, r, s) for f in range(3) for r in range(3) for s in range(r + 1, 3)
)


def apply_e6_generator(gen, t: Tensor333) -> Tensor333:
    kind, f, r, s = gen
    out: dict = {}
    if kind == "E":
        for key, c in t.coords.items():
            if key[f] == s:
                new = key[:f] + (r,) + key[f + 1:]
                out[new] = out.get(new, Fraction(0)) + c
    else:
        for key, c in t.coords.items():
            factor = (1 if key[f] == r else 0) - (1 if key[f] == s else 0)
            if factor:
                out[key] = out.get(key, Fraction(0)) + factor * c
    return Tensor333({k: v for k, v in out.items() if v})


def tensor_inner(x: Tensor333, y: Tensor333) -> Fraction:
    """Standard coordinate pairing (coordinates here are all rational,
    so no conjugation is involved)."""
    acc = Fraction(0)
    small, big = (x.coords, y.coords) if len(x.coords) <= len(y.coords) else (y.coords, x.coords)
    for k, v in small.items():
        w = big.get(k)
        if w is not None:
            acc += v * w
    return acc


def e6_criticality(i: int, j: int, gen) -> Fraction:
    """<X v_i, v_j> for 1-based Cartan indices i, j and a generator X."""
    return tensor_inner(apply_e6_generator(gen, E6_CARTAN_BASIS[i - 1]), E6_CARTAN_BASIS[j - 1])


# ---------------------------------------------------------------------------
# Trivector pair
# ---------------------------------------------------------------------------


def _complement(six) -> tuple:
    return tuple(sorted(set(range(9)) - set(six)))


def e8_wedge(a: Wedge3of9, b: Wedge3of9) -> dict:
    """Pairing of two trivectors into wedge^6 C^9, keyed by the
    complementary 3-subset.

    The sign of e_S . e_T is the shuffle sign with the lexicographically
    smaller of S, T written first, making the pairing symmetric; for
    distinct Cartan basis vectors every summand pair shares an index, so
    the value is 0 under any convention.
    """
    out: dict = {}
    for ka, ca in a.coords.items():
        for kb, cb in b.coords.items():
            if set(ka) & set(kb):
                continue
            first, second = (ka, kb) if ka <= kb else (kb, ka)
            seq = first + second
            key = _complement(seq)
            out[key] = out.get(key, Fraction(0)) + _sign_of(seq) * ca * cb
    return {k: v for k, v in out.items() if v}


#: sl(9) generators for criticality: E_rs with r < s, and the simple
#: coroot differences E_rr - E_{r+1,r+1}.  44 in total.
E8_GENERATORS = tuple(
    ("E", r, s) for r in range(9) for s in range(r + 1, 9)
) + tuple(("H", r, r + 1) for r in range(8))


def apply_e8_generator(gen, w: Wedge3of9) -> Wedge3of9:
    """Derivation action on wedge^3: X acts on one slot at a time."""
    kind, r, s = gen
    out: dict = {}
    for key, c in w.coords.items():
        if kind == "E":
            for pos, idx in enumerate(key):
                if idx != s:
                    continue
                replaced = list(key)
                replaced[pos] = r
                if len(set(replaced)) != 3:
                    continue
                new = tuple(sorted(replaced))
                term = _sign_of(replaced) * c
                out[new] = out.get(new, Fraction(0)) + term
        else:
            factor = (1 if r in key else 0) - (1 if s in key else 0)
            if factor:
                out[key] = out.get(key, Fraction(0)) + factor * c
    return Wedge3of9({k: v for k, v in out.items() if v})


def wedge_inner(x: Wedge3of9, y: Wedge3of9) -> Fraction:
    acc = Fraction(0)
    for k, v in x.coords.items():
        w = y.coords.get(k)
        if w is not None:
            acc += v * w
    return acc


def e8_criticality(i: int, j: int, gen) -> Fraction:
    """<X omega_i, omega_j> for 1-based Cartan indices and generator X."""
    return wedge_inner(apply_e8_generator(gen, E8_CARTAN_BASIS[i - 1]), E8_CARTAN_BASIS[j - 1])


# ---------------------------------------------------------------------------
# Check suite (consumed by the CLI)
# ---------------------------------------------------------------------------


def run_checks():
    """Run every Cartan identity; yields (name, passed, detail) triples."""
    results = []
    for i in range(1, 4):
        for j in range(1, 4):
            val = e6_bracket(E6_CARTAN_BASIS[i - 1], E6_CARTAN_BASIS[j - 1])
            results.append((f"e6 bracket [v{i},v{j}] = 0", not val, str(val) if val else ""))
    bad = sum(
        1
        for i in range(1, 4)
        for j in range(1, 4)
        for gen in E6_GENERATORS
        if e6_criticality(i, j, gen) != 0
    )
    total = 9 * len(E6_GENERATORS)
    results.append((f"e6 criticality {total - bad}/{total} inner products vanish", bad == 0, ""))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            val = e8_wedge(E8_CARTAN_BASIS[i - 1], E8_CARTAN_BASIS[j - 1])
            results.append((f"e8 pairing omega{i}^omega{j} = 0", not val, str(val) if val else ""))
    bad = sum(
        1
        for i in range(1, 5)
        for j in range(1, 5)
        for gen in E8_GENERATORS
        if e8_criticality(i, j, gen) != 0
    )
    total = 16 * len(E8_GENERATORS)
    results.append((f"e8 criticality {total - bad}/{total} inner products vanish", bad == 0, ""))
    return results
