"""Exact character evaluation for SL(n) irreducibles.

Three evaluation routes live here:

* the Weyl dimension formula (one big product, one exact division),
* Schur polynomial evaluation at an explicit eigenvalue multiset via the
  Jacobi-Trudi determinant of complete homogeneous symmetric polynomials
  (total even at repeated eigenvalues, so no quotient limits are needed),
* the Freudenthal recursion for full weight diagrams.

On top of these sits the closed-form value of the SL(9) character at the
distinguished order-3 element mu = diag(w,1,w^2,w,1,w^2,w,1,w^2), w a
primitive cube root of unity, expressed through the residue classes of
root pairings.  Its agreement with the Jacobi-Trudi route is one of the
package's acceptance criteria.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .cyclotomic import CUBE_ROOTS, Cyclotomic, ONE, ZERO
from .errors import FormulaViolation, PreconditionViolated
from .weights import HighestWeight, residue_partition, weyl_vector

#: Product of <alpha, rho> over the nine positive roots of SL(9) whose
#: pairing with rho is divisible by three: six roots of height 3 and
#: three of height 6, so 3^6 * 6^3 = 2^3 * 3^9.
MU_DENOMINATOR = 157464


def weyl_dimension(L: HighestWeight) -> int:
    """dim of the irreducible with highest weight L, as an exact integer."""
    lam = L.entries
    num = 1
    den = 1
    for i in range(L.n):
        for j in range(i + 1, L.n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise FormulaViolation("Weyl dimension product did not divide evenly")
    return q


@dataclass(frozen=True)
class EigenvalueMultiset:
    """Eigenvalues of a finite-order SL(n) element, with repetition.

    Entries must be ninth roots of unity multiplying to 1; that covers
    every group element this package ever evaluates a character at.
    """

    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        prod = ONE
        for v in self.values:
            if not (v ** 9) == ONE:
                raise ValueError(f"{v} is not a ninth root of unity")
            prod = prod * v
        if prod != ONE:
            raise ValueError("eigenvalue product is not 1, element not in SL(n)")

    def __len__(self):
        return len(self.values)

    def sort_key(self):
        return tuple(sorted(v.sort_key() for v in self.values))


def all_ones(n: int) -> EigenvalueMultiset:
    return EigenvalueMultiset((ONE,) * n)


def mu_eigenvalues() -> EigenvalueMultiset:
    """Eigenvalues of mu: each cube root of unity with multiplicity 3."""
    w, w2 = CUBE_ROOTS[1], CUBE_ROOTS[2]
    return EigenvalueMultiset((w, ONE, w2) * 3)


def _complete_homogeneous(values, kmax):
    """h_0..h_kmax at the given values, by Newton's identity
    k*h_k = sum_m p_m h_{k-m}."""
    powers = list(values)
    p = [None]
    for _ in range(kmax):
        p.append(sum(powers, ZERO))
        powers = [x * v for x, v in zip(powers, values)]
    h = [ONE]
    for k in range(1, kmax + 1):
        acc = ZERO
        for m in range(1, k + 1):
            acc = acc + p[m] * h[k - m]
        h.append(acc / k)
    return h


def _det(matrix):
    """Determinant over the cyclotomic ring, division-free.

    Rows are added one at a time; dp maps a used-column bitmask to the
    signed sum of partial products.  The sign picked up when assigning
    column j after mask S is the parity of the used columns above j.
    """
    size = len(matrix)
    dp = {0: ONE}
    for row in matrix:
        nxt = {}
        for mask, acc in dp.items():
            for j in range(size):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = row[j]
                if entry.is_zero():
                    continue
                term = acc * entry
                if (mask >> (j + 1)).bit_count() & 1:
                    term = -term
                key = mask | bit
                cur = nxt.get(key)
                nxt[key] = term if cur is None else cur + term
        dp = nxt
    return dp.get((1 << size) - 1, ZERO)


_char_cache: dict = {}


def char_value(L: HighestWeight, eigenvalues: EigenvalueMultiset) -> Cyclotomic:
    """Character of the irreducible L at an element with the given
    eigenvalues, via the Jacobi-Trudi determinant det(h_{lam_i - i + j}).

    Symmetric in the eigenvalues; equals weyl_dimension(L) when they are
    all 1.  Results are memoized (the evaluation is pure).
    """
    if len(eigenvalues) != L.n:
        raise PreconditionViolated(
            f"need {L.n} eigenvalues, got {len(eigenvalues)}"
        )
    key = (L.n, L.entries, eigenvalues.sort_key())
    hit = _char_cache.get(key)
    if hit is not None:
        return hit
    lam = [v for v in L.entries if v > 0]
    size = len(lam)
    if size == 0:
        result = ONE
    else:
        kmax = lam[0] + size - 1
        h = _complete_homogeneous(eigenvalues.values, kmax)

        def h_at(k):
            return ZERO if k < 0 else h[k]

        matrix = [[h_at(lam[i] - i + j) for j in range(size)] for i in range(size)]
        result = _det(matrix)
    _char_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# Freudenthal weight multiplicities
# ---------------------------------------------------------------------------


def _partitions(total, max_part, max_len):
    if total == 0:
        yield ()
        return
    if max_len == 0 or max_part == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield (first,) + rest


def _dominated_by(mu, lam):
    s_mu = 0
    s_lam = 0
    for a, b in zip(mu, lam):
        s_mu += a
        s_lam += b
        if s_mu > s_lam:
            return False
    return True


@lru_cache(maxsize=None)
def dominant_multiplicities(L: HighestWeight) -> dict:
    """Multiplicities of the dominant weights of the irreducible L,
    keyed by padded partition tuples.  Freudenthal recursion, exact."""
    n = L.n
    lam = L.entries
    total = sum(lam)
    rho = weyl_vector(n)
    candidates = []
    for p in _partitions(total, lam[0], n):
        mu = p + (0,) * (n - len(p))
        if _dominated_by(mu, lam):
            candidates.append(mu)
    candidates.sort(reverse=True)

    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    norm_top = sum(v * v for v in lam_rho)
    mults = {lam: 1}
    for mu in candidates:
        if mu == lam:
            continue
        acc = 0
        for i in range(n):
            for j in range(i + 1, n):
                k = 1
                while True:
                    v = list(mu)
                    v[i] += k
                    v[j] -= k
                    key = tuple(sorted(v, reverse=True))
                    m = mults.get(key)
                    if m is None:
                        break
                    acc += m * (v[i] - v[j])
                    k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denom = norm_top - sum(v * v for v in mu_rho)
        q, r = divmod(2 * acc, denom)
        if r:
            raise FormulaViolation("Freudenthal recursion produced a fraction")
        if q:
            mults[mu] = q
    return mults


def _distinct_permutations(items):
    counter = Counter(items)
    keys = sorted(counter, reverse=True)
    n = len(items)
    slot = [0] * n

    def rec(depth):
        if depth == n:
            yield tuple(slot)
            return
        for k in keys:
            if counter[k]:
                counter[k] -= 1
                slot[depth] = k
                yield from rec(depth + 1)
                counter[k] += 1

    yield from rec(0)


def orbit_size(mu) -> int:
    """Number of distinct coordinate permutations of mu."""
    size = factorial(len(mu))
    for c in Counter(mu).values():
        size //= factorial(c)
    return size


@dataclass(frozen=True)
class WeightDiagram:
    """Full weight-multiplicity mapping of one irreducible."""

    highest: HighestWeight
    counts: dict

    def total_mass(self) -> int:
        return sum(self.counts.values())


def weight_diagram(L: HighestWeight) -> WeightDiagram:
    """Every weight of the irreducible L with its multiplicity.

    The dominant multiplicities come from Freudenthal; the rest of the
    diagram is their orbit under coordinate permutations.
    """
    counts = {}
    for mu, m in dominant_multiplicities(L).items():
        for w in _distinct_permutations(mu):
            counts[w] = m
    return WeightDiagram(L, counts)


# ---------------------------------------------------------------------------
# Closed form at mu
# ---------------------------------------------------------------------------


def char_at_mu_closed_form(L: HighestWeight) -> Cyclotomic:
    """Character of the SL(9) irreducible L at mu, without evaluating
    any symmetric polynomial.

    Writing S_j for the positive roots whose pairing with L+rho is j mod
    3, the value is 0 unless |S_0| = 9, in which case it equals

        -(-1)^(sum of floor(<alpha,L+rho>/3) over all alpha > 0)
            * product(<alpha,L+rho> for alpha in S_0) / (2^3 * 3^9).

    Requires sum(L) divisible by 3; always a rational integer.
    """
    if L.n != 9:
        raise PreconditionViolated("mu lives in SL(9)")
    if L.total % 3 != 0:
        raise PreconditionViolated(
            f"weight size {L.total} is not divisible by 3"
        )
    rs = residue_partition(L)
    s0 = rs.s0
    if len(s0) < 9:
        raise FormulaViolation("fewer than nine roots pair to 0 mod 3")
    if len(s0) > 9:
        return ZERO
    exponent = sum(v // 3 for v in rs.values.values())
    prod = 1
    for alpha in s0:
        prod *= rs.values[alpha]
    value = Fraction(-prod if exponent % 2 == 0 else prod, MU_DENOMINATOR)
    if value.denominator != 1:
        raise FormulaViolation(
            f"character value {value} at mu is not a rational integer"
        )
    return Cyclotomic.integer(value.numerator)
