"""The two finite groups the multiplicity formulas average over.

Both Vinberg pairs in this package are tame, so harmonic multiplicities
reduce to fixed-vector dimensions under the centralizer of the Cartan
subspace.  For the three-qutrit pair that centralizer is a group of 81
triples of monomial 3x3 matrices; for the trivector pair it is a group
of 81 monomial 9x9 matrices inside SL(9).

Construction is deliberately paranoid: candidate elements come from
explicit parametrized families, but membership is verified against the
defining property (fixing the Cartan basis pointwise), the closure is
recomputed, and the expected order is asserted.  Any mismatch raises
StructureMismatch rather than silently producing a wrong average.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cartan import E6_CARTAN_BASIS, E8_CARTAN_BASIS, _sign_of
from .characters import EigenvalueMultiset
from .cyclotomic import Cyclotomic, NINTH_ROOTS, ONE, zeta_pow
from .errors import StructureMismatch, UnrepresentableRoot


@dataclass(frozen=True)
class MonomialMatrix:
    """n x n matrix with one nonzero cyclotomic entry per row and column.

    Column j carries its entry in row perm[j]; as an operator,
    g e_j = entries[j] e_{perm[j]}.
    """

    n: int
    perm: tuple[int, ...]
    entries: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError(f"not a permutation: {self.perm}")
        if len(self.entries) != self.n:
            raise ValueError("entry count does not match size")
        if any(e.is_zero() for e in self.entries):
            raise ValueError("monomial entries must be nonzero")

    @staticmethod
    def identity(n: int) -> "MonomialMatrix":
        return MonomialMatrix(n, tuple(range(n)), (ONE,) * n)

    @staticmethod
    def scalar(n: int, c: Cyclotomic) -> "MonomialMatrix":
        return MonomialMatrix(n, tuple(range(n)), (c,) * n)

    @staticmethod
    def diagonal(entries) -> "MonomialMatrix":
        entries = tuple(entries)
        return MonomialMatrix(len(entries), tuple(range(len(entries))), entries)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        perm = tuple(self.perm[p] for p in other.perm)
        entries = tuple(
            self.entries[other.perm[j]] * other.entries[j] for j in range(self.n)
        )
        return MonomialMatrix(self.n, perm, entries)

    def det(self) -> Cyclotomic:
        d = ONE
        for e in self.entries:
            d = d * e
        return d if _sign_of(self.perm) == 1 else -d

    def is_scalar(self) -> bool:
        return self.perm == tuple(range(self.n)) and len(set(self.entries)) == 1

    def order(self, cap: int = 81) -> int:
        e = MonomialMatrix.identity(self.n)
        g = self
        for k in range(1, cap + 1):
            if g == e:
                return k
            g = g * self
        raise StructureMismatch(f"element order exceeds {cap}")

    def cycles(self):
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.perm[j]
            out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class TripleElement:
    """Element of SL3 x SL3 x SL3 acting on C^3 x C^3 x C^3."""

    g1: MonomialMatrix
    g2: MonomialMatrix
    g3: MonomialMatrix

    @property
    def factors(self):
        return (self.g1, self.g2, self.g3)

    @staticmethod
    def identity() -> "TripleElement":
        e = MonomialMatrix.identity(3)
        return TripleElement(e, e, e)

    def __mul__(self, other: "TripleElement") -> "TripleElement":
        return TripleElement(
            self.g1 * other.g1, self.g2 * other.g2, self.g3 * other.g3
        )


@dataclass(frozen=True)
class FiniteGroup:
    """A finite set of elements verified to be closed under multiplication."""

    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def mulclose(generators, cap: int = 2000):
    """Closure of a generating set under multiplication (BFS)."""
    elems = set(generators)
    frontier = list(elems)
    while frontier:
        new = []
        for g in frontier:
            for h in list(elems):
                for prod_ in (g * h, h * g):
                    if prod_ not in elems:
                        elems.add(prod_)
                        new.append(prod_)
                        if len(elems) > cap:
                            raise StructureMismatch(
                                f"closure exceeded cap of {cap} elements"
                            )
        frontier = new
    return elems


# ---------------------------------------------------------------------------
# Group actions on the Cartan bases
# ---------------------------------------------------------------------------


def _rationalize(coords):
    return {k: Cyclotomic.rational(v) for k, v in coords.items()}


def wedge_image(g: MonomialMatrix, coords: dict) -> dict:
    """Push a wedge^3 coordinate dict through g (exterior-cube action)."""
    out: dict = {}
    for key, c in coords.items():
        rows = [g.perm[a] for a in key]
        coeff = g.entries[key[0]] * g.entries[key[1]] * g.entries[key[2]]
        coeff = coeff * _sign_of(rows)
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic.rational(c)
        new = tuple(sorted(rows))
        prev = out.get(new)
        term = coeff * c
        out[new] = term if prev is None else prev + term
    return {k: v for k, v in out.items() if not v.is_zero()}


def fixes_wedge(g: MonomialMatrix, w) -> bool:
    return wedge_image(g, w.coords) == _rationalize(w.coords)


def tensor_image(t: TripleElement, coords: dict) -> dict:
    out: dict = {}
    f1, f2, f3 = t.factors
    for (i, j, k), c in coords.items():
        coeff = f1.entries[i] * f2.entries[j] * f3.entries[k]
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic.rational(c)
        new = (f1.perm[i], f2.perm[j], f3.perm[k])
        prev = out.get(new)
        term = coeff * c
        out[new] = term if prev is None else prev + term
    return {k: v for k, v in out.items() if not v.is_zero()}


def fixes_tensor(t: TripleElement, x) -> bool:
    return tensor_image(t, x.coords) == _rationalize(x.coords)


# ---------------------------------------------------------------------------
# Eigenvalues of monomial matrices
# ---------------------------------------------------------------------------


def eigenvalues(g: MonomialMatrix) -> EigenvalueMultiset:
    """Eigenvalue multiset of a finite-order monomial matrix.

    A cycle of length k whose entries multiply to p contributes the k
    k-th roots of p.  All roots must lie among the ninth roots of unity;
    anything else is outside this package's scope and raises.
    """
    vals = []
    for cyc in g.cycles():
        p = ONE
        for j in cyc:
            p = p * g.entries[j]
        k = len(cyc)
        roots = [r for r in NINTH_ROOTS if r ** k == p]
        if len(roots) != k:
            raise UnrepresentableRoot(
                f"cycle of length {k} with entry product {p} has roots outside Q(zeta_9)"
            )
        vals.extend(roots)
    return EigenvalueMultiset(tuple(vals))


# ---------------------------------------------------------------------------
# The three-qutrit centralizer (81 triples)
# ---------------------------------------------------------------------------


def _w3(a: int) -> Cyclotomic:
    return zeta_pow(3 * (a % 3))


def _sl3_pattern(shape: str, d: int, m: int) -> MonomialMatrix:
    """The three matrix patterns the triple families are built from,
    parametrized by cube-root exponents d, m."""
    delta, mu, inv = _w3(d), _w3(m), _w3(-d - m)
    if shape == "diag":
        return MonomialMatrix.diagonal((delta, mu, inv))
    if shape == "cyc+":
        # [[0,d,0],[0,0,m],[inv,0,0]]: e1 -> inv e3, e2 -> d e1, e3 -> m e2
        return MonomialMatrix(3, (2, 0, 1), (inv, delta, mu))
    # [[0,0,d],[m,0,0],[0,inv,0]]: e1 -> m e2, e2 -> inv e3, e3 -> d e1
    return MonomialMatrix(3, (1, 2, 0), (mu, inv, delta))


def _e6_candidates():
    roots3 = range(3)
    for a, b in product(roots3, roots3):
        s1, s2, s3 = _w3(a), _w3(b), _w3(-a - b)
        yield TripleElement(
            MonomialMatrix.scalar(3, s1),
            MonomialMatrix.scalar(3, s2),
            MonomialMatrix.scalar(3, s3),
        )
        for shape in ("diag", "cyc+", "cyc-"):
            for d, m in product(roots3, roots3):
                if shape == "diag" and d == m:
                    continue  # scalar case already covered above
                pat = _sl3_pattern(shape, d, m)
                yield TripleElement(
                    MonomialMatrix.scalar(3, s1) * pat,
                    MonomialMatrix.scalar(3, s2) * pat,
                    MonomialMatrix.scalar(3, s3) * pat,
                )


@lru_cache(maxsize=None)
def e6_centralizer_group() -> FiniteGroup:
    """The 81 triples fixing the three-qutrit Cartan basis pointwise.

    Candidates are swept from the four display families (scalars,
    diagonals, and the two 3-cycle shapes, all scaled by cube roots);
    each is kept only if it actually fixes V1, V2, V3, and the result is
    deduplicated as triples of matrices and closure-checked.
    """
    kept = set()
    for cand in _e6_candidates():
        if all(fixes_tensor(cand, v) for v in E6_CARTAN_BASIS):
            kept.add(cand)
    closure = mulclose(kept, cap=200)
    if closure != kept:
        raise StructureMismatch("candidate set is not multiplicatively closed")
    if len(kept) != 81:
        raise StructureMismatch(f"expected 81 triples, found {len(kept)}")
    if TripleElement.identity() not in kept:
        raise StructureMismatch("identity triple missing")
    ordered = sorted(
        kept,
        key=lambda t: tuple(
            (f.perm, tuple(e.sort_key() for e in f.entries)) for f in t.factors
        ),
    )
    return FiniteGroup(tuple(ordered))


# ---------------------------------------------------------------------------
# The trivector centralizer (81 matrices in SL(9))
# ---------------------------------------------------------------------------


def block_scalar_element(z: int, w: int) -> MonomialMatrix:
    """w * blockdiag(I, zI, z^2 I), parameters as cube-root exponents."""
    return MonomialMatrix.diagonal(
        tuple(zeta_pow(3 * (w + z * (j // 3)) % 9) for j in range(9))
    )


_B_PATTERN = (0, 1, 2, 2, 0, 1, 1, 2, 0)


def block_diag_element(z: int, w: int) -> MonomialMatrix:
    """w * blockdiag(diag(1,z,z^2), diag(z^2,1,z), diag(z,z^2,1))."""
    return MonomialMatrix.diagonal(
        tuple(zeta_pow(3 * (w + z * _B_PATTERN[j]) % 9) for j in range(9))
    )


def block_shift_up() -> MonomialMatrix:
    """The block permutation sending e_j to e_{j+6 mod 9}."""
    return MonomialMatrix(9, tuple((j + 6) % 9 for j in range(9)), (ONE,) * 9)


def block_shift_down() -> MonomialMatrix:
    """The block permutation sending e_j to e_{j+3 mod 9}."""
    return MonomialMatrix(9, tuple((j + 3) % 9 for j in range(9)), (ONE,) * 9)


def mu_element() -> MonomialMatrix:
    """diag(w, 1, w^2) repeated three times, w a primitive cube root."""
    return MonomialMatrix.diagonal(tuple(zeta_pow(3 * ((1 - j) % 3)) for j in range(9)))


@lru_cache(maxsize=None)
def e8_centralizer_group() -> FiniteGroup:
    """Closure of the explicit generators inside SL(9), with every
    element verified to fix OMEGA_1..OMEGA_4 under the exterior-cube
    action; order must be exactly 81."""
    gens = set()
    for z, w in product(range(3), range(3)):
        gens.add(block_scalar_element(z, w))
        gens.add(block_diag_element(z, w))
    gens.add(block_shift_up())
    gens.add(block_shift_down())
    closure = mulclose(gens, cap=500)
    if len(closure) != 81:
        raise StructureMismatch(f"expected order 81, closure has {len(closure)}")
    one = Cyclotomic.integer(1)
    for g in closure:
        if g.det() != one:
            raise StructureMismatch("closure element leaves SL(9)")
        if not all(fixes_wedge(g, om) for om in E8_CARTAN_BASIS):
            raise StructureMismatch("closure element moves a Cartan basis vector")
    ordered = sorted(
        closure, key=lambda g: (g.perm, tuple(e.sort_key() for e in g.entries))
    )
    return FiniteGroup(tuple(ordered))


def central_scalars(group: FiniteGroup):
    return tuple(g for g in group if g.is_scalar())
