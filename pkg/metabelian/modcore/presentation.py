"""
Finitely presented R-modules.

A module M = R^n / N is stored as its generator count and the relation rows
generating N. Rank is computed by fraction-free elimination of the relation
matrix; the torsion submodule is the preimage N : h^∞ for a nonzero maximal
minor h, computed by iterated module quotients until the reduced Gröbner
basis stabilizes.
"""

import itertools
import logging
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from metabelian.constants import ENUMERATION_CAP, Polynomial
from metabelian.exceptions import ConfigurationError, ResourceCapExceeded, TorsionInput
from metabelian.modcore.groebner import groebner, normal_form, syzygies
from metabelian.modcore.polynomial import PolynomialRing, format_polynomial
from metabelian.modcore.vector import FreeModuleVector

log = logging.getLogger(__name__)


class Echelon(NamedTuple):
    """Outcome of fraction-free elimination of a relation matrix."""

    rank: int
    rows: Tuple[int, ...]
    columns: Tuple[int, ...]
    pivot: Polynomial


class Minor(NamedTuple):
    rows: Tuple[int, ...]
    columns: Tuple[int, ...]
    value: Polynomial


class Embedding(NamedTuple):
    """Injective module map M -> T_s given by the images of the generators."""

    rank: int
    images: Tuple[FreeModuleVector, ...]

    def apply(self, v: FreeModuleVector) -> FreeModuleVector:
        if v.width != len(self.images):
            raise ConfigurationError(
                f"expected a vector of width {len(self.images)}, received: {v.width}"
            )
        result = FreeModuleVector.zero(v.ring, self.rank)
        for index, poly in v.entries:
            result = result + self.images[index].scale(poly)
        return result


def fraction_free_echelon(
    matrix: Sequence[Sequence[Polynomial]], ring: PolynomialRing, ncol: int
) -> Echelon:
    """
    Bareiss elimination with column skipping. Every division is exact, so
    no fractions appear. The last pivot is a nonzero minor of size rank,
    supported on the returned rows and columns.
    """
    A = [list(row) for row in matrix]
    m = len(A)
    order = list(range(m))
    previous = ring.one
    columns = []
    k = 0
    for col in range(ncol):
        if k == m:
            break
        pivot = next((i for i in range(k, m) if A[i][col]), None)
        if pivot is None:
            continue
        A[k], A[pivot] = A[pivot], A[k]
        order[k], order[pivot] = order[pivot], order[k]
        for i in range(k + 1, m):
            for j in range(col + 1, ncol):
                A[i][j] = (A[k][col] * A[i][j] - A[i][col] * A[k][j]).exquo(previous)
            A[i][col] = ring.zero
        previous = A[k][col]
        columns.append(col)
        k += 1
    return Echelon(k, tuple(order[:k]), tuple(columns), previous)


def determinant(matrix: Sequence[Sequence[Polynomial]], ring: PolynomialRing) -> Polynomial:
    size = len(matrix)
    if size == 0:
        return ring.one
    A = [list(row) for row in matrix]
    sign = 1
    previous = ring.one
    for k in range(size):
        pivot = next((i for i in range(k, size) if A[i][k]), None)
        if pivot is None:
            return ring.zero
        if pivot != k:
            A[k], A[pivot] = A[pivot], A[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).exquo(previous)
            A[i][k] = ring.zero
        previous = A[k][k]
    return previous * sign


class ModulePresentation:
    """
    The module R^n / ⟨relations⟩.

    Parameters
    ----------
    ring: PolynomialRing
    n: int
        Number of generators.
    relations: sequence of FreeModuleVector, optional
        Relation rows of width n. Zero rows are dropped.
    """

    def __init__(
        self,
        ring: PolynomialRing,
        n: int,
        relations: Sequence[FreeModuleVector] = (),
    ):
        if not isinstance(ring, PolynomialRing):
            raise TypeError(
                f"Expected PolynomialRing, received: {type(ring).__name__}"
            )
        if n < 0:
            raise ConfigurationError(f"generator count must be >= 0, received: {n}")
        for row in relations:
            if row.width != n:
                raise ConfigurationError(
                    f"relation of width {row.width} in a module with {n} generators"
                )
            if row.ring != ring:
                raise ConfigurationError("relation over a different polynomial ring")
        self.ring = ring
        self.n = n
        self.relations = tuple(row for row in relations if row)
        self._groebner_basis = None
        self._echelon = None

    @classmethod
    def free(cls, ring: PolynomialRing, n: int) -> "ModulePresentation":
        return cls(ring, n)

    @classmethod
    def from_rows(
        cls, ring: PolynomialRing, n: int, rows: Sequence[Sequence[Polynomial]]
    ) -> "ModulePresentation":
        return cls(ring, n, [FreeModuleVector.from_list(ring, row) for row in rows])

    def __repr__(self) -> str:
        return (
            f"ModulePresentation(p={self.ring.p}, r={self.ring.r}, n={self.n}, "
            f"n_relation={len(self.relations)})"
        )

    @property
    def groebner_basis(self) -> List[FreeModuleVector]:
        """Reduced Gröbner basis of the relation submodule, computed once."""
        if self._groebner_basis is None:
            self._groebner_basis = groebner(self.relations)
        return self._groebner_basis

    @property
    def echelon(self) -> Echelon:
        if self._echelon is None:
            self._echelon = fraction_free_echelon(
                self.relation_matrix, self.ring, self.n
            )
        return self._echelon

    @property
    def relation_matrix(self) -> List[List[Polynomial]]:
        return [row.to_list() for row in self.relations]

    @property
    def rank(self) -> int:
        return self.n - self.echelon.rank

    def generator(self, i: int) -> FreeModuleVector:
        """The generator e_i, 0-based."""
        return FreeModuleVector.unit(self.ring, self.n, i)

    def zero(self) -> FreeModuleVector:
        return FreeModuleVector.zero(self.ring, self.n)

    def reduce(self, v: FreeModuleVector) -> FreeModuleVector:
        """Normal form of v in M."""
        if v.width != self.n:
            raise ConfigurationError(
                f"expected a vector of width {self.n}, received: {v.width}"
            )
        return normal_form(v, self.groebner_basis)

    def contains(self, v: FreeModuleVector) -> bool:
        """Whether v lies in the relation submodule, i.e. is zero in M."""
        return self.reduce(v).is_zero

    def same_submodule(self, other: "ModulePresentation") -> bool:
        return (
            self.ring == other.ring
            and self.n == other.n
            and self.groebner_basis == other.groebner_basis
        )

    def with_relations(self, rows: Sequence[FreeModuleVector]) -> "ModulePresentation":
        return ModulePresentation(self.ring, self.n, self.relations + tuple(rows))

    def direct_sum(self, other: "ModulePresentation") -> "ModulePresentation":
        if other.ring != self.ring:
            raise ConfigurationError("direct sum of modules over different rings")
        n = self.n + other.n
        rows = [row.shift(0, n) for row in self.relations]
        rows += [row.shift(self.n, n) for row in other.relations]
        return ModulePresentation(self.ring, n, rows)

    def torsion_free_quotient(self) -> "ModulePresentation":
        """M / T(M)."""
        return torsion_submodule(self)

    def hilbert_count(self, degree: int) -> int:
        """
        Number of standard monomials m·e_c with deg m = degree. For homogeneous
        relations this is the k-dimension of the degree component of M.
        """
        monomial_div = self.ring.ring.monomial_div
        leads = [g.leading_term() for g in self.groebner_basis]
        count = 0
        for monom in self.ring.monomials(degree):
            if sum(monom) != degree:
                continue
            for c in range(self.n):
                if not any(
                    lead.index == c and monomial_div(monom, lead.monom) is not None
                    for lead in leads
                ):
                    count += 1
        return count

    def format(self) -> str:
        """Module presentation file text."""
        lines = [f"{self.ring.p} {self.ring.r} {self.n}"]
        for row in self.relations:
            lines.append("; ".join(format_polynomial(p) for p in row.to_list()))
        return "\n".join(lines) + "\n"


def rank(M: ModulePresentation) -> int:
    """n minus the rank of the relation matrix over the fraction field of R."""
    return M.rank


def quotient(
    rows: Sequence[FreeModuleVector], h: Polynomial, ring: PolynomialRing, n: int
) -> List[FreeModuleVector]:
    """
    Generators of the module quotient N : h = {v : h·v ∈ N}, N generated by rows.

    Read off the syzygies of ``[h·e_1, ..., h·e_n, rows...]``.
    """
    generators = [FreeModuleVector.unit(ring, n, s, h) for s in range(n)]
    generators += list(rows)
    return [z.block(0, n) for z in syzygies(generators) if not z.block(0, n).is_zero]


def _saturate(
    M: ModulePresentation, h: Polynomial
) -> Tuple[List[FreeModuleVector], int]:
    current = M.groebner_basis
    exponent = 0
    while True:
        following = groebner(quotient(current, h, M.ring, M.n))
        if following == current:
            break
        current = following
        exponent += 1
    log.debug("saturation stabilized after %d quotients", exponent)
    return current, exponent


def saturation(M: ModulePresentation, h: Polynomial) -> ModulePresentation:
    """N : h^∞ as a presentation with the same generators."""
    if not h:
        raise ValueError("cannot saturate by the zero polynomial")
    if M.n == 0:
        return M
    basis, _ = _saturate(M, M.ring.coerce(h))
    return ModulePresentation(M.ring, M.n, basis)


def maximal_minors(M: ModulePresentation) -> Iterator[Minor]:
    """Nonzero minors of size rank of the relation matrix, in index order."""
    size = M.echelon.rank
    matrix = M.relation_matrix
    for rows in itertools.combinations(range(len(matrix)), size):
        for columns in itertools.combinations(range(M.n), size):
            value = determinant(
                [[matrix[i][j] for j in columns] for i in rows], M.ring
            )
            if value:
                yield Minor(rows, columns, value)


def torsion_submodule(
    M: ModulePresentation, minor: Optional[Minor] = None
) -> ModulePresentation:
    """
    Preimage in R^n of the torsion submodule T(M).

    The returned presentation has the same generators as M and relations
    generating N : h^∞ ⊇ N, so it also presents M / T(M).

    Parameters
    ----------
    M: ModulePresentation
    minor: Minor, optional
        Nonzero maximal minor to saturate by. Defaults to the last pivot of
        fraction-free elimination.
    """
    echelon = M.echelon
    if echelon.rank == 0:
        return ModulePresentation(M.ring, M.n, M.groebner_basis)
    if minor is None:
        h = echelon.pivot
    else:
        if len(minor.rows) != echelon.rank or not minor.value:
            raise ValueError(
                f"minor must be a nonzero minor of size {echelon.rank}"
            )
        h = minor.value
    return saturation(M, h)


def is_torsion_free(M: ModulePresentation) -> bool:
    return all(M.contains(v) for v in torsion_submodule(M).relations)


def torsion_witness(
    M: ModulePresentation,
) -> Optional[Tuple[FreeModuleVector, Polynomial]]:
    """
    A nonzero torsion element m of M and a nonzero f with m·f = 0, or None if
    M is torsion-free. The witness is checked by multiplication.
    """
    if M.echelon.rank == 0:
        return None
    h = M.echelon.pivot
    basis, exponent = _saturate(M, h)
    for g in basis:
        m = M.reduce(g)
        if m.is_zero:
            continue
        f = M.ring.one
        for _ in range(exponent):
            f = f * h
            if M.contains(m.scale(f)):
                return m, f
        raise RuntimeError("torsion witness failed verification")
    return None


def embed_into_free(M: ModulePresentation) -> Embedding:
    """
    Injective map of a torsion-free M into the free module T_s, s = rank(M).

    Splitting the columns of the relation matrix into pivot columns P and free
    columns F, the pivot rows give ``B·v_P + C·v_F = 0`` over the fraction
    field. Clearing the denominator h = det(B) maps e_c to h·u_c for c in F
    and e_P to -adj(B)·C, whose entries are Cramer determinants. Injectivity
    is certified by reducing every syzygy of the images modulo the relations.
    """
    if not is_torsion_free(M):
        raise TorsionInput("embedding into a free module requires a torsion-free module")

    ring = M.ring
    echelon = M.echelon
    s = M.n - echelon.rank
    matrix = M.relation_matrix
    pivot_columns = list(echelon.columns)
    free_columns = [c for c in range(M.n) if c not in echelon.columns]
    B = [[matrix[i][c] for c in pivot_columns] for i in echelon.rows]
    C = [[matrix[i][c] for c in free_columns] for i in echelon.rows]
    h = determinant(B, ring)

    images = [None] * M.n
    for j, c in enumerate(free_columns):
        images[c] = FreeModuleVector.unit(ring, s, j, h)
    for i, c in enumerate(pivot_columns):
        entries = {}
        for j in range(s):
            replaced = [
                row[:i] + [C[k][j]] + row[i + 1 :] for k, row in enumerate(B)
            ]
            entries[j] = -determinant(replaced, ring)
        images[c] = FreeModuleVector(ring, s, entries)

    if images:
        for kernel_element in syzygies(images):
            if not M.contains(kernel_element):
                raise RuntimeError("embedding is not injective")
    return Embedding(s, tuple(images))


def enumerate_module_elements(
    M: ModulePresentation, degree_bound: int, cap: int = ENUMERATION_CAP
) -> Iterator[FreeModuleVector]:
    """
    Normal forms of all vectors of R^n with component degrees <= bound,
    without duplicates, in a deterministic order.
    """
    if degree_bound < 0:
        raise ValueError(f"degree_bound must be >= 0, received: {degree_bound}")
    ring = M.ring
    monomials = ring.monomials(degree_bound)
    n_coefficient = M.n * len(monomials)
    count = ring.p**n_coefficient
    if count > cap:
        raise ResourceCapExceeded(
            f"{count} candidate elements at degree <= {degree_bound}, cap is {cap}"
        )
    seen = set()
    for coefficients in itertools.product(range(ring.p), repeat=n_coefficient):
        entries = {}
        for c in range(M.n):
            chunk = coefficients[c * len(monomials) : (c + 1) * len(monomials)]
            poly = ring.from_terms(dict(zip(monomials, chunk)))
            if poly:
                entries[c] = poly
        nf = M.reduce(FreeModuleVector._new(ring, M.n, entries))
        if nf not in seen:
            seen.add(nf)
            yield nf
