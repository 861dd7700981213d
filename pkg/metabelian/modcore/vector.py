from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from sympy.polys.orderings import grevlex

from metabelian.constants import Monomial, Polynomial
from metabelian.exceptions import ConfigurationError
from metabelian.modcore.polynomial import (
    PolynomialRing,
    coefficient_value,
    format_polynomial,
    total_degree,
)


class MonomialOrder(NamedTuple):
    tag: str


# degrevlex on monomials, position-over-term on components: a term in a lower
# component index is larger than any term in a higher one.
DEGREVLEX_POT = MonomialOrder("degrevlex-pot")


def check_order(order: MonomialOrder) -> None:
    if order != DEGREVLEX_POT:
        raise ConfigurationError(f"unsupported monomial order: {order}")


def term_key(index: int, monom: Monomial) -> Tuple:
    """Sort key of the term monom·e_index; larger key is larger term."""
    return (-index, grevlex(monom))


class Term(NamedTuple):
    index: int
    monom: Monomial
    coeff: int


class FreeModuleVector:
    """
    Element of the free module R^t.

    Sparse and immutable: only nonzero components are stored, in ascending
    component order.

    Parameters
    ----------
    ring: PolynomialRing
    width: int
        Number of components t.
    entries: dict of int to Polynomial, optional
    """

    __slots__ = ("ring", "width", "_entries", "_hash")

    def __init__(
        self,
        ring: PolynomialRing,
        width: int,
        entries: Optional[Dict[int, Polynomial]] = None,
    ):
        if width < 0:
            raise ConfigurationError(f"width must be >= 0, received: {width}")
        clean = {}
        for index, poly in (entries or {}).items():
            if not 0 <= index < width:
                raise ConfigurationError(
                    f"component index {index} out of range for width {width}"
                )
            ring.coerce(poly)
            if poly:
                clean[index] = poly
        self._init(ring, width, clean)

    def _init(self, ring, width, entries):
        self.ring = ring
        self.width = width
        self._entries = dict(sorted(entries.items()))
        self._hash = None

    @classmethod
    def _new(cls, ring, width, entries) -> "FreeModuleVector":
        # Trusted constructor: entries are nonzero and in range.
        vector = cls.__new__(cls)
        vector._init(ring, width, entries)
        return vector

    @classmethod
    def zero(cls, ring: PolynomialRing, width: int) -> "FreeModuleVector":
        return cls._new(ring, width, {})

    @classmethod
    def unit(
        cls, ring: PolynomialRing, width: int, index: int, coefficient=None
    ) -> "FreeModuleVector":
        coefficient = ring.one if coefficient is None else coefficient
        return cls(ring, width, {index: coefficient})

    @classmethod
    def from_list(
        cls, ring: PolynomialRing, polys: Sequence[Polynomial]
    ) -> "FreeModuleVector":
        return cls(ring, len(polys), dict(enumerate(polys)))

    @property
    def entries(self) -> Tuple[Tuple[int, Polynomial], ...]:
        return tuple(self._entries.items())

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._entries)

    def __getitem__(self, index: int) -> Polynomial:
        return self._entries.get(index, self.ring.zero)

    def to_list(self) -> List[Polynomial]:
        return [self[i] for i in range(self.width)]

    def __bool__(self) -> bool:
        return bool(self._entries)

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeModuleVector):
            return NotImplemented
        return (
            self.width == other.width
            and self.ring == other.ring
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.width, tuple((i, hash(p)) for i, p in self._entries.items()))
            )
        return self._hash

    def _check(self, other: "FreeModuleVector") -> None:
        if not isinstance(other, FreeModuleVector):
            raise TypeError(
                f"Expected FreeModuleVector, received: {type(other).__name__}"
            )
        if other.width != self.width:
            raise ConfigurationError(
                f"width mismatch: {self.width} and {other.width}"
            )
        if other.ring != self.ring:
            raise ConfigurationError(
                f"ring mismatch: {self.ring!r} and {other.ring!r}"
            )

    def __add__(self, other: "FreeModuleVector") -> "FreeModuleVector":
        self._check(other)
        entries = dict(self._entries)
        for index, poly in other._entries.items():
            value = entries.get(index)
            value = poly if value is None else value + poly
            if value:
                entries[index] = value
            else:
                entries.pop(index, None)
        return FreeModuleVector._new(self.ring, self.width, entries)

    def __neg__(self) -> "FreeModuleVector":
        return FreeModuleVector._new(
            self.ring, self.width, {i: -p for i, p in self._entries.items()}
        )

    def __sub__(self, other: "FreeModuleVector") -> "FreeModuleVector":
        return self + (-other)

    def scale(self, factor) -> "FreeModuleVector":
        """Multiply every component by a polynomial or an integer."""
        if not isinstance(factor, int):
            self.ring.coerce(factor)
        entries = {}
        for index, poly in self._entries.items():
            value = poly * factor
            if value:
                entries[index] = value
        return FreeModuleVector._new(self.ring, self.width, entries)

    def __mul__(self, factor) -> "FreeModuleVector":
        return self.scale(factor)

    __rmul__ = __mul__

    def mul_term(self, monom: Monomial, coeff) -> "FreeModuleVector":
        entries = {}
        for index, poly in self._entries.items():
            value = poly.mul_term((monom, coeff))
            if value:
                entries[index] = value
        return FreeModuleVector._new(self.ring, self.width, entries)

    def leading_term(self) -> Optional[Term]:
        """Largest term under degrevlex position-over-term; None for zero."""
        if not self._entries:
            return None
        index = next(iter(self._entries))
        monom, coeff = self._entries[index].LT
        return Term(index, monom, coeff)

    def monic(self) -> "FreeModuleVector":
        lead = self.leading_term()
        if lead is None:
            return self
        inverse = self.ring.field.inverse(coefficient_value(lead.coeff, self.ring.p))
        return self.scale(inverse)

    def degree(self) -> int:
        return max((total_degree(p) for p in self._entries.values()), default=-1)

    def shift(self, offset: int, width: int) -> "FreeModuleVector":
        """Place this vector at components offset.. of a wider free module."""
        if offset < 0 or offset + self.width > width:
            raise ConfigurationError(
                f"cannot place width {self.width} at offset {offset} in width {width}"
            )
        return FreeModuleVector._new(
            self.ring, width, {i + offset: p for i, p in self._entries.items()}
        )

    def block(self, start: int, stop: int) -> "FreeModuleVector":
        """Components start..stop-1 as a vector of width stop - start."""
        return FreeModuleVector._new(
            self.ring,
            stop - start,
            {i - start: p for i, p in self._entries.items() if start <= i < stop},
        )

    def format(self) -> str:
        """Components separated by ``;``, as in module presentation files."""
        return "; ".join(format_polynomial(p) for p in self.to_list())

    def __repr__(self) -> str:
        return f"FreeModuleVector(width={self.width}, [{self.format()}])"


def concatenate(vectors: Iterable[FreeModuleVector]) -> FreeModuleVector:
    vectors = list(vectors)
    if not vectors:
        raise ValueError("need at least one vector to concatenate")
    ring = vectors[0].ring
    width = sum(v.width for v in vectors)
    entries = {}
    offset = 0
    for v in vectors:
        if v.ring != ring:
            raise ConfigurationError("ring mismatch in concatenate")
        for i, p in v.entries:
            entries[i + offset] = p
        offset += v.width
    return FreeModuleVector._new(ring, width, entries)
