"""
Gröbner bases for submodules of free R-modules.

Buchberger's algorithm with the "normal" selection strategy, extended to
module vectors under the degrevlex position-over-term order: S-vectors are
only formed between vectors whose leading terms share a component. Syzygies
and lifts are read off a Gröbner basis of the augmented rows ``(g_k, e_k)``;
because the original components come first, position-over-term acts as an
elimination order for them.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from metabelian.constants import Polynomial
from metabelian.exceptions import ConfigurationError
from metabelian.modcore.vector import (
    DEGREVLEX_POT,
    FreeModuleVector,
    MonomialOrder,
    check_order,
    concatenate,
    term_key,
)

log = logging.getLogger(__name__)


def _check_widths(rows: Sequence[FreeModuleVector], width: Optional[int] = None):
    for row in rows:
        if not isinstance(row, FreeModuleVector):
            raise TypeError(
                f"Expected FreeModuleVector, received: {type(row).__name__}"
            )
    widths = {row.width for row in rows}
    if width is not None:
        widths.add(width)
    if len(widths) > 1:
        raise ConfigurationError(f"rows have different widths: {sorted(widths)}")
    rings = {row.ring for row in rows}
    if len(rings) > 1:
        raise ConfigurationError("rows belong to different polynomial rings")


def normal_form(
    v: FreeModuleVector, basis: Sequence[FreeModuleVector]
) -> FreeModuleVector:
    """
    Fully reduce v modulo basis, tail terms included.

    Any list of nonzero vectors is accepted; the remainder is unique when the
    basis is a Gröbner basis.
    """
    if not basis or not v:
        return v
    ring = v.ring
    domain = ring.ring.domain
    monomial_div = ring.ring.monomial_div
    leads = [(g.leading_term(), g) for g in basis]

    remainder = {}
    current = v
    while current:
        lead = current.leading_term()
        for g_lead, g in leads:
            if g_lead.index != lead.index:
                continue
            quotient = monomial_div(lead.monom, g_lead.monom)
            if quotient is not None:
                coeff = domain.quo(lead.coeff, g_lead.coeff)
                current = current - g.mul_term(quotient, coeff)
                break
        else:
            term = ring.ring.term_new(lead.monom, lead.coeff)
            remainder[lead.index] = remainder.get(lead.index, ring.zero) + term
            current = current - FreeModuleVector._new(
                ring, v.width, {lead.index: term}
            )
    return FreeModuleVector._new(ring, v.width, remainder)


def _s_vector(f: FreeModuleVector, g: FreeModuleVector) -> FreeModuleVector:
    ring = f.ring.ring
    f_lead = f.leading_term()
    g_lead = g.leading_term()
    lcm = ring.monomial_lcm(f_lead.monom, g_lead.monom)
    f_part = f.mul_term(
        ring.monomial_div(lcm, f_lead.monom), ring.domain.quo(ring.domain.one, f_lead.coeff)
    )
    g_part = g.mul_term(
        ring.monomial_div(lcm, g_lead.monom), ring.domain.quo(ring.domain.one, g_lead.coeff)
    )
    return f_part - g_part


def _minimalize(basis: List[FreeModuleVector]) -> List[FreeModuleVector]:
    monomial_div = basis[0].ring.ring.monomial_div if basis else None
    ordered = sorted(basis, key=lambda g: term_key(*g.leading_term()[:2]))
    minimal = []
    for g in ordered:
        lead = g.leading_term()
        redundant = any(
            h_lead.index == lead.index
            and monomial_div(lead.monom, h_lead.monom) is not None
            for h_lead in (h.leading_term() for h in minimal)
        )
        if not redundant:
            minimal.append(g)
    return minimal


def _interreduce(basis: List[FreeModuleVector]) -> List[FreeModuleVector]:
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        reduced.append(normal_form(g, others).monic())
    return sorted(
        reduced, key=lambda g: term_key(*g.leading_term()[:2]), reverse=True
    )


def groebner(
    rows: Sequence[FreeModuleVector], order: MonomialOrder = DEGREVLEX_POT
) -> List[FreeModuleVector]:
    """
    Reduced Gröbner basis of the submodule generated by rows.

    Parameters
    ----------
    rows: sequence of FreeModuleVector
        Generators, all of the same width.
    order: MonomialOrder
        Only degrevlex position-over-term is supported.

    Returns
    -------
    basis: list of FreeModuleVector
        Monic, interreduced, sorted by descending leading term.
    """
    check_order(order)
    rows = list(rows)
    _check_widths(rows)

    basis: List[FreeModuleVector] = []
    pairs: List[Tuple[tuple, int, int]] = []

    def add(h: FreeModuleVector) -> None:
        h = h.monic()
        k = len(basis)
        h_lead = h.leading_term()
        for i, g in enumerate(basis):
            g_lead = g.leading_term()
            if g_lead.index == h_lead.index:
                lcm = h.ring.ring.monomial_lcm(g_lead.monom, h_lead.monom)
                pairs.append((term_key(h_lead.index, lcm), i, k))
        basis.append(h)

    for row in rows:
        h = normal_form(row, basis)
        if h:
            add(h)

    n_pairs = 0
    while pairs:
        # Normal strategy: the pair with the smallest lcm first.
        pair = min(pairs)
        pairs.remove(pair)
        _, i, j = pair
        n_pairs += 1
        h = normal_form(_s_vector(basis[i], basis[j]), basis)
        if h:
            add(h)

    result = _interreduce(_minimalize(basis))
    log.debug(
        "groebner: %d rows, %d pairs, %d basis elements", len(rows), n_pairs, len(result)
    )
    return result


def reduce(
    v: FreeModuleVector, gb: Sequence[FreeModuleVector]
) -> Tuple[FreeModuleVector, bool]:
    """
    Normal form of v modulo a Gröbner basis, and whether v is a member.
    """
    _check_widths(gb, v.width)
    nf = normal_form(v, gb)
    return nf, nf.is_zero


class ExtendedBasis:
    """
    Gröbner basis of the augmented rows ``(g_k, e_k)`` of a list of generators.

    Supports syzygies of the generators and lifting of submodule members to
    coefficient vectors.

    Parameters
    ----------
    generators: sequence of FreeModuleVector
    width: int, optional
        Width of the generators; required when there are no generators.
    ring: PolynomialRing, optional
        Required when there are no generators.
    """

    def __init__(self, generators: Sequence[FreeModuleVector], width=None, ring=None):
        self.generators = list(generators)
        if self.generators:
            width = self.generators[0].width
            ring = self.generators[0].ring
        if width is None or ring is None:
            raise ValueError("width and ring are required without generators")
        _check_widths(self.generators, width)
        self.width = width
        self.ring = ring
        self.n_generator = len(self.generators)
        augmented = [
            concatenate(
                [g, FreeModuleVector.unit(ring, self.n_generator, k)]
            )
            for k, g in enumerate(self.generators)
        ]
        self.basis = groebner(augmented)

    def syzygies(self) -> List[FreeModuleVector]:
        """Generators (a reduced Gröbner basis) of the syzygy module."""
        total = self.width + self.n_generator
        return [
            g.block(self.width, total)
            for g in self.basis
            if g.block(0, self.width).is_zero
        ]

    def lift(self, v: FreeModuleVector) -> Optional[List[Polynomial]]:
        """
        Coefficients w with ``v = Σ w_k g_k``, or None if v is not in the
        submodule generated by the generators.
        """
        _check_widths([v], self.width)
        if self.n_generator == 0:
            return [] if v.is_zero else None
        total = self.width + self.n_generator
        nf = normal_form(v.shift(0, total), self.basis)
        if not nf.block(0, self.width).is_zero:
            return None
        return (-nf.block(self.width, total)).to_list()


def syzygies(generators: Sequence[FreeModuleVector]) -> List[FreeModuleVector]:
    if not generators:
        return []
    return ExtendedBasis(generators).syzygies()


def lift(
    v: FreeModuleVector, generators: Sequence[FreeModuleVector]
) -> Optional[List[Polynomial]]:
    return ExtendedBasis(generators, width=v.width, ring=v.ring).lift(v)
