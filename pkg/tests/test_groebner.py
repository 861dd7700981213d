import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metabelian.exceptions import ConfigurationError
from metabelian.lie.sampling import random_polynomial, random_vector
from metabelian.modcore.groebner import (
    ExtendedBasis,
    groebner,
    lift,
    normal_form,
    reduce,
    syzygies,
)
from metabelian.modcore.polynomial import PolynomialRing
from metabelian.modcore.vector import (
    DEGREVLEX_POT,
    FreeModuleVector,
    MonomialOrder,
    concatenate,
)


def combine(weights, rows):
    total = FreeModuleVector.zero(rows[0].ring, rows[0].width)
    for w, row in zip(weights, rows):
        total = total + row.scale(w)
    return total


def random_rows(p, r, width, n_row, degree, seed):
    rng = np.random.default_rng(seed)
    ring = PolynomialRing(p, r)
    return [random_vector(ring, width, degree, rng) for _ in range(n_row)]


class TestFreeModuleVector:
    def test_construction(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        v = FreeModuleVector(ring_2_2, 3, {2: x1, 0: ring_2_2.zero})
        assert v.width == 3
        assert v.support == (2,)
        assert v[2] == x1
        assert v[0] == ring_2_2.zero
        assert v.to_list() == [ring_2_2.zero, ring_2_2.zero, x1]
        assert v.format() == "0; 0; x1"

    def test_construction_errors(self, ring_2_2, ring_3_2):
        with pytest.raises(ConfigurationError):
            FreeModuleVector(ring_2_2, -1)
        with pytest.raises(ConfigurationError):
            FreeModuleVector(ring_2_2, 1, {1: ring_2_2.one})
        with pytest.raises(ConfigurationError):
            FreeModuleVector(ring_2_2, 1, {0: ring_3_2.one})

    def test_arithmetic(self, ring_3_2):
        x1, x2 = ring_3_2.gens
        u = FreeModuleVector.from_list(ring_3_2, [x1, x2])
        v = FreeModuleVector.from_list(ring_3_2, [-x1, x1])
        assert (u + v).to_list() == [ring_3_2.zero, x1 + x2]
        assert (u - u).is_zero
        assert not (u - u)
        assert u.scale(x2) == FreeModuleVector.from_list(ring_3_2, [x1 * x2, x2**2])
        assert 2 * u == u.scale(2)
        assert u.scale(3).is_zero
        assert hash(u + v) == hash(FreeModuleVector.from_list(ring_3_2, [0 * x1, x1 + x2]))

    def test_mismatch(self, ring_2_2):
        u = FreeModuleVector.zero(ring_2_2, 1)
        v = FreeModuleVector.zero(ring_2_2, 2)
        with pytest.raises(ConfigurationError, match="width"):
            u + v
        with pytest.raises(TypeError):
            u + 1

    def test_leading_term_position_over_term(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        v = FreeModuleVector.from_list(ring_2_2, [x2, x1**3])
        lead = v.leading_term()
        # A term in a lower component beats any term in a higher one.
        assert lead.index == 0
        assert lead.monom == (0, 1)
        assert FreeModuleVector.zero(ring_2_2, 2).leading_term() is None

    def test_monic(self, ring_3_2):
        x1, _ = ring_3_2.gens
        v = FreeModuleVector.from_list(ring_3_2, [2 * x1 + 1])
        assert v.monic().to_list() == [x1 + 2]

    def test_shift_block_concatenate(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        u = FreeModuleVector.from_list(ring_2_2, [x1, x2])
        w = u.shift(1, 4)
        assert w.to_list() == [0 * x1, x1, x2, 0 * x1]
        assert w.block(1, 3) == u
        assert concatenate([u, u]).to_list() == [x1, x2, x1, x2]
        with pytest.raises(ConfigurationError):
            u.shift(3, 4)
        with pytest.raises(ValueError):
            concatenate([])

    def test_degree(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        assert FreeModuleVector.from_list(ring_2_2, [x1 * x2, x1]).degree() == 2
        assert FreeModuleVector.zero(ring_2_2, 2).degree() == -1


class TestGroebner:
    def test_ideal(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        rows = [
            FreeModuleVector.from_list(ring_2_2, [x1 + x2]),
            FreeModuleVector.from_list(ring_2_2, [x2]),
        ]
        basis = groebner(rows)
        assert [g.to_list() for g in basis] == [[x1], [x2]]

    def test_unit(self, ring_3_2):
        x1, _ = ring_3_2.gens
        rows = [
            FreeModuleVector.from_list(ring_3_2, [x1]),
            FreeModuleVector.from_list(ring_3_2, [x1 + 2]),
        ]
        basis = groebner(rows)
        assert [g.to_list() for g in basis] == [[ring_3_2.one]]

    def test_empty(self):
        assert groebner([]) == []

    def test_unsupported_order(self, ring_2_2):
        with pytest.raises(ConfigurationError):
            groebner([], MonomialOrder("lex"))
        assert groebner([], DEGREVLEX_POT) == []

    def test_width_mismatch(self, ring_2_2):
        rows = [FreeModuleVector.zero(ring_2_2, 1), FreeModuleVector.zero(ring_2_2, 2)]
        with pytest.raises(ConfigurationError, match="widths"):
            groebner(rows)

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**16), p=st.sampled_from([2, 3]))
    def test_members_reduce_to_zero(self, seed, p):
        rows = random_rows(p, 2, 2, 3, 1, seed)
        basis = groebner(rows)
        for row in rows:
            _, member = reduce(row, basis)
            assert member
        rng = np.random.default_rng(seed + 1)
        ring = rows[0].ring
        weights = [random_polynomial(ring, 1, rng) for _ in rows]
        assert normal_form(combine(weights, rows), basis).is_zero

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**16))
    def test_reduced_and_idempotent(self, seed):
        rows = random_rows(2, 2, 2, 3, 1, seed)
        basis = groebner(rows)
        assert groebner(basis) == basis
        for g in basis:
            assert g.leading_term().coeff == 1
        # Row order does not change the reduced basis.
        assert groebner(list(reversed(rows))) == basis


class TestSyzygiesAndLift:
    def test_koszul_syzygy(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        generators = [
            FreeModuleVector.from_list(ring_2_2, [x1]),
            FreeModuleVector.from_list(ring_2_2, [x2]),
        ]
        (z,) = syzygies(generators)
        assert z.to_list() == [x2, x1]
        assert combine(z.to_list(), generators).is_zero

    def test_lift(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        generators = [
            FreeModuleVector.from_list(ring_2_2, [x1]),
            FreeModuleVector.from_list(ring_2_2, [x2]),
        ]
        v = FreeModuleVector.from_list(ring_2_2, [x1**2 + x1 * x2])
        weights = lift(v, generators)
        assert combine(weights, generators) == v
        assert lift(FreeModuleVector.from_list(ring_2_2, [ring_2_2.one]), generators) is None

    def test_lift_without_generators(self, ring_2_2):
        extended = ExtendedBasis([], width=2, ring=ring_2_2)
        assert extended.lift(FreeModuleVector.zero(ring_2_2, 2)) == []
        assert extended.lift(FreeModuleVector.unit(ring_2_2, 2, 0)) is None
        with pytest.raises(ValueError):
            ExtendedBasis([])

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**16), p=st.sampled_from([2, 3]))
    def test_random_syzygies_and_lifts(self, seed, p):
        rows = random_rows(p, 2, 2, 3, 1, seed)
        rows = [row for row in rows if row]
        if not rows:
            return
        for z in syzygies(rows):
            assert combine(z.to_list(), rows).is_zero
        rng = np.random.default_rng(seed + 7)
        weights = [random_polynomial(rows[0].ring, 1, rng) for _ in rows]
        v = combine(weights, rows)
        lifted = lift(v, rows)
        assert lifted is not None
        assert combine(lifted, rows) == v
