import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from metabelian.exceptions import ConfigurationError, DimensionExceeded
from metabelian.lie.context import AlgebraContext, algebra_context, fitting_pairs
from metabelian.lie.element import (
    FORMULA_L,
    FORMULA_LFR,
    STRUCTURAL,
    LieElement,
    bracket,
    format_element,
    in_fitting,
    phi_eval,
)
from metabelian.lie.expression import normal_form
from metabelian.lie.monomials import (
    basic_monomials,
    count_basic_monomials,
    fitting_dimension,
)
from metabelian.lie.sampling import random_element, random_polynomial, random_vector
from metabelian.modcore.vector import FreeModuleVector

contexts = st.sampled_from([(2, 2), (3, 2), (2, 3), (3, 3), (5, 2)])
seeds = st.integers(min_value=0, max_value=2**32 - 1)

# Every (p, r) below gets BATCH_EXAMPLES * BATCH_SIZE samples.
BATCH_CONTEXTS = [(2, 2), (2, 3), (3, 2), (3, 3)]
BATCH_EXAMPLES = 20
BATCH_SIZE = 50


def sample(context, seed, k):
    rng = np.random.default_rng(seed)
    return [random_element(context, rng) for _ in range(k)]


def fitting_element(context, rng, degree=1):
    return LieElement(context, None, random_vector(context.ring, context.t, degree, rng))


class TestAlgebraContext:
    def test_pairs(self):
        assert fitting_pairs(1) == ()
        assert fitting_pairs(2) == ((2, 1),)
        assert fitting_pairs(3) == ((2, 1), (3, 1), (3, 2))

    def test_rank_two(self, f2):
        assert f2.t == 1
        assert f2.fitting.n == 1
        assert f2.fitting.relations == ()

    def test_rank_three(self, f3):
        assert f3.t == 3
        assert len(f3.fitting.relations) == 1
        assert f3.fitting.relations[0].format() == "x3; x2; x1"

    def test_rank_one(self):
        context = AlgebraContext(2, 1)
        assert context.t == 0
        a1 = context.constant(1)
        assert bracket(a1, a1).is_zero

    def test_cached(self):
        assert algebra_context(3, 2) is algebra_context(3, 2)
        assert algebra_context(3, 2) == AlgebraContext(3, 2)
        assert algebra_context(3, 2) != algebra_context(2, 2)

    def test_pair_index(self, f2):
        assert f2.pair_index(2, 1) == (0, 1)
        assert f2.pair_index(1, 2) == (0, -1)
        with pytest.raises(ValueError):
            f2.pair_index(1, 1)

    def test_constant_out_of_range(self, f2):
        with pytest.raises(ValueError):
            f2.constant(3)

    def test_check(self, f2, f2_p3):
        with pytest.raises(ConfigurationError):
            f2.check(f2_p3.constant(1))


class TestLieElement:
    def test_construction(self, f2):
        u = LieElement(f2, [3, -1])
        assert u.linear == (1, 1)
        assert not u.is_fitting
        assert LieElement(f2).is_zero
        with pytest.raises(ConfigurationError):
            LieElement(f2, [1])
        with pytest.raises(TypeError):
            LieElement(f2, None, [1])

    def test_fitting_reduced_on_construction(self, f3):
        ring = f3.ring
        x1, x2, x3 = ring.gens
        relation = FreeModuleVector.from_list(ring, [x3, x2, x1])
        assert LieElement(f3, None, relation).is_zero

    def test_arithmetic(self, f2_p3):
        a1, a2 = f2_p3.constant(1), f2_p3.constant(2)
        u = a1 + a2 * 2
        assert u.linear == (1, 2)
        assert (u - u).is_zero
        assert (u * 3).is_zero
        assert -u == u * 2
        assert hash(a1 + a2) == hash(a2 + a1)

    def test_act(self, f2):
        e21 = f2.fitting_generator(2, 1)
        x1, _ = f2.ring.gens
        assert e21.act(x1) == bracket(e21, f2.constant(1))
        with pytest.raises(ValueError):
            f2.constant(1).act(x1)


class TestBracket:
    def test_generators(self, f2):
        a1, a2 = f2.constant(1), f2.constant(2)
        assert bracket(a2, a1) == f2.fitting_generator(2, 1)
        assert bracket(a1, a1).is_zero
        assert format_element(bracket(a2, a1)) == "[a2,a1]"
        assert format_element(bracket(bracket(a2, a1), a1)) == "[[a2,a1],a1]"

    def test_signs(self, f2_p3):
        a1, a2 = f2_p3.constant(1), f2_p3.constant(2)
        assert format_element(bracket(a1, a2)) == "2*[a2,a1]"

    def test_fitting_is_abelian(self, f2):
        e21 = f2.fitting_generator(2, 1)
        u = bracket(e21, f2.constant(2))
        assert bracket(e21, u).is_zero

    def test_jacobi_relation(self, f3):
        assert normal_form("[[a3,a2],a1] + [[a2,a1],a3] + [[a1,a3],a2]", f3).is_zero
        assert not normal_form("[[a3,a2],a1]", f3).is_zero

    def test_type_errors(self, f2, f2_p3):
        with pytest.raises(TypeError):
            bracket(f2.constant(1), 1)
        with pytest.raises(ConfigurationError):
            bracket(f2.constant(1), f2_p3.constant(1))

    @settings(max_examples=30, deadline=None)
    @given(pr=contexts, seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_anticommutative(self, pr, seed):
        context = algebra_context(*pr)
        u, v = sample(context, seed, 2)
        assert (bracket(u, v) + bracket(v, u)).is_zero
        assert bracket(u, u).is_zero

    @settings(max_examples=30, deadline=None)
    @given(pr=contexts, seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_jacobi(self, pr, seed):
        context = algebra_context(*pr)
        u, v, w = sample(context, seed, 3)
        total = (
            bracket(bracket(u, v), w)
            + bracket(bracket(v, w), u)
            + bracket(bracket(w, u), v)
        )
        assert total.is_zero

    @settings(max_examples=30, deadline=None)
    @given(pr=contexts, seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_metabelian(self, pr, seed):
        context = algebra_context(*pr)
        u, v, w, z = sample(context, seed, 4)
        assert bracket(bracket(u, v), bracket(w, z)).is_zero

    @settings(max_examples=30, deadline=None)
    @given(
        pr=contexts,
        seed=st.integers(min_value=0, max_value=2**32 - 1),
        c=st.integers(min_value=0, max_value=10),
    )
    def test_bilinear(self, pr, seed, c):
        context = algebra_context(*pr)
        u, v, w = sample(context, seed, 3)
        assert bracket(u + v * c, w) == bracket(u, w) + bracket(v, w) * c


class TestInFitting:
    def test_modes_on_generators(self, f2):
        a1 = f2.constant(1)
        e21 = f2.fitting_generator(2, 1)
        for mode in (STRUCTURAL, FORMULA_L, FORMULA_LFR):
            assert not in_fitting(a1, mode)
            assert in_fitting(e21, mode)
            assert in_fitting(f2.zero(), mode)

    def test_unknown_mode(self, f2):
        with pytest.raises(ValueError, match="mode"):
            in_fitting(f2.zero(), "semantic")

    @settings(max_examples=30, deadline=None)
    @given(pr=contexts, seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_modes_agree(self, pr, seed):
        context = algebra_context(*pr)
        (u,) = sample(context, seed, 1)
        expected = in_fitting(u, STRUCTURAL)
        assert in_fitting(u, FORMULA_LFR) == expected
        assert in_fitting(u, FORMULA_L) == expected

    @settings(max_examples=40, deadline=None)
    @given(pr=contexts, seed=seeds)
    def test_fitting_is_torsion_free(self, pr, seed):
        context = algebra_context(*pr)
        rng = np.random.default_rng(seed)
        u = fitting_element(context, rng, degree=2)
        f = random_polynomial(context.ring, 2, rng)
        assume(not u.is_zero and f != 0)
        assert in_fitting(u.act(f))
        assert not u.act(f).is_zero


class TestPhiEval:
    def test_independent(self, f2):
        a1, a2 = f2.constant(1), f2.constant(2)
        e21 = f2.fitting_generator(2, 1)
        assert phi_eval([a1, a2])
        assert phi_eval([a1 + e21, a2])
        assert not phi_eval([a1, a1 + e21])
        assert not phi_eval([e21])
        assert phi_eval([])

    def test_too_many(self, f2):
        with pytest.raises(DimensionExceeded):
            phi_eval([f2.constant(1)] * 3)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_exhaustive_agrees(self, seed):
        context = algebra_context(3, 2)
        elements = sample(context, seed, 2)
        assert phi_eval(elements) == phi_eval(elements, exhaustive=True)

    @pytest.mark.parametrize("p, r", [(2, 3), (3, 2), (3, 3)])
    def test_dependent_tuples(self, p, r):
        context = algebra_context(p, r)
        rng = np.random.default_rng(p * r)
        for _ in range(BATCH_SIZE):
            elements = sample(context, int(rng.integers(2**32)), r - 1)
            c = int(rng.integers(p))
            dependent = elements[0] * c + fitting_element(context, rng)
            for u in elements[1:]:
                dependent = dependent + u * int(rng.integers(p))
            elements.append(dependent)
            assert not phi_eval(elements)
            assert not phi_eval(elements, exhaustive=True)


@pytest.mark.slow
@pytest.mark.parametrize("p, r", BATCH_CONTEXTS)
class TestBatches:
    @settings(max_examples=BATCH_EXAMPLES, deadline=None)
    @given(seed=seeds)
    def test_lie_identities(self, p, r, seed):
        context = algebra_context(p, r)
        rng = np.random.default_rng(seed)
        for _ in range(BATCH_SIZE):
            u, v, w, z = (random_element(context, rng) for _ in range(4))
            assert (bracket(u, v) + bracket(v, u)).is_zero
            jacobi = (
                bracket(bracket(u, v), w)
                + bracket(bracket(v, w), u)
                + bracket(bracket(w, u), v)
            )
            assert jacobi.is_zero
            assert bracket(bracket(u, v), bracket(w, z)).is_zero

    @settings(max_examples=BATCH_EXAMPLES, deadline=None)
    @given(seed=seeds)
    def test_fitting_modes_agree(self, p, r, seed):
        context = algebra_context(p, r)
        rng = np.random.default_rng(seed)
        for i in range(BATCH_SIZE):
            if i % 2:
                u = fitting_element(context, rng)
            else:
                u = random_element(context, rng)
            expected = in_fitting(u, STRUCTURAL)
            assert in_fitting(u, FORMULA_LFR) == expected
            assert in_fitting(u, FORMULA_L) == expected

    @settings(max_examples=BATCH_EXAMPLES, deadline=None)
    @given(seed=seeds)
    def test_phi_exhaustive_agrees(self, p, r, seed):
        context = algebra_context(p, r)
        rng = np.random.default_rng(seed)
        for _ in range(BATCH_SIZE // 5):
            n = int(rng.integers(1, r + 1))
            elements = [random_element(context, rng) for _ in range(n)]
            assert phi_eval(elements) == phi_eval(elements, exhaustive=True)


class TestMonomials:
    def test_basic_monomials(self):
        assert list(basic_monomials(2, 2)) == [(2, 1)]
        assert list(basic_monomials(2, 3)) == [(2, 1, 1), (2, 1, 2)]
        assert list(basic_monomials(3, 1)) == []

    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_dimension(self, r, d):
        expected = (d - 1) * math.comb(r + d - 2, d)
        assert count_basic_monomials(r, d) == expected
        assert fitting_dimension(algebra_context(2, r), d) == expected

    def test_low_degree(self, f2):
        assert fitting_dimension(f2, 1) == 0
