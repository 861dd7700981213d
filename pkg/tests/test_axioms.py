import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest_cases import parametrize_with_cases

from metabelian.axioms import (
    CERTIFIED,
    AxiomInstance,
    ConsistentWitness,
    Member,
    NonMember,
    UnknownUpTo,
    check_instance,
    classification_table,
    classify_ucl,
    delta_consistency_semidecide,
    enumerate_axioms,
    independent_tuples,
    over_fitting,
    residue_certificate,
    s_f_alpha,
    transport,
    unitary_divisors,
)
from metabelian.axioms.check import is_annihilator_free
from metabelian.axioms.delta import unit_normalized
from metabelian.axioms.instance import (
    PHI1,
    PHI2,
    PHI3,
    PHI4,
    PHI5,
    PHI5_PRIME,
    PHI6,
    PHI7,
    PHI7_PRIME,
)
from metabelian.constants import LANGUAGE_L, LANGUAGE_LFR
from metabelian.data.synthetic import MODULE_CORPUS
from metabelian.equations.system import ModuleSystem
from metabelian.exceptions import ConfigurationError, NonDivisor, ResourceCapExceeded
from metabelian.lie.context import algebra_context
from metabelian.lie.element import LieElement
from metabelian.lie.expression import constants_to_variables, evaluate, parse_expression
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.lie.sampling import random_element
from metabelian.modcore.polynomial import PolynomialRing, format_polynomial
from metabelian.modcore.presentation import ModulePresentation
from metabelian.modcore.vector import FreeModuleVector


def system_over(context, coefficient, rhs):
    """The one-equation system y·coefficient = rhs over Fit(context)."""
    fitting = context.fitting
    c = FreeModuleVector.from_list(context.ring, rhs)
    return ModuleSystem.build(fitting, 1, [[coefficient]], [c])


def case_corpus_member():
    return [entry for entry in MODULE_CORPUS if entry.torsion_free]


def case_corpus_non_member():
    return [entry for entry in MODULE_CORPUS if not entry.torsion_free]


def extension_of(entry):
    M = entry.module
    return ExtensionAlgebra(algebra_context(M.ring.p, M.ring.r), M)


class TestIndependentTuples:
    def test_counts(self):
        assert len(list(independent_tuples(2, 1, 2))) == 3
        assert len(list(independent_tuples(2, 2, 2))) == 6
        assert len(list(independent_tuples(3, 1, 2))) == 8
        assert list(independent_tuples(2, 3, 2)) == []

    def test_order(self):
        assert list(independent_tuples(2, 1, 2)) == [((0, 1),), ((1, 0),), ((1, 1),)]

    def test_cap(self):
        with pytest.raises(ResourceCapExceeded):
            list(independent_tuples(2, 2, 2, cap=10))


class TestCheckInstance:
    def test_identities(self, u_algebra, torsion_algebra):
        for B in (u_algebra, torsion_algebra):
            assert check_instance(AxiomInstance(PHI1, 2), B)

    def test_u_algebra_shortcuts(self, u_algebra):
        assert check_instance(AxiomInstance(PHI2, 2), u_algebra)
        assert check_instance(AxiomInstance(PHI3, 2), u_algebra)

    @pytest.mark.parametrize("p, r", [(2, 2), (3, 2), (2, 3)])
    def test_pair_axioms_searched_on_free_algebras(self, p, r):
        B = ExtensionAlgebra.free(algebra_context(p, r), 0)
        # Bypass the torsion-free shortcut so the counterexample search runs.
        B._is_u_algebra = False
        assert check_instance(AxiomInstance(PHI2, r), B)
        assert check_instance(AxiomInstance(PHI3, r), B)

    @settings(max_examples=40, deadline=None)
    @given(
        pr=st.sampled_from([(2, 2), (3, 2), (2, 3)]),
        seed=st.integers(0, 2**32 - 1),
        fitting=st.booleans(),
    )
    def test_pair_axioms_on_free_algebras(self, pr, seed, fitting):
        B = ExtensionAlgebra.free(algebra_context(*pr), 0)
        rng = np.random.default_rng(seed)
        x, y, z = (random_element(B, rng) for _ in range(3))
        if fitting:
            y = y - B.element(LieElement(B.base, y.lie.linear))
            z = z - B.element(LieElement(B.base, z.lie.linear))
        xy = B.bracket(x, y)
        if xy:
            assert B.bracket(xy, x) or B.bracket(xy, y)
        if x and not B.bracket(x, y) and not B.bracket(x, z):
            assert not B.bracket(y, z)

    def test_commutative_transitivity_fails_on_torsion(self, torsion_algebra):
        # m commutes with a1 and [a2,a1], which do not commute.
        assert not check_instance(AxiomInstance(PHI3, 2), torsion_algebra)

    def test_rank_bound(self, f2_bare, f3_bare_p3):
        assert check_instance(AxiomInstance(PHI4, 2), f2_bare)
        assert not check_instance(AxiomInstance(PHI4, 2), f3_bare_p3)
        assert check_instance(AxiomInstance(PHI4, 3), f3_bare_p3)

    def test_annihilator_free(self, torsion_algebra, u_algebra, ring_2_2):
        x1, x2 = ring_2_2.gens
        assert not check_instance(
            AxiomInstance(PHI5_PRIME, 2, polynomial=x1), torsion_algebra
        )
        assert check_instance(AxiomInstance(PHI5_PRIME, 2, polynomial=x2), torsion_algebra)
        assert check_instance(AxiomInstance(PHI5_PRIME, 2, polynomial=x1), u_algebra)
        assert not is_annihilator_free(torsion_algebra.fitting, x1)

    def test_annihilator_free_of_arity(self, torsion_algebra, ring_2_2):
        x1, _ = ring_2_2.gens
        # Some independent a·x1 + b·x2 specializes x1 to x1 itself.
        assert not check_instance(
            AxiomInstance(PHI5, 2, arity=1, polynomial=x1), torsion_algebra
        )
        assert check_instance(
            AxiomInstance(PHI5, 2, arity=1, polynomial=x1 + 1), torsion_algebra
        )

    def test_rank_mismatch(self, f3, ring_2_3):
        f3_bare = ExtensionAlgebra.free(f3, 0)
        x1, _, _ = ring_2_3.gens
        ring_2_2 = PolynomialRing(2, 2)
        with pytest.raises(ConfigurationError):
            check_instance(AxiomInstance(PHI5_PRIME, 2, polynomial=ring_2_2.gens[0]), f3_bare)
        S = system_over(algebra_context(2, 2), ring_2_2.gens[0], [ring_2_2.one])
        with pytest.raises(ConfigurationError):
            check_instance(AxiomInstance(PHI7_PRIME, 2, system=S), f3_bare)
        assert check_instance(AxiomInstance(PHI5_PRIME, 3, polynomial=x1), f3_bare)

    def test_words(self, f2_bare, f3_bare_p3):
        word = parse_expression("[a2,a1]", 2, 2)
        assert check_instance(AxiomInstance(PHI6, 2, arity=2, word=word), f2_bare)
        word = parse_expression("[[a2,a1],a1]", 3, 2)
        assert check_instance(AxiomInstance(PHI6, 3, arity=2, word=word), f3_bare_p3)

    def test_words_skip_dependent_tuples(self, f2_bare):
        a1 = f2_bare.constant(1)
        e21 = f2_bare.element(f2_bare.base.fitting_generator(2, 1))
        word = parse_expression("[a2,a1]", 2, 2)
        as_polynomial = constants_to_variables(word)
        # Dependent pairs lie outside the quantifier whatever the word gives there.
        assert evaluate(as_polynomial, [a1, a1], f2_bare).is_zero
        assert evaluate(as_polynomial, [a1, a1 + e21], f2_bare) == f2_bare.bracket(e21, a1)
        assert check_instance(AxiomInstance(PHI6, 2, arity=2, word=word), f2_bare)
        # Only the 6 invertible 2x2 matrices over GF(2) are quantified.
        tuples = list(independent_tuples(2, 2, 2))
        assert len(tuples) == 6
        assert ((1, 0), (1, 0)) not in tuples
        assert ((0, 0), (0, 1)) not in tuples

    def test_words_vanishing_identically(self, f2_bare, f3_bare_p3):
        # [[a1,a2],[a1,a2]] is zero everywhere, so phi6 fails at once.
        word = parse_expression("[[a1,a2],[a1,a2]]", 2, 2)
        assert not check_instance(AxiomInstance(PHI6, 2, arity=2, word=word), f2_bare)
        word = parse_expression("[a1,a1]", 3, 1)
        assert not check_instance(AxiomInstance(PHI6, 3, arity=1, word=word), f3_bare_p3)

    def test_words_vacuous_in_low_rank(self):
        B = ExtensionAlgebra.free(algebra_context(2, 1), 1)
        word = parse_expression("[a2,a1]", 2, 2)
        assert check_instance(AxiomInstance(PHI6, 2, arity=2, word=word), B)

    def test_systems(self, f2, f2_bare, u_algebra):
        x1, _ = f2.ring.gens
        unsolvable = system_over(f2, x1, [f2.ring.one])
        solvable = system_over(f2, f2.ring.one, [f2.ring.one])
        for B in (f2_bare, u_algebra):
            assert check_instance(AxiomInstance(PHI7, 2, arity=2, system=unsolvable), B)
            assert check_instance(AxiomInstance(PHI7_PRIME, 2, system=unsolvable), B)
            assert not check_instance(AxiomInstance(PHI7, 2, arity=2, system=solvable), B)
            assert not check_instance(AxiomInstance(PHI7_PRIME, 2, system=solvable), B)

    def test_transport(self, f2, f2_bare):
        x1, x2 = f2.ring.gens
        S = system_over(f2, x1, [f2.ring.one])
        e21 = f2_bare.element(f2.fitting_generator(2, 1))
        ms = transport(S, ((1, 0), (0, 1)), f2_bare)
        assert ms.coefficients == ((x1,),)
        assert ms.rhs == (f2_bare.fitting_vector(e21),)
        ms = transport(S, ((0, 1), (1, 0)), f2_bare)
        assert ms.coefficients == ((x2,),)
        # [a1,a2] = [a2,a1] in characteristic 2.
        assert ms.rhs == (f2_bare.fitting_vector(e21),)

    def test_malformed(self, f2, f2_bare, ring_2_2):
        x1, x2 = ring_2_2.gens
        with pytest.raises(TypeError):
            check_instance("phi1", f2_bare)
        with pytest.raises(TypeError):
            check_instance(AxiomInstance(PHI1, 2), f2)
        with pytest.raises(ValueError, match="scheme"):
            check_instance(AxiomInstance("phi9", 2), f2_bare)
        with pytest.raises(ValueError):
            check_instance(AxiomInstance(PHI1, 0), f2_bare)
        with pytest.raises(ValueError):
            check_instance(AxiomInstance(PHI5_PRIME, 2), f2_bare)
        with pytest.raises(ValueError):
            check_instance(AxiomInstance(PHI5, 2, arity=0, polynomial=x1), f2_bare)
        with pytest.raises(ValueError, match="beyond arity"):
            check_instance(AxiomInstance(PHI5, 2, arity=1, polynomial=x2), f2_bare)
        with pytest.raises(ValueError):
            check_instance(AxiomInstance(PHI6, 2, arity=2), f2_bare)
        with pytest.raises(ValueError, match="constants only"):
            word = parse_expression("[x1,a1]", 2, 2)
            check_instance(AxiomInstance(PHI6, 2, arity=2, word=word), f2_bare)
        with pytest.raises(ValueError, match="beyond arity"):
            word = parse_expression("[a2,a1]", 2, 2)
            check_instance(AxiomInstance(PHI6, 2, arity=1, word=word), f2_bare)
        with pytest.raises(ValueError):
            check_instance(AxiomInstance(PHI7, 2, arity=2), f2_bare)


class TestDelta:
    def test_unit_normalized(self, ring_3_2):
        x1, _ = ring_3_2.gens
        assert unit_normalized(x1 + 2, ring_3_2) == 2 * x1 + 1
        with pytest.raises(ValueError):
            unit_normalized(x1, ring_3_2)

    def test_unitary_divisors(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        divisors = unitary_divisors((x1 + 1) * (x2 + 1), ring_2_2)
        assert sorted(format_polynomial(d) for d in divisors) == sorted(
            ["1", "x1 + 1", "x2 + 1", "x1*x2 + x1 + x2 + 1"]
        )
        assert [format_polynomial(d) for d in unitary_divisors(ring_2_2.one, ring_2_2)] == ["1"]
        with pytest.raises(ValueError):
            unitary_divisors(x1, ring_2_2)

    def test_s_f_alpha(self, f2):
        x1, x2 = f2.ring.gens
        S = system_over(f2, x1 + 1, [x2])
        transformed = s_f_alpha(S, x1 + 1, [x1 + 1])
        assert transformed.coefficients == ((f2.ring.one,),)
        assert transformed.rhs == (FreeModuleVector.from_list(f2.ring, [x1 * x2 + x2]),)

    def test_s_f_alpha_errors(self, f2):
        x1, x2 = f2.ring.gens
        S = system_over(f2, x2, [x2])
        with pytest.raises(NonDivisor):
            s_f_alpha(S, x1 + 1, [x1 + 1])
        with pytest.raises(ValueError, match="does not divide"):
            s_f_alpha(S, x1 + 1, [x2 + 1])
        with pytest.raises(ValueError, match="outside"):
            s_f_alpha(S, x1, [f2.ring.one])
        with pytest.raises(ConfigurationError):
            s_f_alpha(S, x1 + 1, [])

    def test_residue_certificate(self, f2):
        x1, x2 = f2.ring.gens
        assert residue_certificate(system_over(f2, x1, [f2.ring.one]))
        assert not residue_certificate(system_over(f2, x1 + 1, [f2.ring.one]))
        assert not residue_certificate(system_over(f2, x1, [x2]))

    def test_semidecide_witness(self, f2, f2_bare):
        x1, _ = f2.ring.gens
        S = system_over(f2, x1 + 1, [f2.ring.one])
        result = delta_consistency_semidecide(S, f2_bare, 1)
        assert isinstance(result, ConsistentWitness)
        assert result.f == x1 + 1
        assert result.alpha == (x1 + 1,)
        assert delta_consistency_semidecide(S, f2_bare, 0) == UnknownUpTo(0)

    def test_semidecide_monotone(self, f2, f2_bare):
        x1, _ = f2.ring.gens
        S = system_over(f2, x1 + 1, [f2.ring.one])
        first = delta_consistency_semidecide(S, f2_bare, 1)
        assert delta_consistency_semidecide(S, f2_bare, 2).f == first.f

    def test_semidecide_unknown(self, f2, f2_bare):
        x1, _ = f2.ring.gens
        S = system_over(f2, x1, [f2.ring.one])
        assert delta_consistency_semidecide(S, f2_bare, 2) == UnknownUpTo(2)
        with pytest.raises(ValueError):
            delta_consistency_semidecide(S, f2_bare, 7)
        with pytest.raises(ValueError):
            delta_consistency_semidecide(S, f2_bare, -1)

    def test_over_fitting(self, f2, u_algebra, f2_bare, ideal_module, f2_p3):
        x1, _ = f2.ring.gens
        S = system_over(f2, x1, [f2.ring.one])
        padded = over_fitting(S, u_algebra)
        assert padded.module.n == 3
        assert padded.rhs[0].to_list() == [f2.ring.one, f2.ring.zero, f2.ring.zero]
        assert over_fitting(S, f2_bare).rhs == S.rhs
        other = ModuleSystem.build(ideal_module, 1, [[x1]], [ideal_module.zero()])
        with pytest.raises(ConfigurationError):
            over_fitting(other, f2_bare)
        with pytest.raises(ConfigurationError):
            over_fitting(S, ExtensionAlgebra.free(f2_p3, 0))


class TestClassify:
    def test_torsion_lfr(self, torsion_algebra):
        verdict = classify_ucl(torsion_algebra, LANGUAGE_LFR)
        assert isinstance(verdict, NonMember)
        assert verdict.instance.scheme == PHI5_PRIME
        m, f = verdict.witness
        assert m == torsion_algebra.module.generator(0)
        assert f == torsion_algebra.ring.variable(1)
        assert not check_instance(verdict.instance, torsion_algebra)

    def test_torsion_l(self, torsion_algebra):
        verdict = classify_ucl(torsion_algebra, LANGUAGE_L)
        assert verdict.instance.scheme == PHI5
        assert verdict.instance.arity == 2
        assert format_polynomial(verdict.instance.polynomial) == "x1"
        assert not check_instance(verdict.instance, torsion_algebra)

    def test_member(self, u_algebra):
        verdict = classify_ucl(u_algebra)
        assert isinstance(verdict, Member)
        assert verdict.language == LANGUAGE_L
        assert verdict.r == 2
        assert verdict.certificate.s == 1

    def test_rank_too_large(self, f3_bare_p3):
        verdict = classify_ucl(f3_bare_p3, LANGUAGE_L, r=2)
        assert isinstance(verdict, NonMember)
        assert verdict.instance.scheme == PHI4
        assert len(verdict.witness) == 3
        assert not check_instance(verdict.instance, f3_bare_p3)

    def test_rank_too_small(self):
        B = ExtensionAlgebra.free(algebra_context(2, 1), 0)
        assert isinstance(classify_ucl(B, LANGUAGE_L, r=2), Member)
        verdict = classify_ucl(B, LANGUAGE_LFR, r=2)
        assert verdict.instance.scheme == PHI4
        assert verdict.witness is None

    def test_errors(self, f2, f2_bare):
        with pytest.raises(TypeError):
            classify_ucl(f2)
        with pytest.raises(ValueError, match="language"):
            classify_ucl(f2_bare, "L2")
        with pytest.raises(ValueError):
            classify_ucl(f2_bare, r=0)

    @parametrize_with_cases("entries", cases=".", prefix="case_corpus_")
    def test_corpus(self, entries):
        for entry in entries:
            B = extension_of(entry)
            for language in (LANGUAGE_L, LANGUAGE_LFR):
                verdict = classify_ucl(B, language)
                assert isinstance(verdict, Member) == entry.torsion_free, entry.name
                if entry.torsion_free:
                    assert verdict.certificate.s == entry.rank, entry.name

    def test_classification_table(self, u_algebra, torsion_algebra):
        table = classification_table([u_algebra, torsion_algebra])
        assert list(table.columns) == [
            "n",
            "generators",
            "relations",
            "rank",
            "member",
            "scheme",
            "s",
        ]
        assert table["member"].tolist() == [True, False]
        assert table["scheme"].tolist() == [None, PHI5]
        assert table.loc[0, "s"] == 1
        assert table["rank"].tolist() == [1, 0]


class TestEnumerateAxioms:
    def test_system_axioms(self, f2):
        instances = list(enumerate_axioms(PHI7, 1, f2))
        assert len(instances) == 4
        assert all(inst.status == CERTIFIED for inst in instances)
        assert all(inst.arity == 2 for inst in instances)
        coefficients = {format_polynomial(inst.system.coefficients[0][0]) for inst in instances}
        assert coefficients == {"0", "x1", "x2", "x1 + x2"}
        assert all(inst.system.rhs[0].to_list() == [f2.ring.one] for inst in instances)

    def test_unsolvable_systems(self, f2):
        instances = list(enumerate_axioms(PHI7_PRIME, 1, f2))
        assert len(instances) == 7

    def test_polynomials(self, f2):
        assert len(list(enumerate_axioms(PHI5_PRIME, 1, f2))) == 7
        instances = list(enumerate_axioms(PHI5, 1, f2))
        assert [inst.arity for inst in instances].count(1) == 3
        assert [inst.arity for inst in instances].count(2) == 7

    def test_words(self, f2):
        instances = list(enumerate_axioms(PHI6, 2, f2))
        assert [inst.arity for inst in instances] == [1, 2, 2, 2]

    def test_single_instance_schemes(self, f2):
        for scheme in (PHI1, PHI2, PHI3, PHI4):
            assert list(enumerate_axioms(scheme, 0, f2)) == [AxiomInstance(scheme, 2)]

    def test_deterministic(self, f2):
        first = [inst.format() for inst in enumerate_axioms(PHI7_PRIME, 1, f2)]
        second = [inst.format() for inst in enumerate_axioms(PHI7_PRIME, 1, f2)]
        assert first == second

    def test_errors(self, f2):
        with pytest.raises(ValueError):
            list(enumerate_axioms("phi9", 1, f2))
        with pytest.raises(ValueError):
            list(enumerate_axioms(PHI5, 7, f2))
        with pytest.raises(TypeError):
            list(enumerate_axioms(PHI5, 1, None))

    def test_instance_format(self, f2):
        (first, *_) = enumerate_axioms(PHI7, 1, f2)
        assert first.format().startswith("phi7(arity=2, system=")
        assert first.parameters()["status"] == CERTIFIED
        assert AxiomInstance(PHI4, 2).format() == "phi4"


class TestSoundness:
    @pytest.mark.parametrize(
        "scheme, bound", [(PHI5, 1), (PHI5_PRIME, 1), (PHI6, 2), (PHI7, 1), (PHI7_PRIME, 1)]
    )
    def test_free_algebras_satisfy_axioms(self, f2, scheme, bound):
        members = [ExtensionAlgebra.free(f2, 0), ExtensionAlgebra.free(f2, 1)]
        for inst in enumerate_axioms(scheme, bound, f2):
            for B in members:
                assert check_instance(inst, B), inst.format()

    def test_torsion_violates_an_axiom(self, f2, torsion_algebra):
        instances = enumerate_axioms(PHI5_PRIME, 1, f2)
        assert any(not check_instance(inst, torsion_algebra) for inst in instances)
