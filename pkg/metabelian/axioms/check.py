"""
Evaluation of single axiom instances on an algebra B = F_n ⊕ M.

The identities phi1 to phi3 are checked semantically: phi1 on seeded random
elements, phi2 and phi3 structurally when the Fitting module of B is
torsion-free and by a counterexample search over a probe set otherwise. The
remaining schemes quantify over tuples that are linearly independent modulo
the Fitting radical; these are checked on every tuple of linear elements,
which decides the torsion-freeness conditions exactly and leaves the
Fitting parts of the tuple out of the quantifier for phi6 and phi7.
"""

import itertools
import logging
from typing import Iterator, List, Tuple

import numpy as np

from metabelian.axioms.delta import over_fitting
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
    SCHEMES,
    AxiomInstance,
)
from metabelian.constants import ENUMERATION_CAP, IDENTITY_SAMPLES, Polynomial
from metabelian.equations.system import ModuleSystem
from metabelian.exceptions import ConfigurationError, ResourceCapExceeded
from metabelian.lie.context import algebra_context
from metabelian.lie.element import LieElement
from metabelian.lie.expression import (
    constants,
    constants_to_variables,
    element_expression,
    evaluate,
    variables,
)
from metabelian.lie.extension import ExtElement, ExtensionAlgebra
from metabelian.lie.sampling import random_element
from metabelian.modcore.field import rank_mod_p
from metabelian.modcore.linsolve import NoSolution
from metabelian.modcore.polynomial import substitute
from metabelian.modcore.presentation import ModulePresentation, quotient, torsion_witness

log = logging.getLogger(__name__)


def independent_tuples(
    p: int, n: int, rank: int, cap: int = ENUMERATION_CAP
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    All n-tuples of linearly independent vectors of k^rank, as rows.

    Nothing is yielded when n > rank.
    """
    if n > rank:
        return
    count = p ** (n * rank)
    if count > cap:
        raise ResourceCapExceeded(
            f"{count} candidate tuples of {n} linear forms in rank {rank}, cap is {cap}"
        )
    for values in itertools.product(range(p), repeat=n * rank):
        rows = tuple(values[i * rank : (i + 1) * rank] for i in range(n))
        if rank_mod_p(np.array(rows, dtype=np.int64).reshape(n, rank), p) == n:
            yield rows


def linear_elements(B: ExtensionAlgebra, rows) -> List[ExtElement]:
    return [B.element(LieElement(B.base, row)) for row in rows]


def is_annihilator_free(N: ModulePresentation, g: Polynomial) -> bool:
    """Whether N : g = N, i.e. multiplication by g is injective on R^n / N."""
    return all(N.contains(v) for v in quotient(N.groebner_basis, g, N.ring, N.n))


def _validate(inst: AxiomInstance, B: ExtensionAlgebra) -> None:
    if not isinstance(inst, AxiomInstance):
        raise TypeError(f"Expected AxiomInstance, received: {type(inst).__name__}")
    if not isinstance(B, ExtensionAlgebra):
        raise TypeError(f"Expected ExtensionAlgebra, received: {type(B).__name__}")
    if inst.scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, received: {inst.scheme}")
    if inst.r < 1:
        raise ValueError(f"language rank must be >= 1, received: {inst.r}")

    scheme = inst.scheme
    if scheme in (PHI5, PHI5_PRIME):
        f = inst.polynomial
        if f is None or not f:
            raise ValueError(f"{scheme} needs a nonzero polynomial")
        if f.ring.ngens != inst.r or f.ring.domain.mod != B.p:
            raise ValueError(f"{scheme} polynomial must lie in GF({B.p})[x1..x{inst.r}]")
        if scheme == PHI5:
            if not 1 <= inst.arity <= inst.r:
                raise ValueError(f"arity must be in [1, {inst.r}], received: {inst.arity}")
            used = [i for i in range(inst.r) if f.degree(i) > 0]
            if used and max(used) >= inst.arity:
                raise ValueError(
                    f"{scheme} polynomial uses x{max(used) + 1} beyond arity {inst.arity}"
                )
    elif scheme == PHI6:
        if inst.word is None:
            raise ValueError(f"{scheme} needs a Lie word")
        if variables(inst.word):
            raise ValueError(f"{scheme} word must be written over constants only")
        if not 1 <= inst.arity <= inst.r:
            raise ValueError(f"arity must be in [1, {inst.r}], received: {inst.arity}")
        if max(constants(inst.word), default=0) > inst.arity:
            raise ValueError(f"{scheme} word uses constants beyond arity {inst.arity}")
    elif scheme in (PHI7, PHI7_PRIME):
        S = inst.system
        if S is None:
            raise ValueError(f"{scheme} needs a module system")
        n = inst.arity if scheme == PHI7 else inst.r
        expected = algebra_context(B.p, n).fitting
        if not S.module.same_submodule(expected):
            raise ValueError(f"{scheme} system must be over Fit(F_{n})")


def _identity_samples(B: ExtensionAlgebra, seed: int) -> bool:
    rng = np.random.default_rng(seed)
    for _ in range(IDENTITY_SAMPLES):
        x1, x2, x3, x4 = (random_element(B, rng) for _ in range(4))
        if not (B.bracket(x1, x2) + B.bracket(x2, x1)).is_zero:
            return False
        jacobi = (
            B.bracket(B.bracket(x1, x2), x3)
            + B.bracket(B.bracket(x2, x3), x1)
            + B.bracket(B.bracket(x3, x1), x2)
        )
        if not jacobi.is_zero:
            return False
        if not B.bracket(B.bracket(x1, x2), B.bracket(x3, x4)).is_zero:
            return False
    return True


def _probes(B: ExtensionAlgebra) -> List[ExtElement]:
    probes = B.fitting_probes()
    witness = torsion_witness(B.module)
    if witness is not None:
        probes.append(B.element(None, witness[0]))
    return probes


def _nilpotent_pair_free(B: ExtensionAlgebra) -> bool:
    # xy != 0 implies xyx != 0 or xyy != 0
    if B.is_u_algebra:
        return True
    probes = _probes(B)
    for x, y in itertools.product(probes, repeat=2):
        xy = B.bracket(x, y)
        if xy and not B.bracket(xy, x) and not B.bracket(xy, y):
            log.debug("phi2 fails at %s, %s", x.format(), y.format())
            return False
    return True


def _commutative_transitive(B: ExtensionAlgebra) -> bool:
    if B.is_u_algebra:
        return True
    probes = _probes(B)
    for x in probes:
        if not x:
            continue
        centralizer = [y for y in probes if not B.bracket(x, y)]
        for y, z in itertools.combinations(centralizer, 2):
            if B.bracket(y, z):
                log.debug("phi3 fails at %s", x.format())
                return False
    return True


def _torsion_free_by(inst: AxiomInstance, B: ExtensionAlgebra, cap: int) -> bool:
    if B.is_u_algebra:
        return True
    N = B.fitting
    f = inst.polynomial
    if inst.scheme == PHI5_PRIME:
        return is_annihilator_free(N, B.ring.coerce(f))
    padding = [B.ring.zero] * (inst.r - inst.arity)
    for rows in independent_tuples(B.p, inst.arity, B.rank, cap):
        forms = [B.ring.linear_form(row) for row in rows]
        g = substitute(f, forms + padding, B.ring)
        if not is_annihilator_free(N, g):
            return False
    return True


def _word_nonzero(inst: AxiomInstance, B: ExtensionAlgebra, cap: int) -> bool:
    word = constants_to_variables(inst.word)
    for rows in independent_tuples(B.p, inst.arity, B.rank, cap):
        point = linear_elements(B, rows)[: max(variables(word), default=0)]
        if evaluate(word, point, B).is_zero:
            return False
    return True


def transport(S: ModuleSystem, rows, B: ExtensionAlgebra) -> ModuleSystem:
    """
    Instantiate a module system over Fit(F_n) at the linear elements given by
    rows: coefficients f(λ(x1)..λ(xn)) and right-hand sides c(x1..xn), placed
    in fitting_of(B).
    """
    n = len(rows)
    source = algebra_context(B.p, n)
    point = linear_elements(B, rows)
    forms = [B.ring.linear_form(row) for row in rows]
    coefficients = [
        [substitute(f, forms, B.ring) for f in row] for row in S.coefficients
    ]
    rhs = []
    for c in S.rhs:
        word = constants_to_variables(element_expression(LieElement(source, None, c)))
        used = max(variables(word), default=0)
        value = evaluate(word, point[:used], B) if used else B.zero()
        rhs.append(B.fitting_vector(value))
    return ModuleSystem.build(B.fitting, S.n_unknown, coefficients, rhs)


def _system_inconsistent(inst: AxiomInstance, B: ExtensionAlgebra, cap: int) -> bool:
    if inst.scheme == PHI7_PRIME:
        if B.rank != inst.r:
            raise ConfigurationError(
                f"{inst.scheme} is stated in F_{inst.r}-algebras, received rank {B.rank}"
            )
        return isinstance(over_fitting(inst.system, B).solve(), NoSolution)
    for rows in independent_tuples(B.p, inst.arity, B.rank, cap):
        if not isinstance(transport(inst.system, rows, B).solve(), NoSolution):
            return False
    return True


def check_instance(
    inst: AxiomInstance, B: ExtensionAlgebra, seed: int = 0, cap: int = ENUMERATION_CAP
) -> bool:
    """
    Whether B satisfies the axiom instance.

    Parameters
    ----------
    inst: AxiomInstance
    B: ExtensionAlgebra
    seed: int, default 0
        Seed of the random elements used for phi1.
    cap: int
        Maximum number of candidate tuples enumerated for the schemes that
        quantify over independent tuples.

    Returns
    -------
    bool

    Raises
    ------
    ValueError
        If the instance is malformed.
    ConfigurationError
        If a scheme stated in F_r-algebras is evaluated on a rank other
        than r.
    """
    _validate(inst, B)
    scheme = inst.scheme
    if scheme == PHI1:
        return _identity_samples(B, seed)
    elif scheme == PHI2:
        return _nilpotent_pair_free(B)
    elif scheme == PHI3:
        return _commutative_transitive(B)
    elif scheme == PHI4:
        return B.rank <= inst.r
    elif scheme in (PHI5, PHI5_PRIME):
        if scheme == PHI5_PRIME and B.rank != inst.r:
            raise ConfigurationError(
                f"{scheme} is stated in F_{inst.r}-algebras, received rank {B.rank}"
            )
        return _torsion_free_by(inst, B, cap)
    elif scheme == PHI6:
        return _word_nonzero(inst, B, cap)
    else:
        return _system_inconsistent(inst, B, cap)
