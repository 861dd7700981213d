"""
Direct module extensions F_n ⊕ M.

M is a finitely presented module over k[x1..xn] that joins the Fitting
radical: it is abelian, brackets trivially with Fit(F_n), and a linear part ℓ
acts on it by multiplication with λ(ℓ). F_{r,s} is the case M = T_s.
"""

import itertools
from typing import NamedTuple

from metabelian.constants import Polynomial
from metabelian.exceptions import ConfigurationError
from metabelian.lie.context import AlgebraContext
from metabelian.lie.element import LieElement, bracket
from metabelian.modcore.presentation import (
    Embedding,
    ModulePresentation,
    embed_into_free,
    is_torsion_free,
)
from metabelian.modcore.vector import FreeModuleVector, concatenate


class ExtensionAlgebra:
    """
    The Lie algebra F_n ⊕ M.

    Parameters
    ----------
    base: AlgebraContext
        F_n.
    module: ModulePresentation
        M, over the polynomial ring of the base.
    """

    def __init__(self, base: AlgebraContext, module: ModulePresentation):
        if not isinstance(base, AlgebraContext):
            raise TypeError(
                f"Expected AlgebraContext, received: {type(base).__name__}"
            )
        if not isinstance(module, ModulePresentation):
            raise TypeError(
                f"Expected ModulePresentation, received: {type(module).__name__}"
            )
        if module.ring != base.ring:
            raise ConfigurationError(
                f"module over {module.ring!r} cannot extend F_{base.r} over {base.ring!r}"
            )
        self.base = base
        self.module = module
        self._fitting = None
        self._is_u_algebra = None

    @classmethod
    def free(cls, base: AlgebraContext, s: int) -> "ExtensionAlgebra":
        """F_{r,s} = F_r ⊕ T_s."""
        return cls(base, ModulePresentation.free(base.ring, s))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtensionAlgebra):
            return NotImplemented
        return self is other or (
            self.base == other.base and self.module.same_submodule(other.module)
        )

    def __hash__(self) -> int:
        return hash((self.base, self.module.n))

    def __repr__(self) -> str:
        return f"ExtensionAlgebra(p={self.p}, n={self.rank}, module={self.module!r})"

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def ring(self):
        return self.base.ring

    @property
    def rank(self) -> int:
        return self.base.r

    @property
    def fitting(self) -> ModulePresentation:
        if self._fitting is None:
            self._fitting = fitting_of(self)
        return self._fitting

    @property
    def is_u_algebra(self) -> bool:
        """Whether the Fitting module is torsion-free; Fit(F_n) always is."""
        if self._is_u_algebra is None:
            self._is_u_algebra = is_torsion_free(self.module)
        return self._is_u_algebra

    def check(self, u) -> None:
        if not isinstance(u, ExtElement) or u.algebra != self:
            raise ConfigurationError(
                f"element does not belong to {self!r}: {type(u).__name__}"
            )

    def element(self, lie: LieElement = None, mod: FreeModuleVector = None) -> "ExtElement":
        return ExtElement(self, lie, mod)

    def zero(self) -> "ExtElement":
        return ExtElement(self)

    def constant(self, i: int) -> "ExtElement":
        return ExtElement(self, self.base.constant(i))

    def module_generator(self, c: int) -> "ExtElement":
        """The generator m_c of M, 0-based."""
        return ExtElement(self, None, self.module.generator(c))

    def generators(self) -> list:
        return [self.constant(i) for i in range(1, self.rank + 1)] + [
            self.module_generator(c) for c in range(self.module.n)
        ]

    def bracket(self, u: "ExtElement", v: "ExtElement") -> "ExtElement":
        return ext_bracket(u, v)

    def fitting_probes(self) -> list:
        probes = [ExtElement(self, u) for u in self.base.fitting_probes()]
        probes += [self.module_generator(c) for c in range(self.module.n)]
        return probes

    def fitting_vector(self, u: "ExtElement") -> FreeModuleVector:
        """Fitting part of u as a vector of the block presentation fitting_of(B)."""
        self.check(u)
        if not u.is_fitting:
            raise ValueError("element has a nonzero linear part")
        return concatenate([u.lie.fitting, u.mod])

    def from_fitting_vector(self, v: FreeModuleVector) -> "ExtElement":
        t = self.base.t
        if v.width != t + self.module.n:
            raise ConfigurationError(
                f"expected a vector of width {t + self.module.n}, received: {v.width}"
            )
        return ExtElement(
            self,
            LieElement(self.base, None, v.block(0, t)),
            v.block(t, v.width),
        )


class ExtElement:
    """
    Element (lie, mod) of F_n ⊕ M, with mod in normal form modulo M.
    """

    __slots__ = ("algebra", "lie", "mod")

    def __init__(
        self,
        algebra: ExtensionAlgebra,
        lie: LieElement = None,
        mod: FreeModuleVector = None,
    ):
        if lie is None:
            lie = algebra.base.zero()
        algebra.base.check(lie)
        if mod is None:
            mod = algebra.module.zero()
        elif mod.ring != algebra.ring:
            raise ConfigurationError("module part over a different polynomial ring")
        self.algebra = algebra
        self.lie = lie
        self.mod = algebra.module.reduce(mod)

    @classmethod
    def _new(cls, algebra, lie, mod) -> "ExtElement":
        u = cls.__new__(cls)
        u.algebra = algebra
        u.lie = lie
        u.mod = mod
        return u

    @property
    def linear(self):
        return self.lie.linear

    @property
    def is_fitting(self) -> bool:
        return self.lie.is_fitting

    @property
    def is_zero(self) -> bool:
        return self.lie.is_zero and self.mod.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def linear_form(self) -> Polynomial:
        return self.lie.linear_form()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.lie == other.lie
            and self.mod == other.mod
        )

    def __hash__(self) -> int:
        return hash((self.lie, self.mod))

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self.algebra.check(other)
        return ExtElement._new(self.algebra, self.lie + other.lie, self.mod + other.mod)

    def __neg__(self) -> "ExtElement":
        return ExtElement._new(self.algebra, -self.lie, -self.mod)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __mul__(self, scalar: int) -> "ExtElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return ExtElement._new(self.algebra, self.lie * scalar, self.mod.scale(scalar))

    __rmul__ = __mul__

    def act(self, poly: Polynomial) -> "ExtElement":
        """Module action on a Fitting element."""
        if not self.is_fitting:
            raise ValueError("the module action is only defined on Fitting elements")
        return ExtElement(self.algebra, self.lie.act(poly), self.mod.scale(poly))

    def format(self) -> str:
        return f"({self.lie.format()}; [{self.mod.format()}])"

    def __repr__(self) -> str:
        return f"ExtElement{self.format()}"


def ext_bracket(u: ExtElement, v: ExtElement) -> ExtElement:
    """
    [u, v] in F_n ⊕ M: the base bracket, plus ``u.mod·λ(v) - v.mod·λ(u)``.
    """
    for w in (u, v):
        if not isinstance(w, ExtElement):
            raise TypeError(f"Expected ExtElement, received: {type(w).__name__}")
    u.algebra.check(v)
    mod = u.mod.scale(v.lie.linear_form()) - v.mod.scale(u.lie.linear_form())
    return ExtElement(u.algebra, bracket(u.lie, v.lie), mod)


def fitting_of(B: ExtensionAlgebra) -> ModulePresentation:
    """Fit(F_n ⊕ M) as the block sum of the Fitting presentation and M."""
    return B.base.fitting.direct_sum(B.module)


class ExtensionEmbedding(NamedTuple):
    """Bracket-preserving injection of F_n ⊕ M into F_{n,s}."""

    source: ExtensionAlgebra
    target: ExtensionAlgebra
    embedding: Embedding

    @property
    def s(self) -> int:
        return self.embedding.rank

    def apply(self, u: ExtElement) -> ExtElement:
        self.source.check(u)
        return ExtElement(self.target, u.lie, self.embedding.apply(u.mod))


def embed_extension(B: ExtensionAlgebra) -> ExtensionEmbedding:
    """
    Embed F_n ⊕ M, M torsion-free, into F_{n,s} with s = rank(M).

    Raises TorsionInput if M has torsion. The images are checked to preserve
    the bracket on every pair of generators.
    """
    embedding = embed_into_free(B.module)
    target = ExtensionAlgebra.free(B.base, embedding.rank)
    result = ExtensionEmbedding(B, target, embedding)
    for u, v in itertools.combinations_with_replacement(B.generators(), 2):
        if result.apply(ext_bracket(u, v)) != ext_bracket(result.apply(u), result.apply(v)):
            raise RuntimeError("embedding does not preserve the bracket")
    return result
