from typing import Any, NamedTuple, Optional

from metabelian.constants import Polynomial
from metabelian.equations.system import ModuleSystem
from metabelian.lie.expression import Node, format_expression
from metabelian.modcore.polynomial import format_polynomial

PHI1 = "phi1"
PHI2 = "phi2"
PHI3 = "phi3"
PHI4 = "phi4"
PHI5 = "phi5"
PHI5_PRIME = "phi5p"
PHI6 = "phi6"
PHI7 = "phi7"
PHI7_PRIME = "phi7p"
SCHEMES = (PHI1, PHI2, PHI3, PHI4, PHI5, PHI5_PRIME, PHI6, PHI7, PHI7_PRIME)

# Status of a phi7 instance: the system is certified inconsistent over the
# localized Fitting module, or no consistency witness was found up to the
# search bound.
CERTIFIED = "inconsistent"
UNKNOWN = "unknown"


class AxiomInstance(NamedTuple):
    """
    One axiom of a scheme.

    scheme: one of SCHEMES.
    r: rank of the language.
    arity: n for phi5, phi6 and phi7.
    polynomial: f for phi5 and phi5p, over k[x1..xr].
    word: Lie word over a1..a_arity for phi6.
    system: module system for phi7 (over Fit(F_arity)) and phi7p (over Fit(F_r)).
    status: CERTIFIED or UNKNOWN for phi7.
    """

    scheme: str
    r: int
    arity: int = 0
    polynomial: Optional[Polynomial] = None
    word: Optional[Node] = None
    system: Optional[ModuleSystem] = None
    status: Optional[str] = None

    def parameters(self) -> dict:
        """Parameters as plain text, for reports."""
        result = {"r": self.r}
        if self.scheme in (PHI5, PHI6, PHI7):
            result["arity"] = self.arity
        if self.polynomial is not None:
            result["f"] = format_polynomial(self.polynomial)
        if self.word is not None:
            result["word"] = format_expression(self.word)
        if self.system is not None:
            result["system"] = list(self.system.equations())
        if self.status is not None:
            result["status"] = self.status
        return result

    def format(self) -> str:
        parameters = self.parameters()
        parameters.pop("r")
        text = ", ".join(f"{key}={value}" for key, value in parameters.items())
        return f"{self.scheme}({text})" if text else self.scheme


class Member(NamedTuple):
    """Membership verdict; certificate is the embedding into F_{n,s}."""

    language: str
    r: int
    certificate: Any


class NonMember(NamedTuple):
    """Non-membership verdict with the violated instance and its witness."""

    language: str
    r: int
    instance: AxiomInstance
    witness: Any
    reason: str
