"""
Reports: deterministic JSON documents describing one command run.

Every value is converted to plain str, int, bool, list or dict before
serialization, and keys are sorted, so the same inputs and parameters give
byte-identical output.
"""

import hashlib
import json
from typing import Any, Dict, NamedTuple, Optional, Sequence

from metabelian.axioms.instance import AxiomInstance, Member, NonMember
from metabelian.equations.solver import SolutionSet, format_point
from metabelian.geometry.coordinate import CoordinateAlgebra
from metabelian.geometry.homs import HomPoint
from metabelian.lie.element import LieElement, format_element
from metabelian.lie.extension import ExtElement
from metabelian.modcore.polynomial import format_polynomial
from metabelian.modcore.presentation import ModulePresentation
from metabelian.modcore.vector import FreeModuleVector


class Report(NamedTuple):
    command: str
    input_digest: str
    parameters: Dict[str, Any]
    result: Dict[str, Any]
    timing: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        document = {
            "command": self.command,
            "input_digest": self.input_digest,
            "parameters": self.parameters,
            "result": self.result,
        }
        if self.timing is not None:
            document["timing"] = {"seconds": round(self.timing, 6)}
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)


def input_digest(inputs: Sequence[str]) -> str:
    """sha256 over the input texts, each terminated by a NUL byte."""
    h = hashlib.sha256()
    for text in inputs:
        h.update(text.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


def module_payload(M: ModulePresentation) -> Dict[str, Any]:
    return {
        "p": M.ring.p,
        "r": M.ring.r,
        "n": M.n,
        "relations": [
            [format_polynomial(q) for q in row.to_list()] for row in M.relations
        ],
    }


def element_payload(u) -> str:
    if isinstance(u, LieElement):
        return format_element(u)
    elif isinstance(u, ExtElement):
        return u.format()
    elif isinstance(u, FreeModuleVector):
        return u.format()
    raise TypeError(f"Expected an element, received: {type(u).__name__}")


def solution_payload(solution: SolutionSet) -> Dict[str, Any]:
    table = solution.branch_table()
    branches = [
        {
            "branch": int(row.branch),
            "assignment": str(row.assignment),
            "particular": str(row.particular),
            "n_homogeneous": int(row.n_homogeneous),
        }
        for row in table.itertuples(index=False)
    ]
    return {
        "verdict": solution.verdict,
        "n_branch": solution.n_branch,
        "branches": branches,
        "points": [format_point(point) for point in solution.points()],
    }


def instance_payload(instance: AxiomInstance) -> Dict[str, Any]:
    return {"scheme": instance.scheme, **instance.parameters()}


def _witness_payload(witness) -> Any:
    if witness is None:
        return None
    if isinstance(witness, tuple) and len(witness) == 2 and isinstance(
        witness[0], FreeModuleVector
    ):
        m, f = witness
        return {"m": m.format(), "f": format_polynomial(f)}
    return [element_payload(u) for u in witness]


def verdict_payload(verdict) -> Dict[str, Any]:
    if isinstance(verdict, Member):
        embedding = verdict.certificate.embedding
        return {
            "verdict": "Member",
            "language": verdict.language,
            "r": verdict.r,
            "s": verdict.certificate.s,
            "images": [v.format() for v in embedding.images],
        }
    elif isinstance(verdict, NonMember):
        return {
            "verdict": "NonMember",
            "language": verdict.language,
            "r": verdict.r,
            "instance": instance_payload(verdict.instance),
            "witness": _witness_payload(verdict.witness),
            "reason": verdict.reason,
        }
    raise TypeError(f"Expected Member or NonMember, received: {type(verdict).__name__}")


def coordinate_payload(gamma: CoordinateAlgebra) -> Dict[str, Any]:
    return {
        "module": module_payload(gamma.module),
        "dimension": gamma.dimension,
        "is_point": gamma.dimension == 0,
    }


def hom_payload(hom: HomPoint) -> str:
    return hom.format()
