"""
Membership of B = F_n ⊕ M in the universal closure of F_r.

In the language L, B is a member iff n <= r and M is torsion-free; the
certificate is an embedding of B into F_{n,s} with s = rank(M). In the
language with constants for F_r the rank must be exactly r.
"""

import logging
from typing import Iterable, Optional, Union

import pandas as pd

from metabelian.axioms.instance import (
    PHI4,
    PHI5,
    PHI5_PRIME,
    AxiomInstance,
    Member,
    NonMember,
)
from metabelian.constants import LANGUAGE_L, LANGUAGE_LFR, LANGUAGES
from metabelian.lie.element import phi_eval
from metabelian.lie.extension import ExtensionAlgebra, embed_extension
from metabelian.modcore.polynomial import PolynomialRing, format_polynomial, substitute
from metabelian.modcore.presentation import torsion_witness

log = logging.getLogger(__name__)


def _rank_violation(B: ExtensionAlgebra, language: str, r: int) -> Optional[NonMember]:
    if B.rank > r:
        witness = tuple(B.constant(i) for i in range(1, r + 2))
        if not phi_eval(witness):
            raise RuntimeError("designated constants are dependent modulo Fit")
        return NonMember(
            language,
            r,
            AxiomInstance(PHI4, r),
            witness,
            f"{r + 1} elements independent modulo the Fitting radical",
        )
    if language == LANGUAGE_LFR and B.rank < r:
        return NonMember(
            language,
            r,
            AxiomInstance(PHI4, r),
            None,
            f"not an F_{r}-algebra: rank {B.rank} is below {r}",
        )
    return None


def _torsion_violation(B: ExtensionAlgebra, language: str, r: int) -> Optional[NonMember]:
    witness = torsion_witness(B.module)
    if witness is None:
        return None
    m, f = witness
    if B.module.contains(m) or not B.module.contains(m.scale(f)):
        raise RuntimeError("torsion witness failed verification")
    if language == LANGUAGE_LFR:
        instance = AxiomInstance(PHI5_PRIME, r, polynomial=f)
    else:
        target = PolynomialRing(B.p, r)
        images = list(target.gens[: B.rank])
        lifted = substitute(f, images, target)
        instance = AxiomInstance(PHI5, r, arity=B.rank, polynomial=lifted)
    return NonMember(
        language,
        r,
        instance,
        (m, f),
        f"module element [{m.format()}] is annihilated by {format_polynomial(f)}",
    )


def classify_ucl(
    B: ExtensionAlgebra, language: str = LANGUAGE_L, r: Optional[int] = None
) -> Union[Member, NonMember]:
    """
    Decide whether B lies in the universal closure of F_r.

    Parameters
    ----------
    B: ExtensionAlgebra
    language: str, default "L"
        "L" for the plain language, "LFr" for the language with constants
        a1..ar.
    r: int, optional
        Rank of F_r. Defaults to the rank of B.

    Returns
    -------
    Member or NonMember
        A Member carries the embedding into F_{n,s}; a NonMember carries the
        violated axiom instance and a witness: the independent tuple for
        phi4 or the pair (m, f) with m·f = 0 for phi5 and phi5p.
    """
    if not isinstance(B, ExtensionAlgebra):
        raise TypeError(f"Expected ExtensionAlgebra, received: {type(B).__name__}")
    if language not in LANGUAGES:
        raise ValueError(f"language must be one of {LANGUAGES}, received: {language}")
    if r is None:
        r = B.rank
    if r < 1:
        raise ValueError(f"r must be >= 1, received: {r}")

    verdict = _rank_violation(B, language, r) or _torsion_violation(B, language, r)
    if verdict is not None:
        log.info("not a member: %s", verdict.reason)
        return verdict
    certificate = embed_extension(B)
    log.info("member, embeds into F_%d,%d", B.rank, certificate.s)
    return Member(language, r, certificate)


def classification_table(
    algebras: Iterable[ExtensionAlgebra],
    language: str = LANGUAGE_L,
    r: Optional[int] = None,
) -> pd.DataFrame:
    """One row per algebra: its shape and the classification verdict."""
    records = []
    for B in algebras:
        verdict = classify_ucl(B, language, r)
        member = isinstance(verdict, Member)
        records.append(
            {
                "n": B.rank,
                "generators": B.module.n,
                "relations": len(B.module.relations),
                "rank": B.module.rank,
                "member": member,
                "scheme": None if member else verdict.instance.scheme,
                "s": verdict.certificate.s if member else None,
            }
        )
    return pd.DataFrame.from_records(
        records,
        columns=["n", "generators", "relations", "rank", "member", "scheme", "s"],
    )
