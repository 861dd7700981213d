from metabelian.axioms.check import check_instance, independent_tuples, transport
from metabelian.axioms.classify import classification_table, classify_ucl
from metabelian.axioms.delta import (
    ConsistentWitness,
    UnknownUpTo,
    delta_consistency_semidecide,
    over_fitting,
    residue_certificate,
    s_f_alpha,
    unitary_divisors,
)
from metabelian.axioms.enumerate import enumerate_axioms
from metabelian.axioms.instance import (
    CERTIFIED,
    SCHEMES,
    UNKNOWN,
    AxiomInstance,
    Member,
    NonMember,
)

__all__ = (
    "CERTIFIED",
    "SCHEMES",
    "UNKNOWN",
    "AxiomInstance",
    "ConsistentWitness",
    "Member",
    "NonMember",
    "UnknownUpTo",
    "check_instance",
    "classification_table",
    "classify_ucl",
    "delta_consistency_semidecide",
    "enumerate_axioms",
    "independent_tuples",
    "over_fitting",
    "residue_certificate",
    "s_f_alpha",
    "transport",
    "unitary_divisors",
)
