from tests.fixtures.fixture_algebra import (
    cyclic_torsion,
    f2,
    f2_bare,
    f2_p3,
    f3,
    f3_bare_p3,
    free_module_1,
    ideal_module,
    ring_2_2,
    ring_2_3,
    ring_3_2,
    torsion_algebra,
    u_algebra,
)

__all__ = (
    "cyclic_torsion",
    "f2",
    "f2_bare",
    "f2_p3",
    "f3",
    "f3_bare_p3",
    "free_module_1",
    "ideal_module",
    "ring_2_2",
    "ring_2_3",
    "ring_3_2",
    "torsion_algebra",
    "u_algebra",
)
