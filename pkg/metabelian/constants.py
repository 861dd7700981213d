from typing import Dict, Tuple

import numpy as np
from sympy.polys.rings import PolyElement

IntDType = np.int64
IntArray = np.ndarray

# Sparse polynomial over GF(p): sympy's distributed representation, a dict of
# exponent tuple -> nonzero coefficient.
Polynomial = PolyElement
Monomial = Tuple[int, ...]
# Linear part of a Lie element: coefficients of a1..ar, reduced to [0, p).
LinearVector = Tuple[int, ...]
SparseEntries = Dict[int, PolyElement]

DEFAULT_BRANCH_CAP = 4096
DEFAULT_ORACLE_BOUND = 2
DEFAULT_DEGREE_BOUND = 2

# Hard caps. Enumeration exists only for oracles, so anything beyond these is
# a caller error rather than a long computation.
ENUMERATION_CAP = 2**20
DEGREE_CAP = 6

# Number of random probes used by the semantic axiom checks.
IDENTITY_SAMPLES = 64

LANGUAGE_L = "L"
LANGUAGE_LFR = "LFr"
LANGUAGES = (LANGUAGE_L, LANGUAGE_LFR)
