"""Value sets of linear permutations modified at a few points.

Finite-field arithmetic (:mod:`valuesets.gf`), Carlitz chains
(:mod:`valuesets.carlitz`), the class F_{q,n} with value profiles and
spectra (:mod:`valuesets.family`), and explicit families with brute-force
verification (:mod:`valuesets.constructions`).
"""

from .carlitz import (
    CarlitzChain,
    LinearMap,
    PoleSet,
    decompose,
    eval_chain,
    linear_part,
    poles,
    recursion_table,
    validate_chain,
)
from .family import (
    build_instance,
    enumerate_spectrum,
    is_complete_mapping,
    is_permutation,
    sum_of_values,
    value_profile,
)
from .gf import FieldCtx, FieldElement, field_new

__version__ = "0.1.0"
