"""Exact Chern-class, cohomology and Riemann-Roch computations on P^n.

The package checks, by direct computation, the numerical side of the
classification of globally generated vector bundles with first Chern
class 3 on projective space.
"""

from .bundles import (ChernCharacter, ChernData, character_to_chern, chern,
                      chern_character, dual_chern, quot_chern, rank, twist_chern,
                      wedge2_character)
from .chowring import MAX_DIM, ChowClass
from .classify import (catalog, enumerate_candidates, lookup, p1_splittings,
                       verify_catalog)
from .claims import verify_claims, verify_paper_claims
from .cohomology import CohomologyTable, bott, cohomology_table, serre_duality_check
from .constraints import gg_necessary, schwarzenberger_check, second_reduction
from .errors import *  # noqa: F401,F403
from .expr import parse
from .riemannroch import euler_char, hilbert_polynomial, todd

__version__ = "0.1.0"
