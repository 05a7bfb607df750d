"""Counting identity-product, K-product, aperiodic and homogeneous necklaces
over finite groups, with brute-force cross-checks and the finite-field
correspondence to irreducible polynomials."""

from .errors import (BudgetExceeded, ConjugationClosureError, GroupSpecError,
                     IntegralityError, OracleMismatch)
from .formulas import (CountResult, count_K_aperiodic, count_K_necklaces, count_aperiodic,
                       count_homogeneous, count_identity_necklaces,
                       count_identity_necklaces_abelian, count_moreau, count_smallest_period)
from .groups import (ConjClosedSubset, FiniteGroup, build_group, conjugacy_classes,
                     make_subset, parse_subset, torsion_count, torsion_count_K)

__version__ = '0.1.0'
