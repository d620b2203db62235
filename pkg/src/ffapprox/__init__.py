"""Exact diophantine approximation over GF(q)(t).

Algebraic Laurent series in 1/t, their continued fractions and approximation
exponents, Riccati and Frobenius classification, Kodaira-Spencer matrices of
the associated Thue and superelliptic curves, and the exponent bounds those
feed into.
"""

from .errors import *  # noqa: F401,F403
from .field import GF
from .poly import Poly, RatFunc, RationalFunctionField, derive
from .linalg import RatMatrix, rank, nullspace, solve
from .algebra import QuotientAlgebra, AlgElem, power_sums, trace, inv_mod
from .laurent import (LaurentSeries, AlgebraicSeries, from_ratfunc, newton_lift,
                      laurent_roots, eval_series)
from .contfrac import (ContinuedFraction, Convergent, ExponentReport, cf_expand, convergents,
                       exponent_estimate, approximation_audit, wirsing_proximity)
from .riccati import (DerivativeExpansion, Classification, FrobeniusWitness, beta_prime,
                      riccati_test, frobenius_test, cross_ratio_identity_check,
                      quartic_char2_condition, classify)
from .ks import (CurveSpec, DifferentialBasis, KSMatrix, basis, ks_hyperelliptic,
                 ks_superelliptic, ks_thue, ks_thue_u2, ks_rank, search_max_rank)
from .bounds import (genus_thue, genus_superelliptic, osgood_bound, thue_bound, vojta_thue,
                     superelliptic_bound, vojta_superelliptic, wirsing_bound, wirsing_limit,
                     vojta_wirsing, height_multiplier, certificate)

__version__ = "0.1.0"
