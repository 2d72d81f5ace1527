"""Exact MV- and EMV-algebras with square roots.

>>> from emvkit import parse_descriptor, sqrt_build
>>> M = parse_descriptor("dyadic")
>>> r = sqrt_build(M).root
>>> M.fmt(r(M.parse("3/4")))
'7/8'
"""

from .algebra import (Annihilator, Bool, Budget, Chain, Chang, EMVAlgebra, Enumeration, FinMap,
                      FinSubsets, GammaInterval, LocalInterval, Product, Sum, Trivial,
                      enumerate_elements, idempotents, mv_arrow, mv_lambda, mv_odot, mv_oplus,
                      mv_partial_add)
from .arith import (ALPHA, EQ, GT, LT, Carrier, Dyadics, Integers, Lex, LexZZ, PAdicRationals, Quad,
                    QuadRing, Rationals, g_add, g_cmp, g_half)
from .errors import *  # noqa: F401,F403
from .grammar import format_descriptor, parse_descriptor
from .laws import CATALOG, LawReport, run_catalog, run_suite
from .literals import parse_literal
from .represent import (Compl, Homomorphism, Inl, Represented, extend_sqrt, hom_image_sqrt,
                        preserves_sqrt, represent_top, restrict_sqrt)
from .sqrt import (AffineRoot, Classification, GeneralRoot, IdentityRoot, TableRoot, Verdict,
                   classify, decompose, divisible_check, is_strict, sqrt_build, sqrt_general_form,
                   sqrt_oracle, strongly_atomless_check, tribe_criteria_check, verify_root)

__version__ = "0.1.0"
