"""Exact computation of polar groups of real forms of complex curves."""

from .scalars import Qi, conj, norm_sq, hilbert90, format_scalar
from .poly import Poly, Laurent, RatFunc, as_ratfunc, as_laurent, gcd_monic
from .splitform import SplitForm, UnsplitReport, UnsplittableError, split, split_fully, assemble
from .contexts import (RingContext, DomainError, Element, affine_line, prime_local,
                       circle_form, imaginary_circle_form, projective_line,
                       projective_conic, cusp_cubic, fixed_ring_generators)
from .polar import (PolarClass, PolarFactorization, OrbitRepresentative, class_of,
                    polar_factorize, delta_membership, delta_T_membership,
                    localization_map, localization_section, projective_include,
                    subalgebra_embed, reciprocal_sum_check, prime_reduction,
                    orbit_normalize)
from .exprparse import ExprError, parse, print_expr, parse_value, parse_scalar, parse_ring

__version__ = "1.0.0"
