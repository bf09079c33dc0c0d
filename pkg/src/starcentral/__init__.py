"""Exact computation with *-polynomials and the superalgebra ``M_{1,1}(E)``."""
from .catalog import (make_C, make_D, make_G, make_H, make_P, make_central,
                      make_T)
from .checker import CheckConfig, CheckReport, is_central, is_identity
from .grammar import ParseError, format_poly, parse_poly
from .grassmann import GrassmannElement, e
from .m11 import M11Element, skew_element, symmetric_element
from .membership import (GeneratorSet, MembershipCertificate, consequences,
                         identity_generators, is_member, verify_V_lemma)
from .polyalg import (Indeterminate, MultiDegree, StarPolynomial, commutator,
                      jordan, multidegree, star, sym_skew_split, y, z)
from .scalars import Fp, RingConfig
from .structure import (PBWDecomposition, leading_proper_part, pbw_decompose,
                        proper_spanning_set, rank)

__version__ = "0.1.0"

__all__ = [
    "CheckConfig", "CheckReport", "Fp", "GeneratorSet", "GrassmannElement",
    "Indeterminate", "M11Element", "MembershipCertificate", "MultiDegree",
    "PBWDecomposition", "ParseError", "RingConfig", "StarPolynomial",
    "commutator", "consequences", "e", "format_poly", "identity_generators",
    "is_central", "is_identity", "is_member", "jordan", "leading_proper_part",
    "make_C", "make_D", "make_G", "make_H", "make_P", "make_central",
    "make_T", "multidegree", "parse_poly", "pbw_decompose",
    "proper_spanning_set", "rank", "skew_element", "star", "sym_skew_split",
    "symmetric_element", "verify_V_lemma", "y", "z",
]
