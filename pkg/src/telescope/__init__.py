"""Exact discovery and verification of recurrences and closed forms for
hypergeometric sums: Gosper normal forms, creative telescoping with
checkable certificates, terminating-series evaluation, and Watson-type
Gamma closed forms, all over exact rational arithmetic.
"""

from .bipoly import BiPoly, BiRatFunc, bipoly_gcd, bipoly_lcm, shift_common_roots
from .closedform import ClosedForm, eval_closed_form
from .combinat import EvalDomainError, binomial, catalan, factorial
from .corpus import (CorpusError, CorpusOptions, IdentityEntry, Report,
                     load_corpus, run_corpus)
from .gosper import (GosperCertificate, GosperForm, gosper_degree_bound,
                     gosper_normal_form, gosper_sum, solve_key_equation)
from .hyperterm import (HyperTerm, Support, eval_term, parse_summand,
                        shift_quotient, sum_exact)
from .lexer import ParseError
from .linalg import nullspace, solve_linear
from .poly import Poly, interpolate, poly_gcd, poly_lcm
from .ratfunc import RatFunc
from .watson import (GammaPoleError, GammaValue, HalfInt, PFQSpec, SeriesError,
                     chu_w01, closed_form_F, closed_form_G, gamma_half,
                     pfq_terminating, second_identity_3f2, second_identity_spec,
                     watson_w00, watson_w00_series)
from .zeilberger import (Recurrence, WZCertificate, ZeilbergerError,
                         check_recurrence_numeric, verify_certificate,
                         zeilberger)

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "BiRatFunc", "ClosedForm", "CorpusError", "CorpusOptions",
    "EvalDomainError", "GammaPoleError", "GammaValue", "GosperCertificate",
    "GosperForm", "HalfInt", "HyperTerm", "IdentityEntry", "PFQSpec",
    "ParseError", "Poly", "RatFunc", "Recurrence", "Report", "SeriesError",
    "Support", "WZCertificate", "ZeilbergerError", "binomial", "bipoly_gcd",
    "bipoly_lcm", "catalan", "check_recurrence_numeric", "chu_w01",
    "closed_form_F", "closed_form_G", "eval_closed_form", "eval_term",
    "factorial", "gamma_half", "gosper_degree_bound", "gosper_normal_form",
    "gosper_sum", "interpolate", "load_corpus", "nullspace", "parse_summand",
    "pfq_terminating", "poly_gcd", "poly_lcm", "run_corpus",
    "second_identity_3f2", "second_identity_spec", "shift_common_roots",
    "shift_quotient", "solve_key_equation", "solve_linear", "sum_exact",
    "verify_certificate", "watson_w00", "watson_w00_series", "zeilberger",
]
