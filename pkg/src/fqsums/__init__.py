"""Prime sums over F_q[T]: exact values in F_q(T) and truncated u-adic checks."""

from fqsums.carlitz import (
    UnsupportedExponent,
    carlitz_D,
    closed_form,
    exact_all_prime_sum,
    exact_prime_sum,
    pibar_qm1_series,
)
from fqsums.field import FieldDesc, FieldError, field_of_order, fq_build
from fqsums.kernels import BACKEND
from fqsums.laurent import PrecisionError, USeries, expand
from fqsums.polyring import Poly, monic_irreducibles
from fqsums.primesum import (
    SumRequest,
    numeric_e_spec,
    numeric_prime_sum,
    numeric_zeta,
    psi_count,
    verify,
)
from fqsums.ratfun import ReconstructionError, RatFun, gp_ratfun, pade_reconstruct

__all__ = [
    "BACKEND", "FieldDesc", "FieldError", "Poly", "PrecisionError", "RatFun",
    "ReconstructionError", "SumRequest", "USeries", "UnsupportedExponent",
    "carlitz_D", "closed_form", "exact_all_prime_sum", "exact_prime_sum", "expand",
    "field_of_order", "fq_build", "gp_ratfun", "monic_irreducibles", "numeric_e_spec",
    "numeric_prime_sum", "numeric_zeta", "pade_reconstruct", "pibar_qm1_series",
    "psi_count", "verify",
]
