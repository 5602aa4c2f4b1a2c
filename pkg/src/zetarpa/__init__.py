"""Exact remainder Pade approximants for the Hurwitz zeta function.

Public surface: exact scalars (Bernoulli numbers, LCM table), polynomials
over Q and the field Q(s), a generic exact Pade engine, the zeta remainder
kernel and its approximants, the closed-form s = 2 and s = 3 machinery
with integrality scalings and error bounds, quadrature verification of the
integral representations, and a high-precision reference oracle.
"""

from .errors import (
    DegenerateTable,
    InsufficientCoefficients,
    IntegralityViolation,
    InvalidM,
    PoleAtOne,
    SlowConvergence,
    ZeroDenominator,
    ZeroDeterminant,
    ZetaRpaError,
)
from .exact import bernoulli, format_rational, lcm_upto, parse_rational, pochhammer_scalar
from .oracle import OracleConfig, constants, zeta_ref
from .pade import (
    MomentFunctional,
    PadeApprox,
    associated_poly,
    orth_poly_determinant,
    pade,
    pade_shifted,
    same_ratfunc,
    verify_contact,
)
from .poly import Poly, binom_poly
from .psi import (
    ConvergenceRow,
    RpaResult,
    convergence_table,
    psi2_coeff,
    psi2_split_check,
    psi_coeff,
    psi_series,
    rpa_numeric,
    rpa_symbolic,
    stieltjes_moment,
)
from .ratfunc import RatFunc, pochhammer
from .s2 import (
    ApproxPairS2,
    RateReportS2,
    error_bound_s2,
    integrality_s2,
    linear_form_s2,
    modified_moment_s2,
    p_m_s2,
    r_m_s2,
    rate_s2,
    zeta2_approx,
)
from .s3 import (
    ApproxPairS3,
    RateReportS3,
    apery_crosscheck,
    apery_numbers,
    error_bound_s3,
    integrality_s3,
    linear_form_s3,
    moment_s3,
    pi_m_s3,
    rate_s3,
    theta_m_s3,
    zeta3_approx,
)
from .weights import (
    QuadratureConfig,
    bernoulli_moment_check,
    hermite_zeta,
    imaginary_axis_orthogonality,
    is_identity_check,
    theorem1_check,
    w_closed,
    w_nested,
    w_series,
    zeta_integral_identity,
)

__version__ = "0.1.0"
