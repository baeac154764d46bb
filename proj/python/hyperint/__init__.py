"""Closed forms and a quadrature oracle for integrals of quotients of sinh/cosh powers."""

from ._hyperint import (
    HyperintError,
    alt_psi_sum,
    beta,
    catalan,
    classify,
    digamma,
    digamma_real,
    evaluate,
    f43_sum,
    gauss_2f1_minus1,
    gauss_sum,
    hurwitz_zeta,
    kummer_sum,
    ln_gamma,
    oracle,
    pfq,
    pochhammer,
    run_suite,
    trigamma,
    zed,
    zeta,
)

__all__ = [
    "HyperintError",
    "alt_psi_sum",
    "beta",
    "catalan",
    "classify",
    "digamma",
    "digamma_real",
    "evaluate",
    "f43_sum",
    "gauss_2f1_minus1",
    "gauss_sum",
    "hurwitz_zeta",
    "kummer_sum",
    "ln_gamma",
    "oracle",
    "pfq",
    "pochhammer",
    "run_suite",
    "trigamma",
    "zed",
    "zeta",
]

__version__ = "0.1.0"
