"""Exact computation in multiplicative valued difference fields.

Value groups Z[rho, 1/rho]-fractions under a chosen order type of rho,
finite twisted Hahn series, sigma-polynomials, sigma-Hensel lifting and
leading-term (RV) arithmetic.
"""
from . import kernels
from .errors import *  # noqa: F401,F403
from .hahn import HahnField, HahnSeries
from .hensel import (
    HenselConfig, LiftReport, LiftStatus, PCReport, dominant_index, eventual_order,
    hensel_config, hensel_lift, hensel_step, is_pseudo_limit, pc_check,
)
from .leading_terms import (
    RV_INF, RVElem, WitnessStatus, axiom4_witness, cross_section, rv, rv_decode,
    rv_encode, rv_inv, rv_mul, rv_sigma, rv_sum,
)
from .parsing import (
    format_carrier, format_gamma, format_linop, format_rho, format_rv, format_series,
    format_sigmapoly, parse_carrier, parse_gamma, parse_linop, parse_rho, parse_rv,
    parse_series, parse_sigmapoly,
)
from .residue import RatFunc, RationalFunctionShift, RationalIdentity, ResiduePoly, residue_field
from .rho_order import (
    ISOMETRIC, AlgebraicMinusEps, AlgebraicPlusEps, AlgebraicReal, Infinite, LinOp,
    Ordering, Rational, Sign, compare, reduce, sign,
)
from .sigma_poly import SigmaPoly, is_generic_for, make_generic, residue_poly_for
from .value_group import INF, GammaElem, ValueGroup, divide, frac, scalar_mul

__version__ = "0.1.0"
