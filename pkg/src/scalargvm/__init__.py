"""Gelfand-Kirillov dimensions of highest weight modules over classical Lie
algebras, and reducibility of scalar generalized Verma modules of minimal
parabolic type."""

from .errors import DomainError, IntegralityError
from .exactnum import (
    Partition,
    Rational,
    dual_partition,
    even_odd_counts,
    format_rational,
    parse_rational,
)
from .gkdim import (
    ClassDecomposition,
    decompose,
    gkdim_general,
    gkdim_integral,
    minus_extend,
    tilde,
)
from .reducibility import (
    ReducibilityReport,
    ScanResult,
    TableRow,
    first_reducible_point,
    is_reducible,
    paper_claim,
    proposition_table,
    scan,
)
from .rootdata import (
    LieType,
    dim_u_min,
    eta,
    fundamental_weight,
    positive_root_count,
    rho,
    scalar_weight_plus_rho,
)
from .tableau import Tableau, f_value, greene_shape, rs_insert, rs_shape

__version__ = "0.1.0"
