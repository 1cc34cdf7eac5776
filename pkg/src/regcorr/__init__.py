"""Certified bounds for neglected discretization corrections in regularized
single and double layer potentials on closed surfaces."""

__version__ = "0.1.0"

from .special import E, E_minus, erfc, erfcx
from .partition import (
    DegeneratePartitionError,
    ParameterError,
    QuadParams,
    UnitNormal,
    beta,
    max_beta_derivative,
    zeta,
)
from .lattice import (
    LatticeIndex,
    TailBoundValue,
    crude_term_double,
    crude_term_single,
    double_layer_leading,
    enumerate_Q,
    single_layer_sum,
    tail_double,
    tail_onsurface_extra,
    tail_single,
)
from .certify import (
    BoundReport,
    ErrorBudget,
    Kind,
    NoQualifyingParameters,
    advise,
    budget,
    certify_double_layer,
    certify_single_layer,
    certify_single_onsurface,
)
