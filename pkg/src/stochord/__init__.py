"""Stochastic orderings of order statistics under shape assumptions.

The package decides increasing concave (icv), increasing convex (icx), and
star-shaped (ss) comparisons between order statistics X_{i:n} and X_{j:m}
whose common parent is known only through a nonparametric shape class, and
turns the same machinery into distribution-free bounds for where an
order-statistic mean sits inside the parent distribution.

Layering, bottom up:

    specfun     digamma, log-beta, regularised incomplete beta, harmonic sums
    refdist     the six reference distributions and the beta spec (i, n)
    orderstat   transformed order statistics and their partial means
    conditions  closed-form icv/icx checks per shape class
    ssverify    the star-shaped criterion, root solver, and region maps
    bounds      exceedance bounds and the empirical plug-in interval
    oracle      scipy-only quadrature probes, deliberately independent
    cli         the `stochord` command
"""

from .bounds import (
    BoundInterval,
    ExceedanceBound,
    PlugInInterval,
    bound_table,
    bound_table_csv,
    ecdf_plugin_interval,
    exceedance_bound,
    exceedance_interval,
    ll1_characterization_check,
    p_value,
)
from .conditions import (
    BoundaryCaseError,
    OrderVerdict,
    ShapeClass,
    TransformKind,
    UnsupportedClassError,
    VerdictStatus,
    check_icv,
    check_icx,
    check_mean_dominated_by_orderstat,
    check_mean_dominates_orderstat,
)
from .orderstat import TransformedOrderStat, beta_orderstat_cdf, upper_partial_mean
from .oracle import (
    MCRecord,
    OrderProbe,
    mc_expectation,
    probe_icv,
    probe_icx,
    probe_ss,
    probe_st,
)
from .refdist import (
    OrderStatSpec,
    ReferenceDistribution,
    SupportClampWarning,
    cdf,
    expected_transformed_orderstat,
    quantile,
)
from .ssverify import (
    CellClass,
    RegionMap,
    RootSet,
    beta_kernel_roots,
    check_ss_dda,
    check_ss_dhra,
    region_map_dda,
    region_map_dhra,
    ss_margin_dda,
    ss_margin_dhra,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # refdist
    "ReferenceDistribution",
    "OrderStatSpec",
    "SupportClampWarning",
    "cdf",
    "quantile",
    "expected_transformed_orderstat",
    # orderstat
    "TransformedOrderStat",
    "beta_orderstat_cdf",
    "upper_partial_mean",
    # conditions
    "ShapeClass",
    "TransformKind",
    "VerdictStatus",
    "OrderVerdict",
    "UnsupportedClassError",
    "BoundaryCaseError",
    "check_icv",
    "check_icx",
    "check_mean_dominated_by_orderstat",
    "check_mean_dominates_orderstat",
    # ssverify
    "RootSet",
    "CellClass",
    "RegionMap",
    "beta_kernel_roots",
    "ss_margin_dda",
    "ss_margin_dhra",
    "check_ss_dda",
    "check_ss_dhra",
    "region_map_dda",
    "region_map_dhra",
    # bounds
    "ExceedanceBound",
    "BoundInterval",
    "PlugInInterval",
    "p_value",
    "exceedance_bound",
    "exceedance_interval",
    "bound_table",
    "bound_table_csv",
    "ll1_characterization_check",
    "ecdf_plugin_interval",
    # oracle
    "OrderProbe",
    "MCRecord",
    "probe_st",
    "probe_ss",
    "probe_icv",
    "probe_icx",
    "mc_expectation",
]
