"""Independent numerical probes for the stochastic-order claims.

Everything in this module rechecks an ordering from its defining integral
characterisation, using scipy primitives only (betainc/betaincinv for the
beta layer, adaptive quadrature for partial means).  None of the closed
forms, continued fractions, or series from the rest of the package are
imported, so an agreement between a checker verdict and a probe is evidence,
not circularity.

Characterisations probed, for W_a = G^{-1}(B_{i:n}) and W_b = G^{-1}(B_{j:m})
with a common reference G:

    st:   F_a(t) <= F_b(t)                     for all t
    ss:   E[W_a 1{W_a > t}] >= E[W_b 1{W_b > t}]   for all t >= 0
    icv:  E[min(W_a, t)] >= E[min(W_b, t)]      for all t
    icx:  E[(W_a - t)+] <= E[(W_b - t)+]        for all t

Margins are oriented so that nonnegative means "consistent with the claim";
a margin below -tol is a refutation at quadrature accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special, stats

from .orderstat import TransformedOrderStat
from .refdist import OrderStatSpec, ReferenceDistribution

__all__ = [
    "OrderProbe",
    "MCRecord",
    "probe_st",
    "probe_ss",
    "probe_icv",
    "probe_icx",
    "mc_expectation",
]

_PROBE_TOL = 1e-9
_QUAD_KW = dict(epsabs=1e-11, epsrel=1e-11, limit=300)


# -- reference forms, duplicated here on purpose (see module docstring) -----

def _ref_cdf(dist: ReferenceDistribution, t: float) -> float:
    if dist is ReferenceDistribution.UNIFORM:
        return min(1.0, max(0.0, t))
    if dist is ReferenceDistribution.EXPONENTIAL:
        return 0.0 if t <= 0.0 else -math.expm1(-t)
    if dist is ReferenceDistribution.LOGISTIC:
        return float(stats.logistic.cdf(t))
    if dist is ReferenceDistribution.LOG_LOGISTIC_1:
        return 0.0 if t <= 0.0 else t / (1.0 + t)
    if dist is ReferenceDistribution.NEG_EXPONENTIAL:
        return 1.0 if t >= 0.0 else math.exp(t)
    if dist is ReferenceDistribution.NEG_LOG_LOGISTIC_1:
        return 1.0 if t >= 0.0 else 1.0 / (1.0 - t)
    raise ValueError(f"unknown reference {dist!r}")


def _ref_quantile(dist: ReferenceDistribution, p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if dist is ReferenceDistribution.UNIFORM:
        return p
    if dist is ReferenceDistribution.EXPONENTIAL:
        return -np.log1p(-p)
    if dist is ReferenceDistribution.LOGISTIC:
        return np.asarray(stats.logistic.ppf(p))
    if dist is ReferenceDistribution.LOG_LOGISTIC_1:
        with np.errstate(divide="ignore"):
            return p / (1.0 - p)
    if dist is ReferenceDistribution.NEG_EXPONENTIAL:
        return np.log(p)
    if dist is ReferenceDistribution.NEG_LOG_LOGISTIC_1:
        with np.errstate(divide="ignore"):
            return -(1.0 - p) / p
    raise ValueError(f"unknown reference {dist!r}")


def _upper_tail_is_infinite(dist: ReferenceDistribution, s: OrderStatSpec) -> bool:
    # E[W 1{W > t}] diverges only for the x/(1+x) reference at the sample max
    return dist is ReferenceDistribution.LOG_LOGISTIC_1 and s.i == s.n


def _lower_tail_is_infinite(dist: ReferenceDistribution, s: OrderStatSpec) -> bool:
    # E[W 1{W <= t}] diverges only for the -(1-p)/p reference at the minimum
    return dist is ReferenceDistribution.NEG_LOG_LOGISTIC_1 and s.i == 1


def _upper_partial(dist: ReferenceDistribution, s: OrderStatSpec, t: float) -> float:
    """E[W 1{W > t}] by quadrature in the beta variable."""
    if _upper_tail_is_infinite(dist, s):
        return math.inf
    p_t = _ref_cdf(dist, t)
    if p_t >= 1.0:
        return 0.0
    val, _ = integrate.quad(
        lambda u: float(_ref_quantile(dist, u)) * stats.beta.pdf(u, s.i, s.n - s.i + 1),
        p_t,
        1.0,
        **_QUAD_KW,
    )
    return val


def _lower_partial(dist: ReferenceDistribution, s: OrderStatSpec, t: float) -> float:
    """E[W 1{W <= t}] by quadrature in the beta variable."""
    if _lower_tail_is_infinite(dist, s):
        return -math.inf
    p_t = _ref_cdf(dist, t)
    if p_t <= 0.0:
        return 0.0
    val, _ = integrate.quad(
        lambda u: float(_ref_quantile(dist, u)) * stats.beta.pdf(u, s.i, s.n - s.i + 1),
        0.0,
        p_t,
        **_QUAD_KW,
    )
    return val


def _cdf_w(dist: ReferenceDistribution, s: OrderStatSpec, t: float) -> float:
    return float(special.betainc(s.i, s.n - s.i + 1, _ref_cdf(dist, t)))


def _margin(lhs: float, rhs: float) -> float:
    """lhs - rhs with the convention that two like infinities cancel."""
    if math.isinf(lhs) and math.isinf(rhs) and lhs == rhs:
        return 0.0
    return lhs - rhs


@dataclass(frozen=True, slots=True)
class OrderProbe:
    """Result of one grid probe: the worst margin tells the story."""

    order: str
    passed: bool
    worst_margin: float
    worst_point: float
    grid_size: int
    tol: float


def _probe_grid(
    w_a: TransformedOrderStat, w_b: TransformedOrderStat, grid_size: int
) -> np.ndarray:
    if w_a.dist is not w_b.dist:
        raise ValueError("probes compare order statistics under one common reference")
    ps = np.linspace(1e-4, 0.9999, grid_size)
    ts = []
    for w in (w_a, w_b):
        us = special.betaincinv(w.spec.i, w.spec.n - w.spec.i + 1, ps)
        ts.append(np.asarray(_ref_quantile(w.dist, us), dtype=float))
    pooled = np.unique(np.concatenate(ts))
    return pooled[np.isfinite(pooled)]


def _run_probe(order, w_a, w_b, grid_size, tol, margin_at) -> OrderProbe:
    ts = _probe_grid(w_a, w_b, grid_size)
    worst_margin = math.inf
    worst_point = math.nan
    for t in ts:
        m = margin_at(float(t))
        if m < worst_margin:
            worst_margin, worst_point = m, float(t)
    return OrderProbe(
        order=order,
        passed=worst_margin >= -tol,
        worst_margin=worst_margin,
        worst_point=worst_point,
        grid_size=grid_size,
        tol=tol,
    )


def probe_st(
    w_a: TransformedOrderStat,
    w_b: TransformedOrderStat,
    *,
    grid_size: int = 61,
    tol: float = _PROBE_TOL,
) -> OrderProbe:
    """Does W_a >= W_b in the usual stochastic order, on a quantile grid?"""
    return _run_probe(
        "st", w_a, w_b, grid_size, tol,
        lambda t: _cdf_w(w_b.dist, w_b.spec, t) - _cdf_w(w_a.dist, w_a.spec, t),
    )


def probe_ss(
    w_a: TransformedOrderStat,
    w_b: TransformedOrderStat,
    *,
    grid_size: int = 61,
    tol: float = _PROBE_TOL,
) -> OrderProbe:
    """Upper-partial-mean comparison on [0, inf); needs nonnegative support."""
    for w in (w_a, w_b):
        if w.dist.support[0] < 0.0:
            raise ValueError(
                "the upper-partial-mean characterisation needs nonnegative support, "
                f"got reference {w.dist.value!r}"
            )
    return _run_probe(
        "ss", w_a, w_b, grid_size, tol,
        lambda t: _margin(
            _upper_partial(w_a.dist, w_a.spec, t),
            _upper_partial(w_b.dist, w_b.spec, t),
        ),
    )


def probe_icv(
    w_a: TransformedOrderStat,
    w_b: TransformedOrderStat,
    *,
    grid_size: int = 61,
    tol: float = _PROBE_TOL,
) -> OrderProbe:
    """E[min(W, t)] comparison: W_a should dominate W_b."""

    def emin(w: TransformedOrderStat, t: float) -> float:
        lp = _lower_partial(w.dist, w.spec, t)
        if math.isinf(lp):
            return lp
        return lp + t * (1.0 - _cdf_w(w.dist, w.spec, t))

    return _run_probe(
        "icv", w_a, w_b, grid_size, tol,
        lambda t: _margin(emin(w_a, t), emin(w_b, t)),
    )


def probe_icx(
    w_a: TransformedOrderStat,
    w_b: TransformedOrderStat,
    *,
    grid_size: int = 61,
    tol: float = _PROBE_TOL,
) -> OrderProbe:
    """E[(W - t)+] comparison: W_b should dominate W_a."""

    def ewedge(w: TransformedOrderStat, t: float) -> float:
        up = _upper_partial(w.dist, w.spec, t)
        if math.isinf(up):
            return up
        return up - t * (1.0 - _cdf_w(w.dist, w.spec, t))

    return _run_probe(
        "icx", w_a, w_b, grid_size, tol,
        lambda t: _margin(ewedge(w_b, t), ewedge(w_a, t)),
    )


# -- Monte Carlo cross-check ------------------------------------------------

@dataclass(frozen=True, slots=True)
class MCRecord:
    """Sample mean of h(X_{i:n}) with its standard error."""

    spec: OrderStatSpec
    mean: float
    stderr: float
    n_samples: int
    heavy_tail: bool  # stderr is unreliable when a few draws dominate


def mc_expectation(
    parent_quantile,
    specs: list[OrderStatSpec],
    *,
    n_samples: int = 200_000,
    seed: int = 0,
) -> list[MCRecord]:
    """Monte Carlo means of X_{i:n} = Q(B_{i:n}) for several (i, n) at once.

    One uniform sample feeds every spec (common random numbers), so
    differences of the returned means carry far less noise than their
    individual standard errors suggest.  ``parent_quantile`` is a vectorised
    quantile function of the parent, e.g. a Weibull ppf.
    """
    child = np.random.SeedSequence(seed).spawn(1)[0]
    rng = np.random.default_rng(child)
    u = rng.random(n_samples)
    out = []
    for s in specs:
        x = np.asarray(
            parent_quantile(special.betaincinv(s.i, s.n - s.i + 1, u)), dtype=float
        )
        mean = float(np.mean(x))
        stderr = float(np.std(x, ddof=1) / math.sqrt(n_samples))
        centred = np.abs(x - mean)
        top = float(np.max(centred))
        total = float(np.sum(centred**2))
        heavy = total > 0.0 and top * top > 0.01 * total
        out.append(
            MCRecord(spec=s, mean=mean, stderr=stderr, n_samples=n_samples, heavy_tail=heavy)
        )
    return out
