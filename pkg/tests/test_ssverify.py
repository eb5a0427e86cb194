"""Root finding for the beta kernel, SS margin verification, region maps."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from stochord.refdist import OrderStatSpec
from stochord.ssverify import (
    CellClass,
    beta_kernel_roots,
    check_ss_dda,
    check_ss_dhra,
    region_map_dda,
    region_map_dhra,
    ss_margin_dda,
    ss_margin_dhra,
)

S = OrderStatSpec


# ---------------------------------------------------------------------------
# beta_kernel_roots
# ---------------------------------------------------------------------------


def test_roots_symmetric_two_root_case():
    rs = beta_kernel_roots(1.0, 1.0, 0.1875)
    assert rs.regime == "unimodal"
    assert len(rs.roots) == 2
    assert rs.roots[0] == pytest.approx(0.25, abs=1e-12)
    assert rs.roots[1] == pytest.approx(0.75, abs=1e-12)


def test_roots_tangency_collapses_to_one():
    rs = beta_kernel_roots(1.0, 1.0, 0.25)
    assert rs.roots == (0.5,)
    assert rs.stationary_point == pytest.approx(0.5)


def test_roots_no_crossing():
    rs = beta_kernel_roots(1.0, 1.0, 0.3)
    assert rs.roots == ()


def test_roots_monotone_regime():
    # T(x) = x (1-x)^{-1} is increasing from 0 to inf: one root always
    rs = beta_kernel_roots(1.0, -1.0, 3.0)
    assert rs.regime == "monotone"
    assert len(rs.roots) == 1
    x = rs.roots[0]
    assert x / (1.0 - x) == pytest.approx(3.0, rel=1e-12)


def test_roots_single_power():
    rs = beta_kernel_roots(2.0, 0.0, 0.5625)
    assert len(rs.roots) == 1
    assert rs.roots[0] == pytest.approx(0.75, abs=1e-12)


def test_roots_both_negative():
    # T(x) = 1/(x(1-x)) is U-shaped with minimum 4 at 1/2
    rs = beta_kernel_roots(-1.0, -1.0, 5.0)
    assert rs.regime == "unimodal"
    assert len(rs.roots) == 2
    lo, hi = rs.roots
    assert lo == pytest.approx(0.5 - math.sqrt(0.05), abs=1e-12)
    assert hi == pytest.approx(0.5 + math.sqrt(0.05), abs=1e-12)


def test_roots_validation():
    with pytest.raises(ValueError):
        beta_kernel_roots(0.0, 0.0, 0.5)
    with pytest.raises(ValueError):
        beta_kernel_roots(1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        beta_kernel_roots(1.0, 1.0, -2.0)
    with pytest.raises(ValueError):
        beta_kernel_roots(1.0, 1.0, math.inf)


@given(
    a=st.one_of(
        st.floats(min_value=0.25, max_value=4.0),
        st.floats(min_value=-4.0, max_value=-0.25),
    ),
    b=st.one_of(
        st.floats(min_value=0.25, max_value=4.0),
        st.floats(min_value=-4.0, max_value=-0.25),
    ),
    x0=st.floats(min_value=0.05, max_value=0.95),
)
@settings(max_examples=200)
def test_roots_roundtrip(a, b, x0):
    """Construct c so that x0 is a root, then recover it."""
    c = x0**a * (1.0 - x0) ** b
    if a * b > 0:
        # skip points too close to the stationary point, where the
        # crossing degenerates into a tangency and recovery is ill posed
        x_star = a / (a + b) if a > 0 else None
        if x_star is None:
            # both negative: stationary point of x^a(1-x)^b is still a/(a+b)
            x_star = a / (a + b)
        if abs(x0 - x_star) < 0.02:
            return
    rs = beta_kernel_roots(a, b, c)
    assert rs.roots, f"no roots returned for a={a} b={b} c={c}"
    assert min(abs(r - x0) for r in rs.roots) < 1e-9
    assert all(res <= 1e-10 for res in rs.log_residuals)
    limit = 2 if a * b > 0 else 1
    assert len(rs.roots) <= limit


def test_sign_constant_between_roots():
    """T(x) - c keeps one sign strictly between consecutive crossings."""
    cases = [
        (1.0, 1.0, 0.1875),
        (2.0, -1.0, 0.4),
        (-1.5, -2.5, 40.0),
        (3.0, 2.0, 0.01),
    ]
    for a, b, c in cases:
        rs = beta_kernel_roots(a, b, c)
        knots = [0.0] + list(rs.roots) + [1.0]
        for lo, hi in zip(knots[:-1], knots[1:]):
            xs = np.linspace(lo, hi, 1002)[1:-1]
            vals = a * np.log(xs) + b * np.log1p(-xs) - math.log(c)
            signs = set(np.sign(vals[np.abs(vals) > 1e-9]))
            assert len(signs) <= 1, (a, b, c, lo, hi)


# ---------------------------------------------------------------------------
# ss_margin_dda / check_ss_dda
# ---------------------------------------------------------------------------


def _z_scipy(a: S, b: S, x: float) -> float:
    def tail(s: S, t: float) -> float:
        return (s.i / (s.n + 1)) * (1.0 - special.betainc(s.i + 1, s.n - s.i + 1, t))

    return tail(a, x) - tail(b, x)


def test_ss_margin_dda_endpoints():
    a, b = S(2, 3), S(3, 5)
    assert ss_margin_dda(a, b, 0.0) == pytest.approx(2 / 4 - 3 / 6, abs=1e-15)
    assert ss_margin_dda(a, b, 1.0) == 0.0


def test_ss_margin_dda_matches_scipy_grid():
    pairs = [(S(2, 3), S(3, 5)), (S(1, 4), S(2, 6)), (S(5, 8), S(6, 11))]
    xs = np.linspace(0.0, 1.0, 211)
    for a, b in pairs:
        for x in xs:
            assert ss_margin_dda(a, b, float(x)) == pytest.approx(
                _z_scipy(a, b, float(x)), abs=1e-12
            )


def test_check_ss_dda_identical_specs_hold():
    v = check_ss_dda(S(3, 7), S(3, 7))
    assert v.holds
    assert v.lhs_witness == 0.0


def test_check_ss_dda_frozen_refutation():
    v = check_ss_dda(S(2, 3), S(3, 5))
    assert not v.holds
    assert -1e-2 < v.lhs_witness < -1e-3
    assert "inf Z" in v.condition_name


def test_check_ss_dda_holds_case():
    assert check_ss_dda(S(1, 3), S(1, 4)).holds


def test_candidate_min_matches_dense_grid():
    """The candidate set from the two kernel constants finds the infimum."""
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 60:
        n = int(rng.integers(1, 13))
        m = int(rng.integers(n, 13))
        i = int(rng.integers(1, n + 1))
        j = int(rng.integers(1, m + 1))
        a, b = S(i, n), S(j, m)
        if (i, n) == (j, m):
            continue
        verdict = check_ss_dda(a, b)
        xs = np.linspace(0.0, 1.0, 10_001)
        zs = np.array([ss_margin_dda(a, b, float(x)) for x in xs])
        assert verdict.lhs_witness <= zs.min() + 1e-9, (a, b)
        checked += 1


def test_z_derivative_sign_pattern_on_band_cell():
    """On a cell where the check fails, Z dips then recovers: Z' goes - + -."""
    a, b = S(3, 8), S(4, 11)
    v = check_ss_dda(a, b)
    assert not v.holds
    xs = np.linspace(1e-4, 1 - 1e-4, 4001)
    zs = np.array([ss_margin_dda(a, b, float(x)) for x in xs])
    dz = np.diff(zs)
    signs = np.sign(dz[np.abs(dz) > 1e-14])
    # compress consecutive duplicates
    runs = [signs[0]]
    for s_ in signs[1:]:
        if s_ != runs[-1]:
            runs.append(s_)
    assert runs == [-1.0, 1.0, -1.0]


# ---------------------------------------------------------------------------
# ss_margin_dhra / check_ss_dhra
# ---------------------------------------------------------------------------


def _z_dhra_quad(a: S, b: S, x: float) -> float:
    def tail(s: S, t: float) -> float:
        c = math.exp(special.betaln(s.i, s.n - s.i + 1))

        def f(w: float) -> float:
            u = -math.expm1(-w)
            # (1-u)^(n-i) from the beta density times e^-w from du/dw
            return w * u ** (s.i - 1) * (1.0 - u) ** (s.n - s.i + 1) / c

        val, _ = integrate.quad(f, t, 60.0, limit=300)
        return val

    return tail(a, x) - tail(b, x)


@pytest.mark.parametrize("pair", [(S(2, 3), S(3, 5)), (S(1, 2), S(2, 4))])
def test_dhra_series_matches_quadrature(pair):
    a, b = pair
    for x in (0.0, 0.3, 1.0, 2.5):
        series = ss_margin_dhra(a, b, x, method="series")
        quad = ss_margin_dhra(a, b, x, method="quad")
        assert series == pytest.approx(quad, abs=1e-9)
        assert quad == pytest.approx(_z_dhra_quad(a, b, x), abs=1e-8)


def test_dhra_auto_agrees_with_quad():
    a, b = S(3, 7), S(4, 9)
    for x in (0.1, 0.7, 2.0):
        assert ss_margin_dhra(a, b, x) == pytest.approx(
            ss_margin_dhra(a, b, x, method="quad"), abs=1e-10
        )


def test_check_ss_dhra_holds_where_dda_fails():
    """(2,3) vs (3,5) fails in the uniform frame but holds in the
    exponential one; the frames genuinely order different families."""
    assert not check_ss_dda(S(2, 3), S(3, 5)).holds
    assert check_ss_dhra(S(2, 3), S(3, 5)).holds


def test_check_ss_dhra_identical_specs_hold():
    assert check_ss_dhra(S(4, 6), S(4, 6)).holds


def test_check_ss_dhra_refutation():
    # reversed pair: higher mean on the right at x=0
    v = check_ss_dhra(S(3, 5), S(2, 3))
    assert not v.holds
    assert v.lhs_witness < -1e-6


# ---------------------------------------------------------------------------
# region maps
# ---------------------------------------------------------------------------


def test_region_map_requires_n_le_m():
    with pytest.raises(ValueError):
        region_map_dda(5, 4)


def test_region_map_dda_small_edge_cells():
    rm = region_map_dda(3, 5)
    # the line j = i + (m - n) sits in the no-comparability wedge
    for i in (1, 2, 3):
        assert rm.cells[(i, i + 2)] is CellClass.NO_COMPARABILITY


def test_region_map_dda_square_is_trivial():
    rm = region_map_dda(4, 4)
    for (i, j), cls in rm.cells.items():
        if i > j:
            assert cls is CellClass.HOLDS_SS_IJ
        elif i < j:
            assert cls is CellClass.HOLDS_SS_JI
        else:
            assert cls is CellClass.NEEDS_CHECK_PASS


def test_region_map_dda_first_order_rules():
    rm = region_map_dda(5, 8)
    for (i, j), cls in rm.cells.items():
        if i > j:
            assert cls is CellClass.HOLDS_SS_IJ
        if (5 - i) > (8 - j):
            assert cls is CellClass.HOLDS_SS_JI


def test_no_nocomparability_cell_actually_holds():
    rm = region_map_dda(5, 8)
    for (i, j), cls in rm.cells.items():
        if cls is CellClass.NO_COMPARABILITY:
            assert not check_ss_dda(S(i, 5), S(j, 8)).holds


def test_region_map_dhra_spot_cells():
    rm = region_map_dhra(3, 5)
    # harmonic-mean gap H(3,3) - H(4,5) = 1/3 - (1/4 + 1/5) < 0
    assert rm.cells[(1, 2)] is CellClass.NO_COMPARABILITY
    assert rm.cells[(2, 1)] is CellClass.HOLDS_SS_IJ
    assert rm.cells[(1, 4)] is CellClass.HOLDS_SS_JI


def test_region_map_serialisations():
    rm = region_map_dda(3, 4)
    csv_text = rm.to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0] == "i,j,class"
    assert len(lines) == 1 + 3 * 4
    first = lines[1].split(",")
    assert first[0] == "1" and first[1] == "1"

    obj = rm.to_json_obj()
    json.dumps(obj)  # must be serialisable as-is
    assert obj["n"] == 3 and obj["m"] == 4
    assert obj["frame"] == "DDA"
    assert len(obj["cells"]) == 12

    series = rm.boundary_series()
    assert series["first_order_line"]
    assert series["zero_mean_line"]
