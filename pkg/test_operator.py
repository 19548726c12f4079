#!/usr/bin/env python3
"""
Tests for the GPF integral operators and the quadrature behind them.

Covers the documented example values, agreement of the three evaluations of
the operator on f = 1, the classical (alpha = 1, p = 1) reduction against
scipy.integrate.quad, linearity, positivity and monotonicity in p.

Usage:
    python test_operator.py
"""

import math
import os
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from gpfineq.errors import DomainError, NonConvergence
from gpfineq.functions import FunctionSpec, constant, parse_descriptor
from gpfineq.generators import GeneratorConfig, generate_pair
from gpfineq.operators import (
    FractionalParams,
    QuadConfig,
    gpf_left,
    gpf_of_one,
    gpf_of_one_closed,
    gpf_of_one_series,
    gpf_right,
    graded_panels,
    integrate_weighted,
    panel_edges,
    riemann_liouville_left,
)


def quad_oracle(fn, a, b):
    edges = [a] + [bp for bp in fn.breakpoints if a < bp < b] + [b]
    return sum(integrate.quad(lambda t: float(fn(t)), lo, hi, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
               for lo, hi in zip(edges, edges[1:]))


def test_fractional_params_domain():
    assert FractionalParams(1.5, 1.0).a == 0.0
    assert FractionalParams(1.5, 0.5).a == -1.0
    for alpha, p in ((0.0, 1.0), (-1.0, 0.5), (1.0, 0.0), (1.0, 1.5), (171.0, 1.0)):
        with pytest.raises(DomainError):
            FractionalParams(alpha, p)


def test_gpf_left_examples():
    one = constant(1.0, 2.0)
    assert gpf_left(FractionalParams(1.0, 1.0), one, 2.0).value == pytest.approx(2.0, rel=1e-12)
    assert gpf_left(FractionalParams(2.0, 1.0), one, 1.0).value == pytest.approx(0.5, rel=1e-12)
    assert gpf_left(FractionalParams(1.0, 0.5), one, 1.0).value == pytest.approx(1.2642411176571154, rel=1e-10)


def test_gpf_right_examples():
    one = constant(1.0, 2.0)
    assert gpf_right(FractionalParams(1.0, 1.0), one, 0.0, 2.0).value == pytest.approx(2.0, rel=1e-12)
    identity = parse_descriptor('poly:0,1', 1.0, strictly_positive=False)
    assert gpf_right(FractionalParams(1.0, 1.0), identity, 0.0, 1.0).value == pytest.approx(0.5, rel=1e-12)
    expected = 4.0 * (1.0 - 2.0 * math.exp(-1.0))
    assert gpf_right(FractionalParams(2.0, 0.5), one, 0.0, 1.0).value == pytest.approx(expected, rel=1e-10)


def test_gpf_left_polynomial_example():
    # alpha=2: integral of (1 - tau) tau over [0, 1]
    f = parse_descriptor('poly:0,1', 1.0, strictly_positive=False)
    assert gpf_left(FractionalParams(2.0, 1.0), f, 1.0).value == pytest.approx(1.0 / 6.0, rel=1e-12)


def test_gpf_left_rejects_bad_points():
    one = constant(1.0, 1.0)
    params = FractionalParams(1.0, 1.0)
    with pytest.raises(DomainError):
        gpf_left(params, one, 0.0)
    with pytest.raises(DomainError):
        gpf_left(params, one, 2.0)
    with pytest.raises(DomainError):
        gpf_right(params, one, 0.5, 0.5)


def test_series_and_closed_examples():
    assert gpf_of_one_series(FractionalParams(1.0, 1.0), 2.0) == pytest.approx(2.0, rel=1e-14)
    assert gpf_of_one_series(FractionalParams(2.0, 1.0), 1.0) == pytest.approx(0.5, rel=1e-14)
    assert gpf_of_one_series(FractionalParams(1.0, 0.5), 1.0) == pytest.approx(1.2642411176571154, rel=1e-12)
    assert gpf_of_one_closed(FractionalParams(1.0, 1.0), 3.0) == pytest.approx(3.0, rel=1e-14)
    assert gpf_of_one_closed(FractionalParams(0.5, 1.0), 1.0) == pytest.approx(1.1283791670955126, rel=1e-13)
    assert gpf_of_one_closed(FractionalParams(1.0, 0.5), 1.0) == pytest.approx(1.2642411176571154, rel=1e-12)


def test_series_kmax_exhaustion():
    with pytest.raises(NonConvergence):
        gpf_of_one_series(FractionalParams(1.0, 0.1), 4.0, kmax=3)


def test_series_converges_for_small_p():
    # |a| x = 396 needs well over a thousand terms
    for alpha, p in ((1.0, 0.01), (0.5, 0.02), (2.5, 0.01)):
        params = FractionalParams(alpha, p)
        assert gpf_of_one_series(params, 4.0) == pytest.approx(gpf_of_one_closed(params, 4.0), rel=1e-10)
    assert gpf_of_one_series(FractionalParams(1.0, 0.01), 4.0) == pytest.approx(1.0 / 0.99, rel=1e-12)


def test_triple_agreement_for_constant_one():
    for alpha in (0.5, 1.0, 1.5, 2.5, 3.7):
        for p in (0.1, 0.5, 0.9, 1.0):
            for x in (0.5, 1.0, 4.0):
                params = FractionalParams(alpha, p)
                series = gpf_of_one_series(params, x)
                closed = gpf_of_one_closed(params, x)
                quad = gpf_left(params, constant(1.0, x), x).value
                assert series == pytest.approx(closed, rel=1e-9), (alpha, p, x)
                assert quad == pytest.approx(closed, rel=1e-9), (alpha, p, x)
                assert gpf_of_one(params, x) == closed


def test_classical_reduction_on_generated_functions():
    params = FractionalParams(1.0, 1.0)
    for index in range(25):
        cfg = GeneratorConfig(seed=11).derive(index).with_domain(1.0 + 0.1 * index)
        for f in generate_pair(cfg):
            x = f.domain_end
            assert gpf_left(params, f, x).value == pytest.approx(quad_oracle(f, 0.0, x), rel=1e-9)
            assert riemann_liouville_left(1.0, f, x).value == pytest.approx(quad_oracle(f, 0.0, x), rel=1e-9)


def test_step_function_panels_split_at_breakpoints():
    f = parse_descriptor('step:0.3,0.7@1,2,0.5', 1.0)
    # alpha = 1, p = 1: plain integral of the step function
    value = gpf_left(FractionalParams(1.0, 1.0), f, 1.0).value
    assert value == pytest.approx(0.3 * 1 + 0.4 * 2 + 0.3 * 0.5, rel=1e-12)
    assert panel_edges(1.0, [0.7, 0.3, 0.3 + 1e-16]) == [0.0, 0.3, 0.7, 1.0]


def test_breakpoint_just_below_evaluation_point():
    # p = 1: value = (x**alpha + (x - 0.5)**alpha) / Gamma(alpha + 1)
    for gap in (1e-4, 1e-6, 1e-9):
        x = 0.5 + gap
        f = parse_descriptor('step:0.5@1,2', x)
        expected = (x ** 0.3 + (x - 0.5) ** 0.3) / math.gamma(1.3)
        assert gpf_left(FractionalParams(0.3, 1.0), f, x).value == pytest.approx(expected, rel=1e-9), gap


def test_graded_panels():
    assert graded_panels([0.0, 0.6, 1.0]) == [(0.6, 1.0)]
    assert graded_panels([0.0, 1.0]) == []
    panels = graded_panels([0.0, 1e-3, 1.0])
    assert panels[0] == (1e-3, 2e-3) and panels[-1][1] == 1.0
    assert all(a[1] == b[0] for a, b in zip(panels, panels[1:]))
    assert all(hi <= 2.0 * lo for lo, hi in panels)


def test_weighted_quadrature_reports_nonconvergence():
    cfg = QuadConfig(min_nodes=2, max_nodes=4)
    with pytest.raises(NonConvergence) as info:
        integrate_weighted(lambda u: np.sin(40.0 * u), 1.5, 3.0, (), cfg)
    assert info.value.value is not None


def test_error_estimate_below_tolerance():
    f = parse_descriptor('trig:2,0.5,3,0.1', 2.0)
    result = gpf_left(FractionalParams(0.6, 0.7), f, 2.0)
    assert result.abs_error_estimate <= 1e-10 * abs(result.value)
    assert result.nodes_used >= 128


def test_kernel_integral_monotone_in_p():
    # p**alpha * value is the bare kernel integral, which grows with p
    f = parse_descriptor('exp:1,0.5,-0.3', 2.0)
    values = [p ** 1.3 * gpf_left(FractionalParams(1.3, p), f, 2.0).value for p in np.linspace(0.1, 1.0, 10)]
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_normalized_value_not_monotone_in_p():
    one = constant(1.0, 2.0)
    near = gpf_of_one_closed(FractionalParams(1.3, 0.9), 2.0)
    at_one = gpf_of_one_closed(FractionalParams(1.3, 1.0), 2.0)
    assert near > at_one
    assert gpf_left(FractionalParams(1.3, 0.9), one, 2.0).value == pytest.approx(near, rel=1e-9)


coefficients = st.floats(min_value=0.1, max_value=3.0, allow_nan=False)


@settings(max_examples=25, deadline=None)
@given(
    c0=coefficients, c1=coefficients, d0=coefficients, d1=coefficients,
    k1=st.floats(min_value=-2.0, max_value=2.0), k2=st.floats(min_value=-2.0, max_value=2.0),
    alpha=st.floats(min_value=0.2, max_value=4.0), p=st.floats(min_value=0.1, max_value=1.0),
)
def test_linearity(c0, c1, d0, d1, k1, k2, alpha, p):
    f = FunctionSpec('polynomial', (c0, c1), 1.5)
    g = FunctionSpec('exp_affine', (d0, d1, -0.5), 1.5)
    params = FractionalParams(alpha, p)
    combined = gpf_left(params, k1 * f + k2 * g, 1.5)
    rf = gpf_left(params, f, 1.5)
    rg = gpf_left(params, g, 1.5)
    expected = k1 * rf.value + k2 * rg.value
    slack = combined.abs_error_estimate + abs(k1) * rf.abs_error_estimate + abs(k2) * rg.abs_error_estimate
    assert abs(combined.value - expected) <= slack + 1e-13 * (abs(k1 * rf.value) + abs(k2 * rg.value))


@settings(max_examples=25, deadline=None)
@given(
    level=st.floats(min_value=0.01, max_value=5.0),
    slope=st.floats(min_value=-0.9, max_value=3.0),
    alpha=st.floats(min_value=0.1, max_value=6.0),
    p=st.floats(min_value=0.05, max_value=1.0),
    x=st.floats(min_value=0.05, max_value=4.0),
)
def test_positivity(level, slope, alpha, p, x):
    # level * (1 + slope * tau / x) stays >= 0.1 * level on [0, x]
    f = FunctionSpec('polynomial', (level, level * slope / x), x)
    assert gpf_left(FractionalParams(alpha, p), f, x).value > 0.0


def main():
    """Run every test in this file and report"""
    tests = [(name, fn) for name, fn in globals().items() if name.startswith('test_') and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"✅ {name}")
        except Exception as e:
            failed += 1
            print(f"❌ {name}: {type(e).__name__}: {e}")
    print(f"\n{len(tests) - failed}/{len(tests)} tests passed")
    sys.exit(0 if failed == 0 else 1)


if __name__ == "__main__":
    main()
