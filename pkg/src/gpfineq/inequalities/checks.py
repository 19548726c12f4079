"""Left- and right-hand sides of the Chebyshev, Polya-Szego and GPF inequalities.

Every check returns an InequalityReport for a claim of the form lhs <= rhs.
The GPF checks evaluate the left operator anchored at 0 at the point x.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from ..errors import DomainError, NonConvergence
from ..generators import remark_step_pair
from ..operators import DEFAULT_QUAD, gpf_left, gpf_of_one_closed, gpf_of_one_series
from .report import DEFAULT_TOL, EPS_DEN, make_report, skipped_report

SYNCHRONY_GRID = 512


def _label(fn):
    return getattr(fn, 'label', repr(fn))


def _ratio(numerator, denominator):
    if denominator == 0.0:
        return math.copysign(math.inf, numerator) if numerator else math.nan
    return numerator / denominator


def _pair_record(f, g, x, pa=None, pb=None, a=None):
    record = {'f': _label(f), 'g': _label(g), 'x': float(x)}
    if a is not None:
        record['a'] = float(a)
    if pa is not None:
        record.update(alpha=pa.alpha, p1=pa.p)
    if pb is not None:
        record.update(beta=pb.alpha, p2=pb.p)
    return record


# ---------------------------------------------------------------- classical

def integral(fn, a, b):
    """Adaptive (QUADPACK) integral over [a, b], split at the breakpoints of fn"""
    edges = [a] + sorted(bp for bp in getattr(fn, 'breakpoints', ()) if a < bp < b) + [b]
    total = 0.0
    for lo, hi in zip(edges, edges[1:]):
        value, _ = integrate.quad(lambda t: float(fn(t)), lo, hi, epsabs=1e-15, epsrel=1e-13, limit=200)
        total += value
    return total


def _check_interval(a, b):
    if not (math.isfinite(a) and math.isfinite(b)) or a >= b:
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")


def chebyshev_functional(f, g, a, b):
    """T(f, g) = mean(fg) - mean(f) mean(g) over [a, b]"""
    _check_interval(a, b)
    length = b - a
    return integral(f * g, a, b) / length - (integral(f, a, b) / length) * (integral(g, a, b) / length)


def is_synchronous(f, g, a, b, points=SYNCHRONY_GRID):
    grid = np.linspace(a, b, points)
    fv, gv = f(grid), g(grid)
    df = fv[:, None] - fv[None, :]
    dg = gv[:, None] - gv[None, :]
    scale = max(np.max(np.abs(fv)), 1.0) * max(np.max(np.abs(gv)), 1.0)
    return bool(np.all(df * dg >= -1e-12 * scale))


def chebyshev_check(f, g, a, b, tol=DEFAULT_TOL):
    """T(f, g) >= 0 for a synchronous pair; other pairs are skipped"""
    _check_interval(a, b)
    params = _pair_record(f, g, b, a=a)
    if not is_synchronous(f, g, a, b):
        return skipped_report('chebyshev', params, 'pair is not synchronous')
    return make_report('chebyshev', params, 0.0, chebyshev_functional(f, g, a, b), tol)


def theorem1_check(f, g, bounds, a, b, tol=DEFAULT_TOL):
    """|T(f,g)| <= (1/4) (M-m)(N-n)/sqrt(mnMN) mean(f) mean(g)"""
    _check_interval(a, b)
    length = b - a
    lhs = abs(chebyshev_functional(f, g, a, b))
    den = bounds.product
    mean_f = integral(f, a, b) / length
    mean_g = integral(g, a, b) / length
    rhs = 0.25 * (bounds.M - bounds.m) * (bounds.N - bounds.n) / math.sqrt(den) * mean_f * mean_g
    return make_report('theorem1', dict(_pair_record(f, g, b, a=a), **bounds.to_dict()), lhs, rhs, tol, (den,))


def _polya_szego_constant(bounds):
    r = math.sqrt(bounds.M * bounds.N / (bounds.m * bounds.n))
    return 0.25 * (r + 1.0 / r) ** 2


def polya_szego_classic_check(f, g, bounds, a, b, tol=DEFAULT_TOL):
    """(int f^2 int g^2) / (int fg)^2 <= (1/4)(sqrt(MN/mn) + sqrt(mn/MN))^2"""
    _check_interval(a, b)
    fg = integral(f * g, a, b)
    lhs = _ratio(integral(f ** 2, a, b) * integral(g ** 2, a, b), fg ** 2)
    params = dict(_pair_record(f, g, b, a=a), **bounds.to_dict())
    return make_report('polya_szego', params, lhs, _polya_szego_constant(bounds), tol, (fg,))


def sharpness_scan(eps_grid):
    """(eps, ratio) pairs for the half-interval step function; ratio = 1 - eps^2 exactly"""
    rows = []
    for eps in eps_grid:
        f, bounds = remark_step_pair(eps)
        m, M = bounds.m, bounds.M
        mean = integral(f, 0.0, 1.0)
        gruss_scale = (M - m) ** 2 / (4.0 * m * M) * mean ** 2
        rows.append((float(eps), abs(chebyshev_functional(f, f, 0.0, 1.0)) / gruss_scale))
    return rows


# ---------------------------------------------------------------- GPF based

class _Gpf:
    """GPF operator at a fixed (params, x), tracking the worst quadrature error"""

    def __init__(self, params, x, quad_cfg):
        self.params = params
        self.x = x
        self.quad_cfg = quad_cfg
        self.worst_relative_error = 0.0

    def __call__(self, integrand):
        result = gpf_left(self.params, integrand, self.x, self.quad_cfg)
        if result.value:
            self.worst_relative_error = max(self.worst_relative_error, result.abs_error_estimate / abs(result.value))
        return result.value

    @property
    def one(self):
        return _unit(self.params, self.x)


@lru_cache(maxsize=4096)
def _unit(params, x):
    return gpf_of_one_closed(params, x)


@lru_cache(maxsize=4096)
def _series_gap(params, x):
    """Relative gap between series and closed form; NaN when the series does not converge"""
    closed = _unit(params, x)
    try:
        series = gpf_of_one_series(params, x)
    except NonConvergence as exc:
        logging.warning(f"series cross-check skipped: {exc}")
        return math.nan
    return abs(series - closed) / abs(closed)


def _start(x):
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    return x


def _extras(*operators):
    return {'quad_rel_error': max(op.worst_relative_error for op in operators)}


def amgm_intermediate_check(params, f, g, env, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """GPF[w1w2 f^2] + GPF[v1v2 g^2] <= GPF[(v1w1 + v2w2) fg]"""
    x = _start(x)
    record = _pair_record(f, g, x, params)
    if x == 0.0:
        return skipped_report('amgm', record, 'x = 0')
    I = _Gpf(params, x, quad_cfg)
    v1, v2, w1, w2 = env.v1, env.v2, env.w1, env.w2
    lhs = I(w1 * w2 * f ** 2) + I(v1 * v2 * g ** 2)
    rhs = I((v1 * w1 + v2 * w2) * f * g)
    return make_report('amgm', record, lhs, rhs, tol, extras=_extras(I))


def lemma1_check(params, f, g, env, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """GPF[w1w2 f^2] GPF[v1v2 g^2] / GPF[(v1w1 + v2w2) fg]^2 <= 1/4"""
    x = _start(x)
    record = _pair_record(f, g, x, params)
    if x == 0.0:
        return skipped_report('lemma1', record, 'x = 0')
    I = _Gpf(params, x, quad_cfg)
    v1, v2, w1, w2 = env.v1, env.v2, env.w1, env.w2
    den = I((v1 * w1 + v2 * w2) * f * g)
    lhs = _ratio(I(w1 * w2 * f ** 2) * I(v1 * v2 * g ** 2), den ** 2)
    return make_report('lemma1', record, lhs, 0.25, tol, (den,), extras=_extras(I))


def corollary1_check(params, f, g, bounds, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """GPF[f^2] GPF[g^2] / GPF[fg]^2 <= (1/4)(sqrt(mn/MN) + sqrt(MN/mn))^2"""
    x = _start(x)
    record = dict(_pair_record(f, g, x, params), **bounds.to_dict())
    if x == 0.0:
        return skipped_report('corollary1', record, 'x = 0')
    I = _Gpf(params, x, quad_cfg)
    den = I(f * g)
    lhs = _ratio(I(f ** 2) * I(g ** 2), den ** 2)
    return make_report('corollary1', record, lhs, _polya_szego_constant(bounds), tol, (den,), extras=_extras(I))


def lemma2_check(pa, pb, f, g, env, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """GPFa[v1v2] GPFb[w1w2] GPFa[f^2] GPFb[g^2] <= (1/4)(GPFa[v1 f] GPFb[w1 g] + GPFa[v2 f] GPFb[w2 g])^2"""
    x = _start(x)
    record = _pair_record(f, g, x, pa, pb)
    if x == 0.0:
        return skipped_report('lemma2', record, 'x = 0')
    Ia = _Gpf(pa, x, quad_cfg)
    Ib = _Gpf(pb, x, quad_cfg)
    v1, v2, w1, w2 = env.v1, env.v2, env.w1, env.w2
    lhs = Ia(v1 * v2) * Ib(w1 * w2) * Ia(f ** 2) * Ib(g ** 2)
    rhs = 0.25 * (Ia(v1 * f) * Ib(w1 * g) + Ia(v2 * f) * Ib(w2 * g)) ** 2
    return make_report('lemma2', record, lhs, rhs, tol, extras=_extras(Ia, Ib))


def corollary2_check(pa, pb, f, g, bounds, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """Ga Gb GPFa[f^2] GPFb[g^2] / (GPFa[f] GPFb[g])^2 <= (1/4)(sqrt(mn/MN) + sqrt(MN/mn))^2"""
    x = _start(x)
    record = dict(_pair_record(f, g, x, pa, pb), **bounds.to_dict())
    if x == 0.0:
        return skipped_report('corollary2', record, 'x = 0')
    Ia = _Gpf(pa, x, quad_cfg)
    Ib = _Gpf(pb, x, quad_cfg)
    den = Ia(f) * Ib(g)
    lhs = _ratio(Ia.one * Ib.one * Ia(f ** 2) * Ib(g ** 2), den ** 2)
    extras = _extras(Ia, Ib)
    gaps = (_series_gap(pa, x), _series_gap(pb, x))
    extras['series_gap'] = math.nan if any(math.isnan(gap) for gap in gaps) else max(gaps)
    return make_report('corollary2', record, lhs, _polya_szego_constant(bounds), tol, (den,), extras=extras)


def _envelope_minimum(fn, x):
    minimum = getattr(fn, 'minimum', None)
    if minimum is not None:
        return minimum(upto=x)
    return float(np.min(fn(np.linspace(0.0, x, 1024))))


def lemma3_check(pa, pb, f, g, env, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """GPFa[f^2] GPFb[g^2] <= GPFa[v2 fg / w1] GPFb[w2 fg / v1]"""
    x = _start(x)
    record = _pair_record(f, g, x, pa, pb)
    if x == 0.0:
        return skipped_report('lemma3', record, 'x = 0')
    v1, v2, w1, w2 = env.v1, env.v2, env.w1, env.w2
    floors = (_envelope_minimum(w1, x), _envelope_minimum(v1, x))
    if min(floors) < EPS_DEN:
        return make_report('lemma3', record, math.nan, math.nan, tol, floors, detail='envelope lower bound vanishes')
    Ia = _Gpf(pa, x, quad_cfg)
    Ib = _Gpf(pb, x, quad_cfg)
    lhs = Ia(f ** 2) * Ib(g ** 2)
    rhs = Ia(v2 * f * g / w1) * Ib(w2 * f * g / v1)
    return make_report('lemma3', record, lhs, rhs, tol, floors, extras=_extras(Ia, Ib))


def lemma3_ratio_check(params, f, g, bounds, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """GPF[f^2] GPF[g^2] / GPF[fg]^2 <= MN/(mn)"""
    x = _start(x)
    record = dict(_pair_record(f, g, x, params), **bounds.to_dict())
    if x == 0.0:
        return skipped_report('lemma3_ratio', record, 'x = 0')
    I = _Gpf(params, x, quad_cfg)
    den = I(f * g)
    lhs = _ratio(I(f ** 2) * I(g ** 2), den ** 2)
    rhs = bounds.M * bounds.N / (bounds.m * bounds.n)
    return make_report('lemma3_ratio', record, lhs, rhs, tol, (den,), extras=_extras(I))


def _bracket(I, u, v, w):
    """GPF[(v + w) u]^2 / (4 GPF[vw]) and its denominator"""
    den = I(v * w)
    return _ratio(I((v + w) * u) ** 2, 4.0 * den), den


def theorem2_check(pa, pb, f, g, env, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """Two-parameter Gruss-type bound built from H(tau, xi) = (f(tau)-f(xi))(g(tau)-g(xi))"""
    x = _start(x)
    record = _pair_record(f, g, x, pa, pb)
    if x == 0.0:
        return skipped_report('theorem2', record, 'x = 0')
    Ia = _Gpf(pa, x, quad_cfg)
    Ib = _Gpf(pb, x, quad_cfg)
    Ga, Gb = Ia.one, Ib.one
    lhs = Ga * Ib(f * g) + Gb * Ia(f * g) - Ia(f) * Ib(g) - Ib(f) * Ia(g)

    dens = []

    def A1_plus_A2(u, v, w):
        cross = Ia(u) * Ib(u)
        ratio_a, den_a = _bracket(Ia, u, v, w)
        ratio_b, den_b = _bracket(Ib, u, v, w)
        dens.extend((den_a, den_b))
        return (Gb * ratio_a - cross) + (Ga * ratio_b - cross)

    rhs = math.sqrt(abs(A1_plus_A2(f, env.v1, env.v2))) * math.sqrt(abs(A1_plus_A2(g, env.w1, env.w2)))
    return make_report('theorem2', record, lhs, rhs, tol, dens, extras=_extras(Ia, Ib))


def theorem3_check(params, f, g, env, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """|G GPF[fg] - GPF[f] GPF[g]| <= |A(f, v1, v2) A(g, w1, w2)|^(1/2)"""
    x = _start(x)
    record = _pair_record(f, g, x, params)
    if x == 0.0:
        return skipped_report('theorem3', record, 'x = 0')
    I = _Gpf(params, x, quad_cfg)
    G = I.one
    lhs = abs(G * I(f * g) - I(f) * I(g))
    ratio_f, den_f = _bracket(I, f, env.v1, env.v2)
    ratio_g, den_g = _bracket(I, g, env.w1, env.w2)
    A_f = G * ratio_f - I(f) ** 2
    A_g = G * ratio_g - I(g) ** 2
    rhs = math.sqrt(abs(A_f * A_g))
    return make_report('theorem3', record, lhs, rhs, tol, (den_f, den_g), extras=_extras(I))


def corollary3_check(params, f, g, bounds, x, tol=DEFAULT_TOL, quad_cfg=DEFAULT_QUAD):
    """|G GPF[fg] - GPF[f] GPF[g]| <= (M-m)(N-n)/(4 sqrt(MmNn)) GPF[f] GPF[g]

    The bound is theorem3_check with v1=m, v2=M, w1=n, w2=N substituted. The
    variant with an extra factor G on the right is kept in
    extras['printed_rhs'] for comparison.
    """
    x = _start(x)
    record = dict(_pair_record(f, g, x, params), **bounds.to_dict())
    if x == 0.0:
        return skipped_report('corollary3', record, 'x = 0')
    I = _Gpf(params, x, quad_cfg)
    G = I.one
    If, Ig = I(f), I(g)
    lhs = abs(G * I(f * g) - If * Ig)
    den = bounds.product
    rhs = (bounds.M - bounds.m) * (bounds.N - bounds.n) / (4.0 * math.sqrt(den)) * If * Ig
    extras = _extras(I)
    extras['printed_rhs'] = G * rhs
    return make_report('corollary3', record, lhs, rhs, tol, (den,), extras=extras)


@dataclass(frozen=True)
class CheckSpec:
    """How a campaign drives a check.

    kind:   'classical' (cells over x), 'single' (alpha, p1, x) or 'double' (alpha, beta, p1, p2, x)
    inputs: 'pair', 'bounds' or 'envelope'
    """
    kind: str
    inputs: str
    fn: object


CHECKS = {
    'chebyshev': CheckSpec('classical', 'pair', chebyshev_check),
    'theorem1': CheckSpec('classical', 'bounds', theorem1_check),
    'polya_szego': CheckSpec('classical', 'bounds', polya_szego_classic_check),
    'amgm': CheckSpec('single', 'envelope', amgm_intermediate_check),
    'lemma1': CheckSpec('single', 'envelope', lemma1_check),
    'corollary1': CheckSpec('single', 'bounds', corollary1_check),
    'lemma2': CheckSpec('double', 'envelope', lemma2_check),
    'corollary2': CheckSpec('double', 'bounds', corollary2_check),
    'lemma3': CheckSpec('double', 'envelope', lemma3_check),
    'lemma3_ratio': CheckSpec('single', 'bounds', lemma3_ratio_check),
    'theorem2': CheckSpec('double', 'envelope', theorem2_check),
    'theorem3': CheckSpec('single', 'envelope', theorem3_check),
    'corollary3': CheckSpec('single', 'bounds', corollary3_check),
}
