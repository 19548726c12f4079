"""Left and right generalized proportional fractional (GPF) integrals.

    left:  (1/(p**alpha Gamma(alpha))) int_0^x exp(a (x-tau)) (x-tau)**(alpha-1) f(tau) dtau
    right: (1/(p**alpha Gamma(alpha))) int_t^b exp(a (tau-t)) (tau-t)**(alpha-1) f(tau) dtau

with a = (p-1)/p. p = 1 gives the Riemann-Liouville integrals.
"""
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from ..errors import DomainError, NonConvergence
from ..special import GAMMA_ARG_MAX, gamma, lower_incomplete_gamma
from .quadrature import DEFAULT_QUAD, integrate_weighted

# domain-end comparisons tolerate round-off in caller-computed x
_END_SLACK = 1e-12


@dataclass(frozen=True)
class FractionalParams:
    alpha: float
    p: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'p', float(self.p))
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha <= GAMMA_ARG_MAX):
            raise DomainError(f"alpha must lie in (0, {GAMMA_ARG_MAX:g}], got {self.alpha!r}")
        if not (0.0 < self.p <= 1.0):
            raise DomainError(f"p must lie in (0, 1], got {self.p!r}")

    @property
    def a(self):
        """Exponential rate (p-1)/p <= 0"""
        return (self.p - 1.0) / self.p

    @property
    def normalization(self):
        return 1.0 / (self.p ** self.alpha * gamma(self.alpha))

    def to_dict(self):
        return {'alpha': self.alpha, 'p': self.p}


def _check_end(f, end):
    domain_end = getattr(f, 'domain_end', math.inf)
    if end > domain_end * (1.0 + _END_SLACK):
        raise DomainError(f"evaluation point {end!r} lies beyond the function domain [0, {domain_end!r}]")


def gpf_left(params, f, x, quad_cfg=DEFAULT_QUAD):
    """Left GPF integral of f anchored at 0, evaluated at x > 0"""
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    _check_end(f, x)
    a = params.a

    def integrand(u):
        return np.exp(a * u) * f(x - u)

    cuts = [x - b for b in getattr(f, 'breakpoints', ()) if 0.0 < b < x]
    result = integrate_weighted(integrand, params.alpha, x, cuts, quad_cfg)
    return result.scaled(params.normalization)


def gpf_right(params, f, t, b, quad_cfg=DEFAULT_QUAD):
    """Right GPF integral of f with upper terminal b, evaluated at t < b"""
    t = float(t)
    b = float(b)
    if not (math.isfinite(t) and math.isfinite(b)) or t < 0.0 or t >= b:
        raise DomainError(f"need 0 <= t < b, got t={t!r}, b={b!r}")
    _check_end(f, b)
    a = params.a

    def integrand(u):
        return np.exp(a * u) * f(t + u)

    cuts = [c - t for c in getattr(f, 'breakpoints', ()) if t < c < b]
    result = integrate_weighted(integrand, params.alpha, b - t, cuts, quad_cfg)
    return result.scaled(params.normalization)


def riemann_liouville_left(alpha, f, x, quad_cfg=DEFAULT_QUAD):
    return gpf_left(FractionalParams(alpha, 1.0), f, x, quad_cfg)


def gpf_of_one_series(params, x, kmax=None, term_tol=1e-16):
    """GPF integral of f = 1 from the Taylor series of exp(a(x-tau)).

    The series alternates with terms of size up to exp(|a|x), so it is summed
    in extended precision with enough digits to absorb that cancellation.
    Terms peak near k = |a|x, so the default kmax grows with |a|x.
    """
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    rate = params.a
    if kmax is None:
        kmax = max(1000, math.ceil(3.0 * abs(rate) * x) + 100)
    if kmax < 1:
        raise DomainError(f"kmax must be >= 1, got {kmax}")
    digits = 30 + int(math.ceil(2.0 * abs(rate) * x / math.log(10.0)))
    with mpmath.workdps(digits):
        alpha = mpmath.mpf(params.alpha)
        xm = mpmath.mpf(x)
        step = mpmath.mpf(rate) * xm
        power = xm ** alpha
        coeff = mpmath.mpf(1)
        total = mpmath.mpf(0)
        for k in range(kmax + 1):
            term = coeff * power / (alpha + k)
            total += term
            if k > 0 and abs(term) < term_tol * abs(total):
                break
            coeff *= step / (k + 1)
        else:
            raise NonConvergence(
                f"GPF series for f=1 not converged after kmax={kmax} terms (alpha={params.alpha}, p={params.p}, x={x})",
                value=float(total / (mpmath.mpf(params.p) ** alpha * mpmath.gamma(alpha))),
            )
        return float(total / (mpmath.mpf(params.p) ** alpha * mpmath.gamma(alpha)))


def gpf_of_one_closed(params, x):
    """GPF integral of f = 1 through the lower incomplete gamma function"""
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be positive, got {x!r}")
    alpha = params.alpha
    if params.p == 1.0:
        return x ** alpha / (gamma(alpha) * alpha)
    rate = -params.a
    return rate ** (-alpha) * lower_incomplete_gamma(alpha, rate * x) * params.normalization


def gpf_of_one(params, x):
    return gpf_of_one_closed(params, x)
