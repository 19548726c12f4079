"""Pointwise envelopes and constant bounds for a pair (f, g)."""
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from .spec import AUDIT_POINTS, audit_grid


@dataclass(frozen=True)
class ConstantBounds:
    """0 < m <= f <= M and 0 < n <= g <= N"""
    m: float
    M: float
    n: float
    N: float

    def __post_init__(self):
        for key in ('m', 'M', 'n', 'N'):
            value = float(getattr(self, key))
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"bound {key} must be positive and finite, got {value!r}")
            object.__setattr__(self, key, value)
        if self.m > self.M or self.n > self.N:
            raise DomainError(f"need m <= M and n <= N, got {self}")

    @property
    def product(self):
        return self.m * self.M * self.n * self.N

    def audit(self, f, g, x=None, points=AUDIT_POINTS):
        """True when the bounds hold for f and g on a grid over [0, x]"""
        f_lo, f_hi = _extrema(f, x, points)
        g_lo, g_hi = _extrema(g, x, points)
        return self.m <= f_lo and f_hi <= self.M and self.n <= g_lo and g_hi <= self.N

    def to_dict(self):
        return {'m': self.m, 'M': self.M, 'n': self.n, 'N': self.N}


@dataclass(frozen=True)
class Envelope:
    """Bounding functions with 0 < v1 <= f <= v2 and 0 < w1 <= g <= w2"""
    v1: object
    v2: object
    w1: object
    w2: object

    def audit(self, f, g, x=None, points=AUDIT_POINTS):
        end = _end(f, x)
        breakpoints = tuple(sorted(set(
            b for fn in (f, g, self.v1, self.v2, self.w1, self.w2)
            for b in getattr(fn, 'breakpoints', ()) if b < end
        )))
        grid = audit_grid(end, points, breakpoints)
        fv, gv = f(grid), g(grid)
        v1, v2, w1, w2 = (fn(grid) for fn in (self.v1, self.v2, self.w1, self.w2))
        # scaled envelopes differ from f only by a rounding of the factor
        slack = 1e-12
        return bool(
            np.all(v1 > 0.0) and np.all(w1 > 0.0)
            and np.all(v1 <= fv * (1.0 + slack)) and np.all(fv <= v2 * (1.0 + slack))
            and np.all(w1 <= gv * (1.0 + slack)) and np.all(gv <= w2 * (1.0 + slack))
        )


def _end(fn, x):
    domain_end = getattr(fn, 'domain_end', None)
    if x is None:
        if domain_end is None:
            raise DomainError("an end point is required for functions without a domain")
        return domain_end
    return float(x) if domain_end is None else min(float(x), domain_end)


def _extrema(fn, x, points):
    end = _end(fn, x)
    breakpoints = tuple(b for b in getattr(fn, 'breakpoints', ()) if b < end)
    values = fn(audit_grid(end, points, breakpoints))
    return float(np.min(values)), float(np.max(values))
