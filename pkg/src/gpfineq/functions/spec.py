"""Positive test functions on [0, X] and the integrands built from them."""
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

FAMILIES = ('polynomial', 'exp_affine', 'trig_affine', 'step', 'grid')

AUDIT_POINTS = 1024


def audit_grid(domain_end, points=AUDIT_POINTS, breakpoints=()):
    """Uniform grid on [0, X] refined on both sides of every breakpoint"""
    grid = np.linspace(0.0, domain_end, points)
    if breakpoints:
        b = np.asarray(breakpoints, dtype=float)
        grid = np.concatenate([grid, b, np.nextafter(b, -np.inf), np.nextafter(b, np.inf)])
        grid = np.clip(grid, 0.0, domain_end)
    return np.unique(grid)


class _Arithmetic:
    """Pointwise arithmetic shared by FunctionSpec and DerivedFunction"""

    # numpy scalars on the left defer to the reflected operators below
    __array_ufunc__ = None

    def __add__(self, other):
        return _combine(self, other, np.add, '+')

    def __radd__(self, other):
        return _combine(other, self, np.add, '+')

    def __sub__(self, other):
        return _combine(self, other, np.subtract, '-')

    def __rsub__(self, other):
        return _combine(other, self, np.subtract, '-')

    def __mul__(self, other):
        return _combine(self, other, np.multiply, '*')

    def __rmul__(self, other):
        return _combine(other, self, np.multiply, '*')

    def __truediv__(self, other):
        return _combine(self, other, np.divide, '/')

    def __rtruediv__(self, other):
        return _combine(other, self, np.divide, '/')

    def __pow__(self, exponent):
        if not isinstance(exponent, (int, float, np.integer, np.floating)):
            return NotImplemented
        return DerivedFunction(
            lambda tau: np.power(self(tau), exponent),
            self.breakpoints,
            self.domain_end,
            f"({self.label})**{exponent:g}",
        )


@dataclass(frozen=True)
class DerivedFunction(_Arithmetic):
    """An integrand obtained by combining FunctionSpecs pointwise"""
    fn: object
    breakpoints: tuple
    domain_end: float
    label: str = 'derived'

    def __call__(self, tau):
        return self.fn(np.asarray(tau, dtype=float))


def _operand(value):
    if isinstance(value, _Arithmetic):
        return value, value.breakpoints, value.domain_end, value.label
    if isinstance(value, (int, float, np.integer, np.floating)):
        c = float(value)
        return (lambda tau: np.full_like(tau, c)), (), math.inf, f"{c:g}"
    return None


def _combine(left, right, op, symbol):
    lhs = _operand(left)
    rhs = _operand(right)
    if lhs is None or rhs is None:
        return NotImplemented
    lfn, lbp, lend, llabel = lhs
    rfn, rbp, rend, rlabel = rhs
    breakpoints = tuple(sorted(set(lbp) | set(rbp)))
    return DerivedFunction(
        lambda tau: op(lfn(tau), rfn(tau)),
        breakpoints,
        min(lend, rend),
        f"({llabel} {symbol} {rlabel})",
    )


@dataclass(frozen=True)
class FunctionSpec(_Arithmetic):
    """A positive function on [0, domain_end] from one of the closed-form families.

    Inequality inputs must be strictly positive; strictly_positive=False relaxes
    the audit to f >= 0 for plain operator evaluation.

    params per family:
      polynomial   (c0, c1, ..., cd)           sum c_k tau**k
      exp_affine   (c0, c1, c2)                c0 + c1 exp(c2 tau)
      trig_affine  (c0, c1, c2, c3)            c0 + c1 sin(c2 tau + c3)
      step         breakpoints=(b1..bk), params=(l0..lk)
      grid         breakpoints=(t0..tn), params=(y0..yn), linear interpolation
    """
    family: str
    params: tuple
    domain_end: float
    knots: tuple = ()
    name: str = ''
    strictly_positive: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'params', tuple(float(p) for p in self.params))
        object.__setattr__(self, 'knots', tuple(float(k) for k in self.knots))
        object.__setattr__(self, 'domain_end', float(self.domain_end))
        self._validate()

    def _validate(self):
        X = self.domain_end
        if not (math.isfinite(X) and X > 0.0):
            raise DomainError(f"domain_end must be positive, got {X!r}")
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not all(math.isfinite(p) for p in self.params + self.knots):
            raise DomainError(f"non-finite parameter in {self.family} function")
        expected = {'exp_affine': 3, 'trig_affine': 4}
        if self.family in expected and len(self.params) != expected[self.family]:
            raise DomainError(f"{self.family} takes {expected[self.family]} parameters, got {len(self.params)}")
        if self.family == 'polynomial' and not self.params:
            raise DomainError("polynomial needs at least one coefficient")
        if self.family == 'step':
            if len(self.params) != len(self.knots) + 1:
                raise DomainError("step function needs one more level than breakpoints")
            if any(b <= 0.0 or b >= X for b in self.knots):
                raise DomainError(f"step breakpoints must lie inside (0, {X:g})")
            if any(b2 <= b1 for b1, b2 in zip(self.knots, self.knots[1:])):
                raise DomainError("step breakpoints must be strictly increasing")
        if self.family == 'grid':
            t = self.knots
            if len(t) < 2 or len(t) != len(self.params):
                raise DomainError("grid function needs matching abscissae and values (at least two)")
            if any(t2 <= t1 for t1, t2 in zip(t, t[1:])):
                raise DomainError("grid abscissae must be strictly increasing")
            if t[0] > 0.0 or t[-1] < X:
                raise DomainError(f"grid abscissae must cover [0, {X:g}]")
        lowest = self.minimum()
        if self.strictly_positive and not lowest > 0.0:
            raise DomainError(f"{self.describe()} is not strictly positive on [0, {X:g}] (min {lowest:.3g})")
        if not lowest >= 0.0:
            raise DomainError(f"{self.describe()} is negative on [0, {X:g}] (min {lowest:.3g})")

    @property
    def label(self):
        return self.name or self.describe()

    @property
    def breakpoints(self):
        """Interior jumps (step) or kinks (grid) inside (0, domain_end)"""
        if self.family in ('step', 'grid'):
            return tuple(b for b in self.knots if 0.0 < b < self.domain_end)
        return ()

    def __call__(self, tau):
        tau = np.asarray(tau, dtype=float)
        c = self.params
        if self.family == 'polynomial':
            return np.polynomial.polynomial.polyval(tau, c) + np.zeros_like(tau)
        if self.family == 'exp_affine':
            return c[0] + c[1] * np.exp(c[2] * tau)
        if self.family == 'trig_affine':
            return c[0] + c[1] * np.sin(c[2] * tau + c[3])
        if self.family == 'step':
            index = np.searchsorted(np.asarray(self.knots), tau, side='right')
            return np.asarray(c)[index]
        return np.interp(tau, self.knots, c)

    def values_on_grid(self, points=AUDIT_POINTS, upto=None):
        end = self.domain_end if upto is None else min(float(upto), self.domain_end)
        breakpoints = tuple(b for b in self.breakpoints if b < end)
        grid = audit_grid(end, points, breakpoints)
        return grid, self(grid)

    def minimum(self, points=AUDIT_POINTS, upto=None):
        return float(np.min(self.values_on_grid(points, upto)[1]))

    def is_nondecreasing(self, points=AUDIT_POINTS):
        values = self.values_on_grid(points)[1]
        return bool(np.all(np.diff(values) >= -1e-12 * np.max(np.abs(values))))

    def scaled(self, factor):
        """Same family with every value multiplied by factor > 0"""
        factor = float(factor)
        if not factor > 0.0:
            raise DomainError(f"scale factor must be positive, got {factor}")
        c = self.params
        if self.family == 'exp_affine':
            params = (factor * c[0], factor * c[1], c[2])
        elif self.family == 'trig_affine':
            params = (factor * c[0], factor * c[1], c[2], c[3])
        else:
            params = tuple(factor * p for p in c)
        name = f"{factor!r}*{self.name}" if self.name else ''
        return FunctionSpec(self.family, params, self.domain_end, self.knots, name, self.strictly_positive)

    def describe(self):
        """Compact descriptor string, parseable by parse_descriptor"""
        from .descriptor import describe
        return describe(self)


def constant(value, domain_end):
    return FunctionSpec('polynomial', (value,), domain_end)
