"""Seeded random positive functions, envelopes and constant bounds.

Every draw is a pure function of GeneratorConfig.seed; campaigns derive one
child seed per case so serial and parallel runs see the same functions.
"""
import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np

from ..errors import DomainError, GenerationExhausted
from ..functions import ConstantBounds, Envelope, FunctionSpec
from ..functions.spec import audit_grid

GENERATOR_FAMILIES = ('polynomial', 'exp_affine', 'trig_affine', 'step')

BOUNDS_GRID_POINTS = 4096


def _default_mix():
    return {family: 1.0 for family in GENERATOR_FAMILIES}


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    family_mix: dict = field(default_factory=_default_mix)
    delta: float = 0.1
    x_range: tuple = (0.5, 4.0)
    positivity_floor: float = 0.05
    max_rejections: int = 1000

    def __post_init__(self):
        if not (isinstance(self.seed, (int, np.integer)) and 0 <= int(self.seed) < 2 ** 64):
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, 'seed', int(self.seed))
        unknown = set(self.family_mix) - set(GENERATOR_FAMILIES)
        if unknown:
            raise DomainError(f"unknown families in family_mix: {sorted(unknown)}")
        weights = [float(w) for w in self.family_mix.values()]
        if any(w < 0.0 or not math.isfinite(w) for w in weights) or sum(weights) <= 0.0:
            raise DomainError(f"family_mix weights must be nonnegative and not all zero, got {self.family_mix}")
        if not (0.0 < self.delta < 1.0):
            raise DomainError(f"delta must lie in (0, 1), got {self.delta}")
        lo, hi = (float(v) for v in self.x_range)
        if not (0.0 < lo <= hi and math.isfinite(hi)):
            raise DomainError(f"x_range must satisfy 0 < lo <= hi, got {self.x_range}")
        object.__setattr__(self, 'x_range', (lo, hi))
        if not self.positivity_floor > 0.0:
            raise DomainError(f"positivity_floor must be positive, got {self.positivity_floor}")
        if self.max_rejections < 1:
            raise DomainError(f"max_rejections must be >= 1, got {self.max_rejections}")

    def derive(self, index):
        """Config with an independent child seed for stream `index`"""
        state = np.random.SeedSequence([self.seed, int(index)]).generate_state(1, dtype=np.uint64)
        return replace(self, seed=int(state[0]))

    def with_domain(self, domain_end):
        return replace(self, x_range=(float(domain_end), float(domain_end)))

    def to_dict(self):
        return {
            'seed': self.seed,
            'family_mix': dict(self.family_mix),
            'delta': self.delta,
            'x_range': list(self.x_range),
            'positivity_floor': self.positivity_floor,
            'max_rejections': self.max_rejections,
        }


def _pick_family(rng, cfg):
    families = [fam for fam in GENERATOR_FAMILIES if cfg.family_mix.get(fam, 0.0) > 0.0]
    if not families:
        raise DomainError(f"family_mix {cfg.family_mix} leaves no family to draw from")
    weights = np.array([cfg.family_mix[fam] for fam in families], dtype=float)
    return families[rng.choice(len(families), p=weights / weights.sum())]


def _draw_params(rng, family, X, monotone):
    if family == 'polynomial':
        degree = int(rng.integers(0, 4))
        lo = 0.0 if monotone else -1.0
        coeffs = [rng.uniform(0.5, 2.0)] + [rng.uniform(lo, 1.0) / X ** k for k in range(1, degree + 1)]
        return tuple(coeffs), ()
    if family == 'exp_affine':
        if monotone:
            return (rng.uniform(0.2, 2.0), rng.uniform(0.0, 1.0), rng.uniform(0.0, 2.0) / X), ()
        return (rng.uniform(0.2, 2.0), rng.uniform(-1.0, 1.0), rng.uniform(-2.0, 2.0) / X), ()
    if family == 'trig_affine':
        c0 = rng.uniform(0.5, 2.0)
        if monotone:
            # keep c2*tau + c3 inside [-pi/2, pi/2], where sin increases
            c2 = rng.uniform(0.1, 1.0) * math.pi / X
            c3 = -0.5 * math.pi + rng.uniform(0.0, math.pi - c2 * X)
            return (c0, rng.uniform(0.0, 1.0) * c0, c2, c3), ()
        return (c0, rng.uniform(-1.0, 1.0) * c0, rng.uniform(0.0, 8.0) / X, rng.uniform(0.0, 2.0 * math.pi)), ()
    count = int(rng.integers(1, 5))
    knots = np.sort(rng.uniform(0.05 * X, 0.95 * X, size=count))
    levels = rng.uniform(0.1, 2.0, size=count + 1)
    if monotone:
        levels = np.sort(levels)
    return tuple(levels), tuple(knots)


def _draw_function(rng, cfg, X, monotone=False):
    family = _pick_family(rng, cfg)
    for attempt in range(cfg.max_rejections):
        params, knots = _draw_params(rng, family, X, monotone)
        if knots and np.min(np.diff((0.0,) + knots + (X,))) < 1e-3 * X:
            continue
        try:
            spec = FunctionSpec(family, params, X, knots)
        except DomainError:
            continue
        if spec.minimum() >= cfg.positivity_floor:
            if attempt:
                logging.debug(f"{family} draw accepted after {attempt} rejections")
            return spec
    raise GenerationExhausted(
        f"no {family} function above floor {cfg.positivity_floor} after {cfg.max_rejections} attempts (seed={cfg.seed})"
    )


def _domain_end(rng, cfg):
    lo, hi = cfg.x_range
    return lo if lo == hi else float(rng.uniform(lo, hi))


def generate_pair(cfg):
    """Two independent positive functions on a common [0, X]"""
    rng = np.random.default_rng(cfg.seed)
    X = _domain_end(rng, cfg)
    return _draw_function(rng, cfg, X), _draw_function(rng, cfg, X)


def generate_synchronous_pair(cfg):
    """Two nondecreasing positive functions on a common [0, X]"""
    rng = np.random.default_rng(cfg.seed)
    X = _domain_end(rng, cfg)
    return _draw_function(rng, cfg, X, monotone=True), _draw_function(rng, cfg, X, monotone=True)


def proportional_envelope(f, g, delta):
    """v1 = (1-delta) f, v2 = (1+delta) f, w1 = (1-delta) g, w2 = (1+delta) g"""
    if not (0.0 < delta < 1.0):
        raise DomainError(f"delta must lie in (0, 1), got {delta}")
    return Envelope(f.scaled(1.0 - delta), f.scaled(1.0 + delta), g.scaled(1.0 - delta), g.scaled(1.0 + delta))


def _grid_extrema(fn, x):
    end = min(float(x), fn.domain_end)
    breakpoints = tuple(b for b in fn.breakpoints if b < end)
    values = fn(audit_grid(end, BOUNDS_GRID_POINTS, breakpoints))
    return float(np.min(values)), float(np.max(values))


def constant_bounds(f, g, x, slack=0.0):
    """Grid extrema of f and g on [0, x], widened by the relative slack"""
    if not (0.0 <= slack < 1.0):
        raise DomainError(f"slack must lie in [0, 1), got {slack}")
    f_lo, f_hi = _grid_extrema(f, x)
    g_lo, g_hi = _grid_extrema(g, x)
    return ConstantBounds((1.0 - slack) * f_lo, (1.0 + slack) * f_hi, (1.0 - slack) * g_lo, (1.0 + slack) * g_hi)


def remark_step_pair(eps):
    """Half-interval step function on [0, 1] with levels 1-eps and 1+eps, and its exact bounds"""
    eps = float(eps)
    if not (0.0 < eps < 1.0):
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    m, M = 1.0 - eps, 1.0 + eps
    f = FunctionSpec('step', (m, M), 1.0, (0.5,), name=f"remark_step(eps={eps!r})")
    return f, ConstantBounds(m, M, m, M)
