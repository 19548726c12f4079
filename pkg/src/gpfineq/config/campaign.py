import math
from dataclasses import asdict, dataclass, field, replace

from ..errors import ConfigError, DomainError
from ..generators import GeneratorConfig
from ..inequalities import CHECKS, DEFAULT_TOL
from ..operators import DEFAULT_QUAD, FractionalParams, QuadConfig

REPORT_FORMATS = ('jsonl', 'csv')


@dataclass(frozen=True)
class CampaignConfig:
    """Validated, immutable description of one verification campaign"""
    inequalities: tuple
    alpha_grid: tuple
    beta_grid: tuple
    p1_grid: tuple
    p2_grid: tuple
    x_grid: tuple
    cases_per_cell: int = 1
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    tol: float = DEFAULT_TOL
    bounds_slack: float = 1e-3
    quadrature: QuadConfig = DEFAULT_QUAD
    workers: int = 1
    output: str = 'reports/campaign.jsonl'
    format: str = 'jsonl'

    def __post_init__(self):
        inequalities = tuple(self.inequalities)
        if not inequalities:
            raise ConfigError("inequalities: at least one inequality id is required")
        unknown = [i for i in inequalities if i not in CHECKS]
        if unknown:
            raise ConfigError(f"inequalities: unknown ids {unknown}; expected a subset of {sorted(CHECKS)}")
        object.__setattr__(self, 'inequalities', inequalities)

        for key in ('alpha_grid', 'beta_grid', 'p1_grid', 'p2_grid', 'x_grid'):
            object.__setattr__(self, key, _grid(key, getattr(self, key)))
        for key in ('alpha_grid', 'beta_grid'):
            for alpha in getattr(self, key):
                _fractional(key, alpha, 1.0)
        for key in ('p1_grid', 'p2_grid'):
            for p in getattr(self, key):
                _fractional(key, 1.0, p)
        if any(x <= 0.0 for x in self.x_grid):
            raise ConfigError(f"x_grid: values must be > 0, got {list(self.x_grid)}")

        if not _is_int(self.cases_per_cell) or self.cases_per_cell < 1:
            raise ConfigError(f"cases_per_cell: must be an integer >= 1, got {self.cases_per_cell!r}")
        if not _is_int(self.workers) or self.workers < 1:
            raise ConfigError(f"workers: must be an integer >= 1, got {self.workers!r}")
        if not (isinstance(self.tol, (int, float)) and 0.0 <= self.tol < 1.0):
            raise ConfigError(f"tol: must lie in [0, 1), got {self.tol!r}")
        if not (isinstance(self.bounds_slack, (int, float)) and 0.0 <= self.bounds_slack < 1.0):
            raise ConfigError(f"bounds_slack: must lie in [0, 1), got {self.bounds_slack!r}")
        if self.format not in REPORT_FORMATS:
            raise ConfigError(f"format: must be one of {REPORT_FORMATS}, got {self.format!r}")
        if not isinstance(self.output, str) or not self.output:
            raise ConfigError(f"output: must be a non-empty path, got {self.output!r}")
        object.__setattr__(self, 'tol', float(self.tol))
        object.__setattr__(self, 'bounds_slack', float(self.bounds_slack))

    def with_overrides(self, **overrides):
        """Copy with non-None overrides applied; `seed` replaces the generator seed"""
        overrides = {k: v for k, v in overrides.items() if v is not None}
        seed = overrides.pop('seed', None)
        if seed is not None:
            try:
                overrides['generator'] = replace(self.generator, seed=seed)
            except DomainError as exc:
                raise ConfigError(f"seed: {exc}") from exc
        return replace(self, **overrides)

    def to_dict(self):
        return {
            'inequalities': list(self.inequalities),
            'alpha_grid': list(self.alpha_grid),
            'beta_grid': list(self.beta_grid),
            'p1_grid': list(self.p1_grid),
            'p2_grid': list(self.p2_grid),
            'x_grid': list(self.x_grid),
            'cases_per_cell': self.cases_per_cell,
            'generator': self.generator.to_dict(),
            'tol': self.tol,
            'bounds_slack': self.bounds_slack,
            'quadrature': asdict(self.quadrature),
            'workers': self.workers,
            'output': self.output,
            'format': self.format,
        }


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _grid(key, values):
    if isinstance(values, (str, bytes)) or not hasattr(values, '__iter__'):
        raise ConfigError(f"{key}: expected a list of numbers, got {values!r}")
    values = tuple(values)
    if not values:
        raise ConfigError(f"{key}: grid must not be empty")
    try:
        grid = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{key}: expected numbers, got {list(values)}") from exc
    if not all(math.isfinite(v) for v in grid):
        raise ConfigError(f"{key}: values must be finite, got {list(values)}")
    return grid


def _fractional(key, alpha, p):
    try:
        FractionalParams(alpha, p)
    except DomainError as exc:
        raise ConfigError(f"{key}: {exc}") from exc
