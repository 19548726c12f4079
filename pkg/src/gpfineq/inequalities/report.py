import enum
import math
from dataclasses import asdict, dataclass, field

DEFAULT_TOL = 1e-8
# relative margins in [-WITHIN_TOLERANCE_BAND, -tol) flag quadrature trouble rather than a counterexample
WITHIN_TOLERANCE_BAND = 1e-6
EPS_DEN = 1e-12


class Status(str, enum.Enum):
    HOLDS = 'Holds'
    VIOLATED_WITHIN_TOLERANCE = 'ViolatedWithinTolerance'
    VIOLATED = 'Violated'
    ILL_CONDITIONED = 'IllConditioned'
    SKIPPED = 'Skipped'

    def __str__(self):
        return self.value


INEQUALITY_IDS = (
    'chebyshev',
    'theorem1',
    'polya_szego',
    'amgm',
    'lemma1',
    'corollary1',
    'lemma2',
    'corollary2',
    'lemma3',
    'theorem2',
    'theorem3',
    'corollary3',
)

EXTRA_INEQUALITY_IDS = ('lemma3_ratio',)


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def _none_to_nan(value):
    return math.nan if value is None else float(value)


@dataclass(frozen=True)
class InequalityReport:
    inequality_id: str
    params: dict
    lhs: float
    rhs: float
    margin: float
    relative_margin: float
    status: Status
    detail: str = None
    case_index: int = None
    extras: dict = field(default_factory=dict)

    def to_dict(self):
        record = asdict(self)
        record['status'] = self.status.value
        for key in ('lhs', 'rhs', 'margin', 'relative_margin'):
            record[key] = _finite_or_none(record[key])
        record['params'] = {k: (_finite_or_none(v) if isinstance(v, float) else v) for k, v in self.params.items()}
        record['extras'] = {k: _finite_or_none(v) for k, v in self.extras.items()}
        return record

    @classmethod
    def from_dict(cls, record):
        return cls(
            inequality_id=record['inequality_id'],
            params=dict(record['params']),
            lhs=_none_to_nan(record['lhs']),
            rhs=_none_to_nan(record['rhs']),
            margin=_none_to_nan(record['margin']),
            relative_margin=_none_to_nan(record['relative_margin']),
            status=Status(record['status']),
            detail=record.get('detail'),
            case_index=record.get('case_index'),
            extras={k: _none_to_nan(v) for k, v in (record.get('extras') or {}).items()},
        )

    def with_case(self, case_index, **params):
        merged = dict(self.params)
        merged.update(params)
        return InequalityReport(
            self.inequality_id, merged, self.lhs, self.rhs, self.margin, self.relative_margin,
            self.status, self.detail, case_index, self.extras,
        )


def relative_margin(lhs, rhs):
    return (rhs - lhs) / max(abs(lhs), abs(rhs), 1.0)


def classify(rel_margin, tol=DEFAULT_TOL, denominators=(), eps_den=EPS_DEN):
    if any(not abs(d) >= eps_den for d in denominators):
        return Status.ILL_CONDITIONED
    if not math.isfinite(rel_margin):
        return Status.ILL_CONDITIONED
    if rel_margin >= -tol:
        return Status.HOLDS
    if rel_margin >= -max(WITHIN_TOLERANCE_BAND, tol):
        return Status.VIOLATED_WITHIN_TOLERANCE
    return Status.VIOLATED


def make_report(inequality_id, params, lhs, rhs, tol=DEFAULT_TOL, denominators=(), detail=None, extras=None):
    """Build a report for the claim lhs <= rhs"""
    lhs = float(lhs)
    rhs = float(rhs)
    margin = rhs - lhs
    rel = relative_margin(lhs, rhs)
    status = classify(rel, tol, denominators)
    if status is Status.ILL_CONDITIONED and detail is None:
        detail = 'denominator below eps_den'
    return InequalityReport(inequality_id, dict(params), lhs, rhs, margin, rel, status, detail, None, dict(extras or {}))


def skipped_report(inequality_id, params, detail):
    nan = math.nan
    return InequalityReport(inequality_id, dict(params), nan, nan, nan, nan, Status.SKIPPED, detail)


def failed_report(inequality_id, params, detail):
    nan = math.nan
    return InequalityReport(inequality_id, dict(params), nan, nan, nan, nan, Status.ILL_CONDITIONED, detail)
