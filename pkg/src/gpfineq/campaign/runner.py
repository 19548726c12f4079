"""Cross-product verification campaigns over (inequality, grid cell, case)."""
import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..errors import GPFError
from ..generators import constant_bounds, generate_pair, generate_synchronous_pair, proportional_envelope
from ..inequalities import CHECKS, Status, failed_report
from ..operators import FractionalParams
from ..reporting import write_reports


@dataclass(frozen=True)
class Case:
    """One evaluation; case_index is its position in the canonical enumeration"""
    case_index: int
    inequality_id: str
    sample: int
    x: float
    alpha: float = None
    p1: float = None
    beta: float = None
    p2: float = None


def enumerate_cases(cfg):
    """Cases in canonical order: inequality, then alpha, beta, p1, p2, x, then sample"""
    cases = []
    for inequality_id in cfg.inequalities:
        kind = CHECKS[inequality_id].kind
        if kind == 'classical':
            cells = [dict(x=x) for x in cfg.x_grid]
        elif kind == 'single':
            cells = [dict(alpha=a, p1=p, x=x) for a, p, x in itertools.product(cfg.alpha_grid, cfg.p1_grid, cfg.x_grid)]
        else:
            cells = [
                dict(alpha=a, beta=b, p1=p1, p2=p2, x=x)
                for a, b, p1, p2, x in itertools.product(cfg.alpha_grid, cfg.beta_grid, cfg.p1_grid, cfg.p2_grid, cfg.x_grid)
            ]
        for cell in cells:
            for sample in range(cfg.cases_per_cell):
                cases.append(Case(len(cases), inequality_id, sample, **cell))
    return cases


def _case_params(case, seed):
    record = {'x': case.x, 'sample': case.sample, 'seed': seed}
    for key in ('alpha', 'p1', 'beta', 'p2'):
        value = getattr(case, key)
        if value is not None:
            record[key] = value
    return record


def _evaluate_case(case, cfg):
    """Report for one case; failures inside the case are recorded, not raised"""
    gen = cfg.generator.derive(case.case_index).with_domain(case.x)
    spec = CHECKS[case.inequality_id]
    extra = {'sample': case.sample, 'seed': gen.seed}
    try:
        if case.inequality_id == 'chebyshev':
            f, g = generate_synchronous_pair(gen)
        else:
            f, g = generate_pair(gen)

        if spec.inputs == 'pair':
            inputs = ()
        elif spec.inputs == 'bounds':
            bounds = constant_bounds(f, g, case.x, cfg.bounds_slack)
            if not bounds.audit(f, g, case.x):
                return failed_report(case.inequality_id, _case_params(case, gen.seed), 'constant bounds audit failed') \
                    .with_case(case.case_index)
            inputs = (bounds,)
        else:
            env = proportional_envelope(f, g, gen.delta)
            if not env.audit(f, g, case.x):
                return failed_report(case.inequality_id, _case_params(case, gen.seed), 'envelope audit failed') \
                    .with_case(case.case_index)
            inputs = (env,)

        if spec.kind == 'classical':
            report = spec.fn(f, g, *inputs, 0.0, case.x, tol=cfg.tol)
        elif spec.kind == 'single':
            pa = FractionalParams(case.alpha, case.p1)
            report = spec.fn(pa, f, g, *inputs, case.x, tol=cfg.tol, quad_cfg=cfg.quadrature)
        else:
            pa = FractionalParams(case.alpha, case.p1)
            pb = FractionalParams(case.beta, case.p2)
            report = spec.fn(pa, pb, f, g, *inputs, case.x, tol=cfg.tol, quad_cfg=cfg.quadrature)
    except GPFError as exc:
        logging.warning(f"case {case.case_index} ({case.inequality_id}) failed: {exc}")
        return failed_report(case.inequality_id, _case_params(case, gen.seed), f"{type(exc).__name__}: {exc}") \
            .with_case(case.case_index)
    return report.with_case(case.case_index, **extra)


def _evaluate_many(cases, cfg):
    return [_evaluate_case(case, cfg) for case in cases]


def evaluate_cases(cases, cfg):
    """Reports in case_index order, serially or on a process pool"""
    if cfg.workers == 1 or len(cases) < 2:
        reports = _evaluate_many(cases, cfg)
    else:
        # contiguous chunks keep per-process rule caches warm
        chunk = max(1, math.ceil(len(cases) / (4 * cfg.workers)))
        batches = [cases[i:i + chunk] for i in range(0, len(cases), chunk)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            reports = [r for batch in executor.map(_evaluate_many, batches, itertools.repeat(cfg)) for r in batch]
    return sorted(reports, key=lambda report: report.case_index)


@dataclass(frozen=True)
class CampaignSummary:
    total: int
    counts: dict
    worst_relative_margin: float
    worst_case: dict
    wall_time: float
    output: str = None
    per_inequality: dict = field(default_factory=dict)

    @property
    def violated(self):
        return self.counts.get(Status.VIOLATED.value, 0) > 0

    def to_dict(self):
        worst = self.worst_relative_margin
        return {
            'total': self.total,
            'counts': dict(self.counts),
            'worst_relative_margin': worst if worst is not None and math.isfinite(worst) else None,
            'worst_case': self.worst_case,
            'wall_time': self.wall_time,
            'output': self.output,
            'per_inequality': self.per_inequality,
        }


def summarize_reports(reports, wall_time=0.0, output=None):
    counts = {status.value: 0 for status in Status}
    per_inequality = {}
    worst = None
    for report in reports:
        counts[report.status.value] += 1
        tally = per_inequality.setdefault(report.inequality_id, {})
        tally[report.status.value] = tally.get(report.status.value, 0) + 1
        if math.isfinite(report.relative_margin) and (worst is None or report.relative_margin < worst.relative_margin):
            worst = report
    return CampaignSummary(
        total=len(reports),
        counts=counts,
        worst_relative_margin=None if worst is None else worst.relative_margin,
        worst_case=None if worst is None else worst.to_dict(),
        wall_time=wall_time,
        output=output,
        per_inequality=per_inequality,
    )


def run_campaign(cfg, write=True):
    """Evaluate every case of cfg, write the report file and return (summary, reports)"""
    started = time.perf_counter()
    cases = enumerate_cases(cfg)
    logging.info(f"Campaign: {len(cases)} cases over {len(cfg.inequalities)} inequalities on {cfg.workers} worker(s)")
    reports = evaluate_cases(cases, cfg)
    for inequality_id, group in itertools.groupby(reports, key=lambda r: r.inequality_id):
        logging.debug(f"{inequality_id}: {sum(1 for _ in group)} reports")
    if write:
        write_reports(reports, cfg.output, cfg.format)
    summary = summarize_reports(reports, time.perf_counter() - started, cfg.output if write else None)
    logging.info(f"Campaign finished in {summary.wall_time:.2f}s: {summary.counts}")
    return summary, reports
