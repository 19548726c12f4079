from .report import (
    DEFAULT_TOL,
    EPS_DEN,
    EXTRA_INEQUALITY_IDS,
    INEQUALITY_IDS,
    WITHIN_TOLERANCE_BAND,
    InequalityReport,
    Status,
    classify,
    failed_report,
    make_report,
    relative_margin,
    skipped_report,
)
from .checks import (
    CHECKS,
    CheckSpec,
    amgm_intermediate_check,
    chebyshev_check,
    chebyshev_functional,
    corollary1_check,
    corollary2_check,
    corollary3_check,
    integral,
    is_synchronous,
    lemma1_check,
    lemma2_check,
    lemma3_check,
    lemma3_ratio_check,
    polya_szego_classic_check,
    sharpness_scan,
    theorem1_check,
    theorem2_check,
    theorem3_check,
)

__all__ = [
    'CHECKS',
    'DEFAULT_TOL',
    'EPS_DEN',
    'EXTRA_INEQUALITY_IDS',
    'INEQUALITY_IDS',
    'WITHIN_TOLERANCE_BAND',
    'CheckSpec',
    'InequalityReport',
    'Status',
    'amgm_intermediate_check',
    'chebyshev_check',
    'chebyshev_functional',
    'classify',
    'corollary1_check',
    'corollary2_check',
    'corollary3_check',
    'failed_report',
    'integral',
    'is_synchronous',
    'lemma1_check',
    'lemma2_check',
    'lemma3_check',
    'lemma3_ratio_check',
    'make_report',
    'polya_szego_classic_check',
    'relative_margin',
    'sharpness_scan',
    'skipped_report',
    'theorem1_check',
    'theorem2_check',
    'theorem3_check',
]
