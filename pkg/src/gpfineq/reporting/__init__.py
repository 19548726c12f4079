from .io import (
    CSV_FLOAT_FORMAT,
    dumps_report,
    load_frame,
    read_jsonl,
    reports_frame,
    write_csv,
    write_jsonl,
    write_reports,
)
from .processing import STATUS_COLUMNS, ReportProcessor
from .latex import LatexFormatter

__all__ = [
    'CSV_FLOAT_FORMAT',
    'LatexFormatter',
    'ReportProcessor',
    'STATUS_COLUMNS',
    'dumps_report',
    'load_frame',
    'read_jsonl',
    'reports_frame',
    'write_csv',
    'write_jsonl',
    'write_reports',
]
