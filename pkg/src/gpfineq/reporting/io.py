"""JSON Lines and CSV persistence of inequality reports."""
import json
import logging
import os

import pandas as pd

from ..errors import ConfigError
from ..inequalities import InequalityReport

CSV_FLOAT_FORMAT = '%.17g'


def _ensure_parent(path):
    parent = os.path.dirname(os.path.abspath(path))
    try:
        os.makedirs(parent, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"Cannot create output directory {parent}: {exc}") from exc


def dumps_report(report):
    """One JSON line; floats use repr, non-finite values are written as null"""
    return json.dumps(report.to_dict(), allow_nan=False)


def write_jsonl(reports, path):
    _ensure_parent(path)
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            for report in reports:
                f.write(dumps_report(report) + '\n')
    except OSError as exc:
        raise ConfigError(f"Cannot write report file {path}: {exc}") from exc


def read_jsonl(path):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            lines = [line for line in f if line.strip()]
    except OSError as exc:
        raise ConfigError(f"Cannot read report file {path}: {exc}") from exc
    try:
        return [InequalityReport.from_dict(json.loads(line)) for line in lines]
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise ConfigError(f"Malformed report file {path}: {exc}") from exc


def reports_frame(reports):
    """Flat DataFrame with params.* and extras.* columns"""
    columns = ['case_index', 'inequality_id', 'status', 'lhs', 'rhs', 'margin', 'relative_margin', 'detail']
    if not reports:
        return pd.DataFrame(columns=columns)
    frame = pd.json_normalize([report.to_dict() for report in reports])
    rest = sorted(c for c in frame.columns if c not in columns)
    return frame[columns + rest]


def write_csv(reports, path):
    _ensure_parent(path)
    try:
        reports_frame(reports).to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
    except OSError as exc:
        raise ConfigError(f"Cannot write report file {path}: {exc}") from exc


def write_reports(reports, path, fmt='jsonl'):
    if fmt == 'jsonl':
        write_jsonl(reports, path)
    elif fmt == 'csv':
        write_csv(reports, path)
    else:
        raise ConfigError(f"format: must be 'jsonl' or 'csv', got {fmt!r}")
    logging.info(f"Wrote {len(reports)} reports to {path}")


def load_frame(path):
    """Report file (JSON Lines, or CSV by suffix) as a DataFrame"""
    if path.lower().endswith('.csv'):
        try:
            return pd.read_csv(path, float_precision='round_trip')
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
            raise ConfigError(f"Cannot read report file {path}: {exc}") from exc
    return reports_frame(read_jsonl(path))
