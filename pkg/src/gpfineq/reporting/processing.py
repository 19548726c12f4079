import pandas as pd

from ..errors import ConfigError
from ..inequalities import Status

STATUS_COLUMNS = [status.value for status in Status]


class ReportProcessor:
    """Filtering and aggregation of report DataFrames"""

    @staticmethod
    def apply_filters(df, active_filters):
        """Apply active filters to the report frame.

        active_filters maps a column to {'type': 'one_of', 'values': [...]} or {'type': 'less_than', 'value': v}
        """
        if not active_filters:
            return df

        mask = pd.Series(True, index=df.index)

        for col, filter_info in active_filters.items():
            filter_type = filter_info['type']

            if filter_type == 'one_of':
                mask &= df[col].astype(str).isin([str(v) for v in filter_info['values']])

            elif filter_type == 'less_than':
                # NaN margins (Skipped) never pass
                mask &= (pd.to_numeric(df[col], errors='coerce') < filter_info['value'])

            else:
                raise ConfigError(f"unknown filter type {filter_type!r} for column {col!r}")

        return df[mask]

    @staticmethod
    def summary_table(df):
        """One row per inequality: total, counts per status and the worst relative margin"""
        columns = ['inequality_id', 'total'] + STATUS_COLUMNS + ['worst_relative_margin']
        if not len(df):
            return pd.DataFrame(columns=columns)
        counts = pd.crosstab(df['inequality_id'], df['status']).reindex(columns=STATUS_COLUMNS, fill_value=0)
        table = counts.copy()
        table.insert(0, 'total', counts.sum(axis=1))
        table['worst_relative_margin'] = df.groupby('inequality_id')['relative_margin'].min()
        # keep first-seen order of inequalities
        order = list(dict.fromkeys(df['inequality_id']))
        return table.reindex(order).reset_index()[columns]
