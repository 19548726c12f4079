import math
import numbers

import pandas as pd


class LatexFormatter:
    """Renders a summary table as a LaTeX tabular"""

    def __init__(self, config_manager):
        self.config = config_manager
        self.style = config_manager.latex

    @property
    def table_style(self):
        return self.style.get('table_style', 'booktabs')

    def generate_latex_table(self, df, columns=None, caption="Numerical verification of the GPF inequalities"):
        """Generate a LaTeX table from the summary frame; the worst margin is underlined if configured"""
        cols = list(columns or df.columns)
        if not cols:
            return "Please select at least one column"

        worst = None
        if self.style.get('underline_worst', False) and 'worst_relative_margin' in cols and len(df):
            margins = pd.to_numeric(df['worst_relative_margin'], errors='coerce')
            if margins.notna().any():
                worst = float(margins.min())

        latex = self._build_table_header(len(cols), caption)
        latex += self._build_table_headers([self.config.get_display_name(col) for col in cols])
        latex += self._build_table_rows(df, cols, worst)
        latex += self._build_table_footer()
        return latex

    def _build_table_header(self, num_cols, caption):
        col_spec = "l" + "r" * (num_cols - 1)
        latex = "\\begin{table}[t]\n\\centering\n"
        latex += f"\\caption{{{caption}}}\n"
        latex += f"\\begin{{tabular}}{{{col_spec}}}\n"
        if self.table_style == 'booktabs':
            latex += "\\toprule\n"
        else:
            latex += "\\hline\n"
        return latex

    def _build_table_headers(self, display_names):
        headers_str = " & ".join([f"\\textbf{{{header}}}" for header in display_names])
        if self.table_style == 'booktabs':
            return f"{headers_str} \\\\\n\\midrule\n"
        return f"{headers_str} \\\\\n\\hline\n"

    def _build_table_rows(self, df, cols, worst):
        latex_rows = ""
        for _, row in df[cols].iterrows():
            cells = [self._format_cell_value(row[col], col, i == 0, worst) for i, col in enumerate(cols)]
            latex_rows += " & ".join(cells) + " \\\\\n"
        return latex_rows

    def _format_cell_value(self, value, col, is_first_column, worst):
        if is_first_column:
            return "\\texttt{" + str(value).replace("_", "\\_") + "}"
        if isinstance(value, numbers.Integral) and not isinstance(value, bool):
            return f"${int(value)}$"
        if isinstance(value, numbers.Real) and not isinstance(value, bool):
            value = float(value)
            if not math.isfinite(value):
                return "--"
            places = self.style.get('decimal_places', 3)
            formatted_value = f"{value:.{places}e}" if col == 'worst_relative_margin' else f"{value:.{places}f}"
            if worst is not None and col == 'worst_relative_margin' and value == worst:
                formatted_value = f"\\underline{{{formatted_value}}}"
            return f"${formatted_value}$"
        return str(value)

    def _build_table_footer(self):
        if self.table_style == 'booktabs':
            return "\\bottomrule\n\\end{tabular}\n\\end{table}"
        return "\\hline\n\\end{tabular}\n\\end{table}"
