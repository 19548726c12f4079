from .quadrature import (
    DEFAULT_QUAD,
    QuadConfig,
    QuadratureResult,
    graded_panels,
    integrate_weighted,
    jacobi_rule,
    legendre_rule,
    panel_edges,
)
from .gpf import (
    FractionalParams,
    gpf_left,
    gpf_of_one,
    gpf_of_one_closed,
    gpf_of_one_series,
    gpf_right,
    riemann_liouville_left,
)

__all__ = [
    'DEFAULT_QUAD',
    'FractionalParams',
    'QuadConfig',
    'QuadratureResult',
    'gpf_left',
    'gpf_of_one',
    'gpf_of_one_closed',
    'gpf_of_one_series',
    'gpf_right',
    'graded_panels',
    'integrate_weighted',
    'jacobi_rule',
    'legendre_rule',
    'panel_edges',
    'riemann_liouville_left',
]
