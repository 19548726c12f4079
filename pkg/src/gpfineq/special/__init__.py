from .functions import (
    GAMMA_ARG_MAX,
    SpecialFnAccuracy,
    gamma,
    lower_incomplete_gamma,
    regularized_lower_gamma,
)

__all__ = [
    'GAMMA_ARG_MAX',
    'SpecialFnAccuracy',
    'gamma',
    'lower_incomplete_gamma',
    'regularized_lower_gamma',
]
