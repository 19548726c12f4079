from .families import (
    BOUNDS_GRID_POINTS,
    GENERATOR_FAMILIES,
    GeneratorConfig,
    constant_bounds,
    generate_pair,
    generate_synchronous_pair,
    proportional_envelope,
    remark_step_pair,
)

__all__ = [
    'BOUNDS_GRID_POINTS',
    'GENERATOR_FAMILIES',
    'GeneratorConfig',
    'constant_bounds',
    'generate_pair',
    'generate_synchronous_pair',
    'proportional_envelope',
    'remark_step_pair',
]
