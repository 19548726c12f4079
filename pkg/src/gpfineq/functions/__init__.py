from .spec import AUDIT_POINTS, FAMILIES, DerivedFunction, FunctionSpec, audit_grid, constant
from .descriptor import describe, parse_descriptor
from .bounds import ConstantBounds, Envelope

__all__ = [
    'AUDIT_POINTS',
    'FAMILIES',
    'ConstantBounds',
    'DerivedFunction',
    'Envelope',
    'FunctionSpec',
    'audit_grid',
    'constant',
    'describe',
    'parse_descriptor',
]
