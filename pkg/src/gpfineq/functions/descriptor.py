"""Compact "family:params" strings for functions given on the command line.

    const:c
    poly:c0,c1,...            ascending powers
    exp:c0,c1,c2              c0 + c1*exp(c2*t)
    trig:c0,c1,c2,c3          c0 + c1*sin(c2*t + c3)
    step:b1,...@l0,l1,...     breakpoints @ levels
    grid:t0,...@y0,...        abscissae @ values, linear interpolation
"""
from ..errors import ConfigError, DomainError
from .spec import FunctionSpec

_PREFIXES = {
    'const': 'polynomial',
    'poly': 'polynomial',
    'exp': 'exp_affine',
    'trig': 'trig_affine',
    'step': 'step',
    'grid': 'grid',
}

_NAMES = {
    'polynomial': 'poly',
    'exp_affine': 'exp',
    'trig_affine': 'trig',
    'step': 'step',
    'grid': 'grid',
}


def _numbers(text, descriptor):
    text = text.strip().replace('−', '-')
    if not text:
        raise ConfigError(f"empty parameter list in descriptor {descriptor!r}")
    try:
        return tuple(float(part) for part in text.split(','))
    except ValueError as e:
        raise ConfigError(f"bad number in descriptor {descriptor!r}: {e}") from e


def parse_descriptor(descriptor, domain_end, strictly_positive=True):
    """Build a FunctionSpec on [0, domain_end] from its descriptor string.

    strictly_positive=False admits functions that touch zero, such as poly:0,1.
    """
    if ':' not in descriptor:
        raise ConfigError(f"descriptor {descriptor!r} lacks a 'family:' prefix")
    prefix, _, body = descriptor.partition(':')
    prefix = prefix.strip().lower()
    if prefix not in _PREFIXES:
        raise ConfigError(f"unknown function family {prefix!r} in {descriptor!r}; expected one of {sorted(_PREFIXES)}")
    family = _PREFIXES[prefix]

    knots = ()
    if family in ('step', 'grid'):
        if '@' not in body:
            raise ConfigError(f"{prefix} descriptor needs 'knots@values', got {descriptor!r}")
        knot_text, _, value_text = body.partition('@')
        knots = _numbers(knot_text, descriptor) if knot_text.strip() else ()
        params = _numbers(value_text, descriptor)
    else:
        params = _numbers(body, descriptor)
        if prefix == 'const' and len(params) != 1:
            raise ConfigError(f"const descriptor takes exactly one value, got {descriptor!r}")

    try:
        return FunctionSpec(family, params, domain_end, knots, strictly_positive=strictly_positive)
    except DomainError as e:
        raise ConfigError(f"invalid function {descriptor!r}: {e}") from e


def describe(spec):
    joined = ','.join(repr(p) for p in spec.params)
    prefix = _NAMES[spec.family]
    if spec.family in ('step', 'grid'):
        return f"{prefix}:{','.join(repr(k) for k in spec.knots)}@{joined}"
    if spec.family == 'polynomial' and len(spec.params) == 1:
        return f"const:{joined}"
    return f"{prefix}:{joined}"
