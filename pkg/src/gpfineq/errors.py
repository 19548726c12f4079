class GPFError(Exception):
    """Base class for errors raised by gpfineq"""


class DomainError(GPFError, ValueError):
    """Argument outside the documented domain of an operation"""


class NonConvergence(GPFError, ArithmeticError):
    """Quadrature or series evaluation did not reach its tolerance"""

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class GenerationExhausted(GPFError, RuntimeError):
    """Rejection sampling ran out of attempts"""


class ConfigError(GPFError, ValueError):
    """Invalid configuration file, descriptor or command line"""
