"""Gauss-Jacobi panel quadrature for integrals of u**(alpha-1) * h(u) over [0, L].

The first panel carries the weight u**(alpha-1) exactly through a Gauss-Jacobi
rule. Panels introduced by breakpoints of h use Gauss-Legendre with the
weight folded into the integrand; those that start close to u = 0 are graded
geometrically toward it. Node counts double per panel until two consecutive
sums agree.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from ..errors import DomainError, NonConvergence


@dataclass(frozen=True)
class QuadConfig:
    min_nodes: int = 64
    max_nodes: int = 4096
    rel_tol: float = 1e-10
    abs_floor: float = 1e-300

    def __post_init__(self):
        if self.min_nodes < 1 or self.max_nodes < 2 * self.min_nodes:
            raise DomainError(
                f"need 1 <= min_nodes and max_nodes >= 2*min_nodes, got {self.min_nodes}, {self.max_nodes}"
            )
        if not (0.0 < self.rel_tol < 1.0):
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if not self.abs_floor > 0.0:
            raise DomainError(f"abs_floor must be positive, got {self.abs_floor}")


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    nodes_used: int

    def __post_init__(self):
        if not self.abs_error_estimate >= 0.0:
            raise DomainError(f"error estimate must be >= 0, got {self.abs_error_estimate}")
        if self.nodes_used < 1:
            raise DomainError(f"nodes_used must be >= 1, got {self.nodes_used}")

    def scaled(self, factor):
        return QuadratureResult(self.value * factor, self.abs_error_estimate * abs(factor), self.nodes_used)

    def to_dict(self):
        return {
            'value': self.value,
            'abs_error_estimate': self.abs_error_estimate,
            'nodes_used': self.nodes_used,
        }


@lru_cache(maxsize=512)
def jacobi_rule(n, alpha):
    """Nodes s in (0, 1) and weights w with sum w*h(s) ~ integral of s**(alpha-1) h(s) over [0, 1]"""
    t, w = roots_jacobi(n, 0.0, alpha - 1.0)
    nodes = 0.5 * (1.0 + t)
    weights = w * 0.5 ** alpha
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@lru_cache(maxsize=64)
def legendre_rule(n):
    """Gauss-Legendre nodes and weights on [0, 1]"""
    t, w = np.polynomial.legendre.leggauss(n)
    nodes = 0.5 * (1.0 + t)
    weights = 0.5 * w
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panel_edges(length, breakpoints=()):
    """Sorted panel boundaries 0 = e0 < ... < ek = length; near-duplicate cuts merge"""
    gap = 1e-13 * length
    edges = [0.0]
    for b in sorted(float(b) for b in breakpoints):
        if gap < b < length - gap and b - edges[-1] > gap:
            edges.append(b)
    edges.append(float(length))
    return edges


def graded_panels(edges):
    """Gauss-Legendre panels after the first one.

    A panel [lo, hi] with hi > 2*lo sits close to the singular point u = 0
    relative to its width; it is cut at lo, 2*lo, 4*lo, ... so every piece
    is at least its own width away from u = 0.
    """
    panels = []
    for lo, hi in zip(edges[1:-1], edges[2:]):
        while hi > 2.0 * lo:
            panels.append((lo, 2.0 * lo))
            lo *= 2.0
        panels.append((lo, hi))
    return panels


def _panel_sum(h, alpha, first, panels, n):
    s, w = jacobi_rule(n, alpha)
    total = first ** alpha * np.dot(w, h(first * s))
    if panels:
        s, w = legendre_rule(n)
        for lo, hi in panels:
            u = lo + (hi - lo) * s
            total += (hi - lo) * np.dot(w, u ** (alpha - 1.0) * h(u))
    return float(total)


def integrate_weighted(h, alpha, length, breakpoints=(), cfg=DEFAULT_QUAD):
    """Integral of u**(alpha-1) * h(u) over [0, length] with panel doubling"""
    if not (math.isfinite(length) and length > 0.0):
        raise DomainError(f"integration length must be positive, got {length!r}")
    edges = panel_edges(length, breakpoints)
    first = edges[1]
    panels = graded_panels(edges)
    n = cfg.min_nodes
    previous = _panel_sum(h, alpha, first, panels, n)
    error = math.inf
    while 2 * n <= cfg.max_nodes:
        n *= 2
        current = _panel_sum(h, alpha, first, panels, n)
        error = abs(current - previous)
        if error <= cfg.rel_tol * max(abs(current), cfg.abs_floor):
            return QuadratureResult(current, error, n * (1 + len(panels)))
        logging.debug(f"quadrature alpha={alpha:g} length={length:g}: {n} nodes/panel, error {error:.3e}")
        previous = current
    raise NonConvergence(
        f"quadrature did not reach rel_tol={cfg.rel_tol:g} with {cfg.max_nodes} nodes per panel "
        f"(alpha={alpha:g}, length={length:g}, last error {error:.3e})",
        value=previous,
        error_estimate=error,
    )
