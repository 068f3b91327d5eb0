"""Adaptive quadrature plumbing shared by the kernel evaluators.

Thin policy layer over scipy's QUADPACK wrapper: a tolerance/limit
config, a value-with-error result type, and a single call point that
turns a failed error target into an exception instead of a console
warning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from scipy.integrate import quad

__all__ = [
    "QuadratureConfig",
    "KernelValue",
    "NonConvergenceError",
    "DEFAULT_CONFIG",
    "adaptive_quad",
]

# QUADPACK rejects relative tolerances below ~50 machine epsilons.
_MIN_REL = 1.2e-14


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and subdivision budget for the adaptive integrators.

    rel_tol and abs_tol are combined as max(abs_tol, rel_tol * |value|);
    an integral whose error estimate exceeds that target raises
    NonConvergenceError rather than returning silently degraded output.
    """

    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class KernelValue:
    """Numerical kernel value together with its error estimate."""

    value: float
    err_estimate: float


class NonConvergenceError(RuntimeError):
    """Raised when an integral cannot meet the requested tolerance.

    Carries the best value and error estimate seen so callers can
    report them.
    """

    def __init__(self, message: str, value: float, err_estimate: float):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate


def adaptive_quad(
    integrand: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    *,
    points: Sequence[float] | None = None,
    rel_scale: float = 1.0,
    abs_tol: float | None = None,
) -> tuple[float, float]:
    """Integrate integrand over (lo, hi) under the config's error policy.

    points marks interior breakpoints (ignored for infinite ranges, as
    in QUADPACK).  rel_scale tightens the relative target for inner
    integrals of nested quadratures.  abs_tol overrides the config's
    absolute floor; inner integrals pass 0.0 to force a pure relative
    target.  Returns (value, err_estimate); raises NonConvergenceError
    if the estimate misses max(abs target, rel target * |value|).
    """
    eps_rel = max(cfg.rel_tol * rel_scale, _MIN_REL)
    eps_abs = cfg.abs_tol if abs_tol is None else abs_tol
    kwargs = {}
    # breakpoints need a few subdivisions of headroom or QUADPACK
    # rejects the call outright; with a tiny budget the hint is dropped
    # and the error policy below reports the failure instead
    if (
        points is not None
        and cfg.max_subdivisions >= 10
        and not math.isinf(lo)
        and not math.isinf(hi)
    ):
        kwargs["points"] = list(points)
    out = quad(
        integrand,
        lo,
        hi,
        epsabs=eps_abs,
        epsrel=eps_rel,
        limit=cfg.max_subdivisions,
        full_output=1,
        **kwargs,
    )
    value, err = out[0], out[1]
    target = max(eps_abs, eps_rel * abs(value))
    if err > target:
        raise NonConvergenceError(
            f"integral error estimate {err:.3e} exceeds target {target:.3e}",
            value,
            err,
        )
    return value, err
