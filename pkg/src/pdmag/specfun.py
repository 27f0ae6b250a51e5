"""Orthogonal-polynomial evaluation and quadrature normalization.

Both families are evaluated by their forward three-term recurrences, which
are stable for the parameter ranges used here (parameters > -1, degrees of
a few tens at most).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import DomainError, NormalizationError
from .grids import RadialFunction

__all__ = ["PolynomialSpec", "laguerre", "jacobi", "normalize"]


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"polynomial degree must be a non-negative integer, got {n!r}")


def laguerre(n: int, a: float, x):
    """Generalized Laguerre polynomial L_n^a(x) by forward recurrence.

    Seeds L_0 = 1, L_1 = 1 + a - x, then
    (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}.
    """
    _check_degree(n)
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 1.0 + a - x
    for k in range(1, n):
        p, p_prev = ((2.0 * k + 1.0 + a - x) * p - (k + a) * p_prev) / (k + 1.0), p
    return p if p.ndim else float(p)


def jacobi(n: int, kappa: float, upsilon: float, x):
    """Jacobi polynomial P_n^(kappa,upsilon)(x) by forward recurrence.

    Parameters must exceed -1 (classical orthogonality range) and the
    argument must lie in [-1, 1].
    """
    _check_degree(n)
    if kappa <= -1 or upsilon <= -1:
        raise DomainError(
            f"Jacobi parameters must be > -1, got kappa={kappa}, upsilon={upsilon}"
        )
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1 + 1e-12):
        raise DomainError("Jacobi argument must lie in [-1, 1]")
    a, b = kappa, upsilon
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x
    for k in range(2, n + 1):
        c = 2.0 * k + a + b
        a1 = 2.0 * k * (k + a + b) * (c - 2.0)
        a2 = (c - 1.0) * (a * a - b * b)
        a3 = (c - 2.0) * (c - 1.0) * c
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p if p.ndim else float(p)


@dataclass(frozen=True)
class PolynomialSpec:
    """A polynomial pick: family, degree, and family parameters.

    family 'laguerre' takes one parameter (a); 'jacobi' takes two
    (kappa, upsilon). All parameters must exceed -1.
    """

    family: str
    n: int
    parameters: tuple[float, ...]

    def __post_init__(self):
        if self.family not in ("laguerre", "jacobi"):
            raise DomainError(f"unknown family {self.family!r}")
        _check_degree(self.n)
        expected = 1 if self.family == "laguerre" else 2
        if len(self.parameters) != expected:
            raise DomainError(
                f"{self.family} takes {expected} parameter(s), got {len(self.parameters)}"
            )
        if any(p <= -1 for p in self.parameters):
            raise DomainError("polynomial parameters must be > -1")

    def evaluate(self, x):
        if self.family == "laguerre":
            return laguerre(self.n, self.parameters[0], x)
        return jacobi(self.n, *self.parameters, x)


def normalize(f: RadialFunction) -> float:
    """Scale factor N with integral of |N*f|^2 over the grid equal to 1.

    Composite Simpson quadrature; the error is estimated by comparing with
    the every-other-node subgrid (grid halving) and must come out below
    1e-8 relative. A tail of |f|^2 that grows toward rho_max means the
    sample cannot be normalized and is rejected.
    """
    y = f.values**2
    x = f.grid.nodes

    n = len(x)
    eighth = n // 8
    if eighth >= 4:
        tail_prev = simpson(y[-2 * eighth : -eighth + 1], x=x[-2 * eighth : -eighth + 1])
        tail_last = simpson(y[-eighth:], x=x[-eighth:])
        total_rough = simpson(y, x=x)
        if tail_last > tail_prev and tail_last > 1e-15 * total_rough:
            raise NormalizationError(
                "tail of |f|^2 increases toward rho_max; integral looks divergent "
                f"(last-eighth integral {tail_last:.3e} > previous {tail_prev:.3e})"
            )

    integral = simpson(y, x=x)
    if not integral > 0:
        raise NormalizationError(f"norm integral must be positive, got {integral}")
    coarse = simpson(y[::2], x=x[::2])
    # Simpson is O(h^4): the fine-grid error is ~ |fine - coarse| / 15.
    est = abs(integral - coarse) / 15.0
    if est > 1e-8 * integral:
        raise NormalizationError(
            f"quadrature error estimate {est / integral:.2e} relative exceeds 1e-8; "
            "use a finer grid"
        )
    return 1.0 / np.sqrt(integral)
