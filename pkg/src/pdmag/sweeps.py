"""Parameter sweeps of the closed-form levels and level-crossing search.

A sweep tabulates E over a parameter grid for a set of labeled states;
points where a state stops being bound are reported as invalid rows, not
errors, since validity boundaries are part of the phenomenology. A
crossing is a sign change of E1(p) - E2(p) refined by bisection;
tangential degeneracies (touching without sign change) are outside the
detection scope.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import BracketingError, DomainError
from .models import ModelKind, energy
from .params import PhysicalParams, QuantumState

__all__ = ["SWEEPABLE", "SweepSpec", "SweepRow", "CrossingPoint", "sweep", "find_crossings"]

SWEEPABLE = ("beta", "b0", "alpha_ab", "mu", "delta")


def _check_param_name(param_name: str, kind: ModelKind) -> None:
    if param_name not in SWEEPABLE:
        raise DomainError(
            f"cannot sweep {param_name!r}; choose one of {', '.join(SWEEPABLE)}"
        )
    if param_name == "delta" and kind is not ModelKind.C:
        raise DomainError(f"model {kind.value} energies do not depend on delta")


@dataclass(frozen=True)
class SweepSpec:
    """A parameter scan: which model, which states, which knob, which grid."""

    kind: ModelKind
    states: tuple[QuantumState, ...]
    param_name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if not self.states:
            raise DomainError("at least one state is required")
        _check_param_name(self.param_name, self.kind)
        if not self.lo < self.hi:
            raise DomainError(f"sweep range must satisfy lo < hi, got ({self.lo}, {self.hi})")
        if not isinstance(self.steps, int) or isinstance(self.steps, bool) or self.steps < 2:
            raise DomainError(f"steps must be an integer >= 2, got {self.steps!r}")

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepRow:
    """One (grid point, state) evaluation; energy is None when invalid."""

    param_name: str
    value: float
    state: QuantumState
    energy: float | None

    @property
    def valid(self) -> bool:
        return self.energy is not None


@dataclass(frozen=True)
class CrossingPoint:
    """A parameter value where two labeled levels meet."""

    param_value: float
    energy: float
    state_pair: tuple[QuantumState, QuantumState]
    bracket_width: float


def _energy_at(kind: ModelKind, state: QuantumState, params: PhysicalParams, param_name: str, value: float):
    """Closed-form level with the named parameter overridden; None if the
    point is not a bound state (or the parameter value itself is out of range)."""
    try:
        p = dataclasses.replace(params, **{param_name: float(value)})
        return energy(kind, state, p)
    except DomainError:
        return None


def sweep(spec: SweepSpec, params: PhysicalParams) -> list[SweepRow]:
    """Tabulate the closed-form levels over the grid.

    Rows are ordered by (value, state) deterministically. Invalid points
    (no bound state there) appear with energy None rather than being
    dropped, so a plot can show where a level terminates.
    """
    rows = []
    for value in spec.values:
        for state in sorted(spec.states):
            e = _energy_at(spec.kind, state, params, spec.param_name, value)
            rows.append(
                SweepRow(param_name=spec.param_name, value=float(value), state=state, energy=e)
            )
    return rows


def find_crossings(
    kind: ModelKind,
    s1: QuantumState,
    s2: QuantumState,
    param_name: str,
    prange: tuple[float, float],
    params: PhysicalParams,
    scan_steps: int = 2001,
) -> list[CrossingPoint]:
    """All sign-change crossings of E_s1(p) - E_s2(p) on the range.

    The difference is scanned on scan_steps points; each bracket whose two
    ends are valid for both states and differ in sign is refined by
    bisection to |delta p| <= 1e-10 and |E1 - E2| <= 1e-9 max(1, |E|).
    Brackets that run into an invalid midpoint are discarded. An empty
    result just means no crossing was detected, not an error.
    """
    if s1 == s2:
        raise DomainError("s1 and s2 must be different states")
    _check_param_name(param_name, kind)
    lo, hi = float(prange[0]), float(prange[1])
    if not lo < hi:
        raise DomainError(f"range must satisfy lo < hi, got ({lo}, {hi})")
    if scan_steps < 2:
        raise DomainError(f"scan_steps must be >= 2, got {scan_steps}")

    def diff(value: float):
        e1 = _energy_at(kind, s1, params, param_name, value)
        if e1 is None:
            return None, None
        e2 = _energy_at(kind, s2, params, param_name, value)
        if e2 is None:
            return None, None
        return e1 - e2, 0.5 * (e1 + e2)

    grid = np.linspace(lo, hi, scan_steps)
    diffs = [diff(v) for v in grid]
    crossings: list[CrossingPoint] = []
    for i in range(scan_steps - 1):
        d_a, _ = diffs[i]
        d_b, _ = diffs[i + 1]
        if d_a is None or d_b is None:
            continue
        if d_a == 0.0:
            point = _refined_point(diff, grid[i], grid[i], s1, s2)
            if point is not None:
                crossings.append(point)
            continue
        if d_a * d_b < 0.0:
            point = _bisect_crossing(diff, grid[i], grid[i + 1], d_a, s1, s2)
            if point is not None:
                crossings.append(point)
    # An exact zero at the very last scan point is not the left end of any
    # bracket, so it needs its own check.
    d_last, _ = diffs[-1]
    if d_last == 0.0:
        point = _refined_point(diff, grid[-1], grid[-1], s1, s2)
        if point is not None:
            crossings.append(point)
    return crossings


def _refined_point(diff, p_lo, p_hi, s1, s2):
    d, e = diff(0.5 * (p_lo + p_hi))
    if d is None:
        return None
    if not abs(d) <= 1e-9 * max(1.0, abs(e)):
        return None
    return CrossingPoint(
        param_value=0.5 * (p_lo + p_hi),
        energy=e,
        state_pair=(s1, s2),
        bracket_width=p_hi - p_lo,
    )


def _bisect_crossing(diff, p_lo, p_hi, d_lo, s1, s2):
    for _ in range(300):
        mid = 0.5 * (p_lo + p_hi)
        d_mid, e_mid = diff(mid)
        if d_mid is None:
            return None
        width = p_hi - p_lo
        if d_mid == 0.0 or (
            width <= 1e-10 and abs(d_mid) <= 1e-9 * max(1.0, abs(e_mid))
        ):
            return CrossingPoint(
                param_value=mid, energy=e_mid, state_pair=(s1, s2), bracket_width=width
            )
        if (d_mid > 0) == (d_lo > 0):
            p_lo, d_lo = mid, d_mid
        else:
            p_hi = mid
    raise BracketingError(
        f"crossing refinement did not converge on [{p_lo}, {p_hi}]"
    )
