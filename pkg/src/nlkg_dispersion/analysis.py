"""Sweeps over amplitude ranges, error metrics and figure datasets.

A sweep evaluates an ordered set of methods plus the exact reference on a
grid and tabulates, per method and grid point: Omega, the ratio to exact,
and the log10 relative error ("delta"). Methods that fail at a point (e.g.
the order-2 Duffing balance below mu*A^2 = -0.9583) leave an empty cell
carrying the reason code "domain" rather than aborting the sweep.

Grids either sweep the amplitude directly (AmplitudeGrid) or, for the
Duffing potential, the combination s = mu*A^2 (MuA2Grid): since Omega
depends on mu and A only through that product, the grid is realized as
A = 1 with mu = s. The exact reference per point uses the cheapest oracle:
the AGM closed form for sine-Gordon, quadrature otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .baselines import lim_duffing_omega, lim_pure_quartic_omega, lim_sine_gordon_omega
from .errors import DomainError
from .lde import duffing_omega_lde, pure_quartic_omega_lde, sine_gordon_omega_lde
from .model import (
    DispersionQuery,
    DispersionResult,
    Duffing,
    MethodId,
    Potential,
    PureQuartic,
    SineGordon,
    validate_amplitude,
)
from .oracle import QuadratureConfig, omega_exact, omega_exact_sine_gordon


@dataclass(frozen=True, slots=True)
class AmplitudeGrid:
    """Evenly spaced amplitudes lo..hi (ascending); lo == hi degenerates to one row."""

    lo: float
    hi: float
    points: int


@dataclass(frozen=True, slots=True)
class MuA2Grid:
    """Grid over s = mu*A^2 for the Duffing potential; optionally log-spaced."""

    lo: float
    hi: float
    points: int
    log_scale: bool = False


Axis = AmplitudeGrid | MuA2Grid


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """A full sweep request: potential, axis, ordered methods, tolerance."""

    potential: Potential
    axis: Axis
    methods: tuple[MethodId, ...]
    tol: float = 1e-12

    def __post_init__(self) -> None:
        ax = self.axis
        if not (isinstance(ax.points, int) and ax.points >= 2):
            raise DomainError(f"grid needs at least 2 points, got {ax.points!r}")
        if not (math.isfinite(ax.lo) and math.isfinite(ax.hi) and ax.lo <= ax.hi):
            raise DomainError(f"grid range must satisfy lo <= hi, got [{ax.lo!r}, {ax.hi!r}]")
        if isinstance(ax, MuA2Grid):
            if ax.log_scale and ax.lo <= 0:
                raise DomainError("log-scaled mu*A^2 grid requires lo > 0")
            if not isinstance(self.potential, Duffing):
                raise DomainError("MuA2Grid applies to the Duffing potential only")
        if not self.methods:
            raise DomainError("sweep needs at least one method")
        if not (isinstance(self.tol, float) and self.tol > 0):
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        object.__setattr__(self, "methods", tuple(self.methods))


@dataclass(frozen=True, slots=True)
class SweepCell:
    """One method at one grid point; all-None with a reason when it failed."""

    omega: float | None
    ratio: float | None
    delta: float | None
    reason: str | None = None


@dataclass(frozen=True, slots=True)
class SweepRow:
    x: float
    exact_omega: float
    cells: tuple[SweepCell, ...]


@dataclass(frozen=True, slots=True)
class SweepTable:
    """Sweep output: rows ascending in x, cells aligned with spec.methods."""

    spec: SweepSpec
    rows: tuple[SweepRow, ...]


def relative_error_log10(omega: float, omega_exact: float) -> float:
    """log10 |(omega - omega_exact) / omega_exact|; -inf on exact agreement."""
    if omega_exact == 0.0:
        raise DomainError("relative error undefined against a zero reference")
    if omega == omega_exact:
        return -math.inf
    return math.log10(abs((omega - omega_exact) / omega_exact))


def _axis_values(axis: Axis) -> np.ndarray:
    if axis.lo == axis.hi:
        return np.array([axis.lo], dtype=float)
    if isinstance(axis, MuA2Grid) and axis.log_scale:
        return np.logspace(math.log10(axis.lo), math.log10(axis.hi), axis.points)
    return np.linspace(axis.lo, axis.hi, axis.points)


def _grid_point(spec: SweepSpec, x: float) -> tuple[Potential, float]:
    if isinstance(spec.axis, MuA2Grid):
        return Duffing(x), 1.0
    return spec.potential, x


def _exact_omega(potential: Potential, A: float, tol: float) -> float:
    if isinstance(potential, SineGordon):
        return omega_exact_sine_gordon(A).omega_cap
    return omega_exact(potential, A, QuadratureConfig(abs_tol=tol)).omega_cap


def evaluate_dispersion(query: DispersionQuery) -> DispersionResult:
    """Dispatch a single frequency request to the right implementation.

    The pure-quartic baselines are defined at mu = 1; other couplings apply
    the exact time rescaling Omega -> sqrt(mu)*Omega here.
    """
    p, A, m = query.potential, query.amplitude, query.method
    if m.kind == "exact":
        if isinstance(p, SineGordon):
            return omega_exact_sine_gordon(A)
        return omega_exact(p, A, QuadratureConfig(abs_tol=query.tol))
    if m.kind == "lde":
        if isinstance(p, Duffing):
            return duffing_omega_lde(p.mu, A, m.order)
        if isinstance(p, SineGordon):
            return sine_gordon_omega_lde(A, m.order)
        return pure_quartic_omega_lde(p.mu, A, m.order)
    if isinstance(p, Duffing):
        return lim_duffing_omega(p.mu, A, m.order)
    if isinstance(p, SineGordon):
        return lim_sine_gordon_omega(A, m.order)
    validate_amplitude(p, A)
    base = lim_pure_quartic_omega(A, m.order)
    if p.mu == 1.0:
        return base
    return DispersionResult(math.sqrt(p.mu) * base.omega_cap, base.method, None)


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the sweep. Deterministic: equal specs give equal tables.

    The whole grid must lie inside the potential's validity domain (checked
    up front); per-method failures inside the grid become empty cells.
    """
    xs = _axis_values(spec.axis)
    points = [_grid_point(spec, float(x)) for x in xs]
    for p, A in points:
        validate_amplitude(p, A)
    rows = []
    for x, (p, A) in zip(xs, points):
        exact = _exact_omega(p, A, spec.tol)
        cells = []
        for mid in spec.methods:
            try:
                om = evaluate_dispersion(DispersionQuery(p, A, mid, spec.tol)).omega_cap
            except DomainError:
                cells.append(SweepCell(None, None, None, "domain"))
                continue
            cells.append(
                SweepCell(om, om / exact, relative_error_log10(om, exact), None)
            )
        rows.append(SweepRow(float(x), exact, tuple(cells)))
    return SweepTable(spec, tuple(rows))


def _lde(n: int) -> MethodId:
    return MethodId.lde(n)


def _lim(n: int) -> MethodId:
    return MethodId.lim(n)


_FIGURE_SPECS: dict[int, tuple] = {
    # id -> (potential, ratio axis, delta axis, methods)
    1: (
        Duffing(1.0),
        MuA2Grid(-0.99, -0.01, 200),
        MuA2Grid(1.0, 1e4, 200, log_scale=True),
        (_lde(0), _lde(2), _lde(3), _lim(2)),
    ),
    2: (
        SineGordon(),
        AmplitudeGrid(0.02, 3.12, 200),
        None,
        (_lde(1), _lde(2), _lim(1), _lim(2)),
    ),
    3: (
        PureQuartic(1.0),
        AmplitudeGrid(0.1, 5.0, 200),
        None,
        (_lde(1), _lde(2), _lde(3), _lim(1), _lim(2)),
    ),
}


def _with_points(axis: Axis, points: int) -> Axis:
    if isinstance(axis, MuA2Grid):
        return MuA2Grid(axis.lo, axis.hi, points, axis.log_scale)
    return AmplitudeGrid(axis.lo, axis.hi, points)


def figure_dataset(
    figure_id: int, points: int = 200, tol: float = 1e-12
) -> tuple[SweepTable, SweepTable]:
    """Data behind the three standard comparison figures.

    Returns (ratio_table, delta_table). Figure 1 plots the softening window
    mu*A^2 in (-1, 0) as ratios and the hardening decades [1, 1e4] as log10
    errors, so its two panels use different grids; figures 2 and 3 read both
    panels off one grid and the two tables coincide.
    """
    if figure_id not in _FIGURE_SPECS:
        raise DomainError(f"unknown figure id {figure_id!r} (have 1, 2, 3)")
    potential, ratio_axis, delta_axis, methods = _FIGURE_SPECS[figure_id]
    ratio_table = run_sweep(
        SweepSpec(potential, _with_points(ratio_axis, points), methods, tol)
    )
    if delta_axis is None:
        return ratio_table, ratio_table
    delta_table = run_sweep(
        SweepSpec(potential, _with_points(delta_axis, points), methods, tol)
    )
    return ratio_table, delta_table
