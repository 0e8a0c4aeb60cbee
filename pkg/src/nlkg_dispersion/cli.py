"""Command-line interface: dispersion, sweep, figure, validate.

Configuration precedence: command-line flags > the key=value file named by
the NLKG_CONFIG environment variable > built-in defaults. Recognized keys:
``output_dir``, ``csv_precision`` (6..17), ``default_tol``, ``grid_points``.

Exit codes: 0 success; 1 computation failure or validation FAIL;
2 bad invocation (usage errors, out-of-domain parameter values, bad config).

CSV format: first line ``# nlkg-dispersion v<version> spec=<hash>`` where the
hash is a truncated sha256 of the canonical sweep description; then a header
``x,exact_omega`` followed by ``<method>_omega,<method>_ratio,<method>_delta``
per method; then one row per grid point, LF line endings. At precision 17
floats are written with repr() (shortest round-trip form), so re-running the
same sweep on the same backend reproduces the file byte for byte. Empty cell
= the method was undefined at that amplitude.
"""

from __future__ import annotations

import argparse
import hashlib
import math
import os
import sys
import time
from dataclasses import dataclass, replace

from . import __version__
from .analysis import (
    AmplitudeGrid,
    MuA2Grid,
    SweepSpec,
    SweepTable,
    evaluate_dispersion,
    figure_dataset,
    run_sweep,
)
from .baselines import lim_duffing_omega, lim_pure_quartic_omega, lim_sine_gordon_omega
from .elliptic import K_lde_improved, agm_K, landen_ascend, landen_descend
from .errors import DomainError, NonConvergence
from .lde import duffing_omega_lde, pure_quartic_omega_lde, sine_gordon_omega_lde
from .model import (
    DispersionQuery,
    Duffing,
    MethodId,
    Potential,
    PureQuartic,
    SineGordon,
    omega_from_wavenumber,
)
from .oracle import omega_exact_sine_gordon, period_ode, period_quadrature


class ConfigError(ValueError):
    """A problem with the NLKG_CONFIG file or a config value."""


@dataclass(frozen=True)
class CliConfig:
    output_dir: str = "."
    csv_precision: int = 17
    default_tol: float = 1e-12
    grid_points: int = 200


def _parse_config_file(path: str) -> dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read NLKG_CONFIG file {path!r}: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def _validated_precision(value: int) -> int:
    if not (isinstance(value, int) and 6 <= value <= 17):
        raise ConfigError(f"csv_precision must be an int in [6, 17], got {value!r}")
    return value


def load_config() -> CliConfig:
    """Defaults overlaid with the NLKG_CONFIG file (if the variable is set)."""
    cfg = CliConfig()
    path = os.environ.get("NLKG_CONFIG")
    if not path:
        return cfg
    values = _parse_config_file(path)
    known = {"output_dir", "csv_precision", "default_tol", "grid_points"}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    try:
        if "output_dir" in values:
            cfg = replace(cfg, output_dir=values["output_dir"])
        if "csv_precision" in values:
            cfg = replace(cfg, csv_precision=_validated_precision(int(values["csv_precision"])))
        if "default_tol" in values:
            tol = float(values["default_tol"])
            if not tol > 0:
                raise ConfigError(f"default_tol must be positive, got {tol}")
            cfg = replace(cfg, default_tol=tol)
        if "grid_points" in values:
            pts = int(values["grid_points"])
            if pts < 2:
                raise ConfigError(f"grid_points must be >= 2, got {pts}")
            cfg = replace(cfg, grid_points=pts)
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad value in NLKG_CONFIG: {exc}") from exc
    return cfg


# ---------------------------------------------------------------------------
# CSV / SVG output
# ---------------------------------------------------------------------------

def format_float(value: float | None, precision: int) -> str:
    """One CSV cell. repr() at precision 17 (round-trip exact), %g below."""
    if value is None:
        return ""
    if precision >= 17:
        return repr(float(value))
    return f"{value:.{precision}g}"


def spec_hash(spec: SweepSpec) -> str:
    """Truncated sha256 of the canonical sweep description."""
    p = spec.potential
    if isinstance(p, Duffing):
        pot = f"duffing(mu={p.mu!r})"
    elif isinstance(p, SineGordon):
        pot = "sine_gordon"
    else:
        pot = f"pure_quartic(mu={p.mu!r})"
    ax = spec.axis
    if isinstance(ax, MuA2Grid):
        axis = f"muA2[{ax.lo!r},{ax.hi!r},{ax.points},{'log' if ax.log_scale else 'lin'}]"
    else:
        axis = f"A[{ax.lo!r},{ax.hi!r},{ax.points}]"
    methods = ",".join(m.label for m in spec.methods)
    canon = f"{pot};{axis};{methods};tol={spec.tol!r}"
    return hashlib.sha256(canon.encode("ascii")).hexdigest()[:12]


def render_csv(table: SweepTable, precision: int) -> str:
    lines = [f"# nlkg-dispersion v{__version__} spec={spec_hash(table.spec)}"]
    header = ["x", "exact_omega"]
    for mid in table.spec.methods:
        header += [f"{mid.label}_omega", f"{mid.label}_ratio", f"{mid.label}_delta"]
    lines.append(",".join(header))
    for row in table.rows:
        cells = [format_float(row.x, precision), format_float(row.exact_omega, precision)]
        for cell in row.cells:
            cells += [
                format_float(cell.omega, precision),
                format_float(cell.ratio, precision),
                format_float(cell.delta, precision),
            ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_csv(table: SweepTable, path: str, precision: int) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(render_csv(table, precision))


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _svg_ticks(lo: float, hi: float, log_axis: bool) -> list[float]:
    if log_axis:
        first = math.ceil(math.log10(lo) - 1e-9)
        last = math.floor(math.log10(hi) + 1e-9)
        decades = [10.0 ** d for d in range(first, last + 1)]
        return decades if decades else [lo, hi]
    return [lo + (hi - lo) * i / 4.0 for i in range(5)]


def render_svg(table: SweepTable, column: str, title: str) -> str:
    """Minimal self-contained SVG: one polyline per method, axes, legend.

    ``column`` is "ratio" or "delta"; non-finite values (missing cells,
    -inf deltas on exact agreement) break the polyline into segments.
    """
    width, height = 800, 600
    ml, mr, mt, mb = 72, 24, 42, 56
    plot_w, plot_h = width - ml - mr, height - mt - mb
    log_x = isinstance(table.spec.axis, MuA2Grid) and table.spec.axis.log_scale

    xs = [row.x for row in table.rows]
    x_lo, x_hi = min(xs), max(xs)

    def x_pos(x: float) -> float:
        if log_x:
            t = (math.log10(x) - math.log10(x_lo)) / (math.log10(x_hi) - math.log10(x_lo))
        else:
            t = (x - x_lo) / (x_hi - x_lo) if x_hi > x_lo else 0.5
        return ml + t * plot_w

    series: list[list[list[tuple[float, float]]]] = []
    y_values: list[float] = []
    for idx in range(len(table.spec.methods)):
        segments: list[list[tuple[float, float]]] = []
        current: list[tuple[float, float]] = []
        for row in table.rows:
            value = getattr(row.cells[idx], column)
            if value is None or not math.isfinite(value):
                if current:
                    segments.append(current)
                    current = []
                continue
            current.append((row.x, value))
            y_values.append(value)
        if current:
            segments.append(current)
        series.append(segments)

    if y_values:
        y_lo, y_hi = min(y_values), max(y_values)
    else:
        y_lo, y_hi = 0.0, 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def y_pos(y: float) -> float:
        return mt + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
        f'<rect x="{ml}" y="{mt}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#444444" stroke-width="1"/>',
    ]

    for tick in _svg_ticks(x_lo, x_hi, log_x):
        px = x_pos(tick)
        parts.append(
            f'<line x1="{px:.2f}" y1="{mt + plot_h}" x2="{px:.2f}" '
            f'y2="{mt + plot_h + 5}" stroke="#444444"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{mt + plot_h + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{tick:g}</text>'
        )
    for i in range(5):
        ty = y_lo + (y_hi - y_lo) * i / 4.0
        py = y_pos(ty)
        parts.append(
            f'<line x1="{ml - 5}" y1="{py:.2f}" x2="{ml}" y2="{py:.2f}" stroke="#444444"/>'
        )
        parts.append(
            f'<text x="{ml - 8}" y="{py + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12">{ty:.4g}</text>'
        )

    if column == "ratio" and y_lo < 1.0 < y_hi:
        py = y_pos(1.0)
        parts.append(
            f'<line x1="{ml}" y1="{py:.2f}" x2="{ml + plot_w}" y2="{py:.2f}" '
            f'stroke="#999999" stroke-dasharray="5,4" stroke-width="1"/>'
        )

    for idx, segments in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        for segment in segments:
            pts = " ".join(f"{x_pos(x):.2f},{y_pos(y):.2f}" for x, y in segment)
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )

    legend_x = ml + plot_w - 120
    for idx, mid in enumerate(table.spec.methods):
        color = _PALETTE[idx % len(_PALETTE)]
        ly = mt + 16 + 18 * idx
        parts.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 26}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{legend_x + 32}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="12">{mid.label}</text>'
        )

    axis_name = "mu*A^2" if isinstance(table.spec.axis, MuA2Grid) else "A"
    y_name = "Omega / Omega_exact" if column == "ratio" else "log10 relative error"
    parts.append(
        f'<text x="{ml + plot_w / 2:.1f}" y="{height - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{axis_name}</text>'
    )
    parts.append(
        f'<text x="20" y="{mt + plot_h / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 20 {mt + plot_h / 2:.1f})">{y_name}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(table: SweepTable, path: str, column: str, title: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(render_svg(table, column, title))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _potential_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Potential:
    if args.potential == "duffing":
        return Duffing(args.mu if args.mu is not None else 1.0)
    if args.potential == "sine-gordon":
        if args.mu is not None:
            parser.error("--mu is not accepted for sine-gordon")
        return SineGordon()
    return PureQuartic(args.mu if args.mu is not None else 1.0)


def cmd_dispersion(args: argparse.Namespace, cfg: CliConfig) -> int:
    potential = _potential_from_args(args, args.parser)
    if args.method == "exact":
        if args.order is not None:
            args.parser.error("--order is not accepted with --method exact")
        method = MethodId.exact()
    else:
        if args.order is None:
            args.parser.error(f"--method {args.method} requires --order")
        method = MethodId(args.method, args.order)
    tol = args.tol if args.tol is not None else cfg.default_tol
    precision = args.precision if args.precision is not None else cfg.csv_precision
    result = evaluate_dispersion(DispersionQuery(potential, args.amplitude, method, tol))
    print(format_float(result.omega_cap, precision))
    if args.wavenumber is not None:
        print(format_float(omega_from_wavenumber(result.omega_cap, args.wavenumber), precision))
    return 0


def cmd_sweep(args: argparse.Namespace, cfg: CliConfig) -> int:
    parser = args.parser
    amplitude_range = args.a_min is not None or args.a_max is not None
    mua2_range = args.mua2_min is not None or args.mua2_max is not None
    if amplitude_range and mua2_range:
        parser.error("give either --a-min/--a-max or --mua2-min/--mua2-max, not both")
    if not amplitude_range and not mua2_range:
        parser.error("a sweep range is required: --a-min/--a-max or --mua2-min/--mua2-max")
    points = args.points if args.points is not None else cfg.grid_points
    if amplitude_range:
        if args.a_min is None or args.a_max is None:
            parser.error("both --a-min and --a-max are required")
        if args.log:
            parser.error("--log applies to --mua2-min/--mua2-max sweeps only")
        axis = AmplitudeGrid(args.a_min, args.a_max, points)
    else:
        if args.mua2_min is None or args.mua2_max is None:
            parser.error("both --mua2-min and --mua2-max are required")
        axis = MuA2Grid(args.mua2_min, args.mua2_max, points, log_scale=args.log)
    potential = _potential_from_args(args, parser)
    methods = tuple(MethodId.parse(tok) for tok in args.methods.split(","))
    tol = args.tol if args.tol is not None else cfg.default_tol
    precision = args.precision if args.precision is not None else cfg.csv_precision
    table = run_sweep(SweepSpec(potential, axis, methods, tol))
    out = args.out if args.out is not None else os.path.join(cfg.output_dir, "sweep.csv")
    parent = os.path.dirname(out)
    if parent:
        os.makedirs(parent, exist_ok=True)
    write_csv(table, out, precision)
    print(out)
    return 0


_FIGURE_TITLES = {
    1: ("frequency ratio, softening window", "log10 error, hardening decades"),
    2: ("frequency ratio", "log10 relative error"),
    3: ("frequency ratio", "log10 relative error"),
}


def cmd_figure(args: argparse.Namespace, cfg: CliConfig) -> int:
    points = args.points if args.points is not None else cfg.grid_points
    tol = args.tol if args.tol is not None else cfg.default_tol
    precision = args.precision if args.precision is not None else cfg.csv_precision
    out_dir = args.out if args.out is not None else cfg.output_dir
    os.makedirs(out_dir, exist_ok=True)
    ratio_table, delta_table = figure_dataset(args.id, points, tol)
    ratio_title, delta_title = _FIGURE_TITLES[args.id]
    written = []
    for table, column, title, stem in (
        (ratio_table, "ratio", ratio_title, f"fig{args.id}_ratio"),
        (delta_table, "delta", delta_title, f"fig{args.id}_delta"),
    ):
        csv_path = os.path.join(out_dir, stem + ".csv")
        svg_path = os.path.join(out_dir, stem + ".svg")
        write_csv(table, csv_path, precision)
        write_svg(table, svg_path, column, title)
        written += [csv_path, svg_path]
    for path in written:
        print(path)
    return 0


# ---------------------------------------------------------------------------
# validate: self-contained regression groups
# ---------------------------------------------------------------------------

_ORACLE_PAIRS = (
    (Duffing(1.0), 0.3),
    (Duffing(1.0), 0.7),
    (Duffing(1.0), 1.0),
    (Duffing(1.0), 2.0),
    (Duffing(1.0), 5.0),
    (Duffing(-0.5), 0.5),
    (Duffing(-0.5), 1.0),
    (Duffing(0.0), 1.0),
    (Duffing(10.0), 0.5),
    (Duffing(10.0), 1.5),
    (SineGordon(), 0.3),
    (SineGordon(), 0.8),
    (SineGordon(), 1.5),
    (SineGordon(), 2.2),
    (SineGordon(), 2.8),
    (SineGordon(), 3.0),
    (PureQuartic(1.0), 0.5),
    (PureQuartic(1.0), 1.0),
    (PureQuartic(1.0), 2.0),
    (PureQuartic(2.0), 1.0),
)

# frozen double-precision evaluations of the printed fixed-order closed forms
_DUFFING_SERIES_PINS = {
    0.1: (1.036822067666386, 1.0367169070861986, 1.0367169070746383),
    1.0: (1.3228756555322954, 1.3177768639696397, 1.3177760773980098),
    10.0: (2.9154759474226504, 2.8667778821457888, 2.866649250542454),
    100.0: (8.717797887081348, 8.534399735533745, 8.533653593103681),
}
_QUARTIC_SERIES_PINS = (0.8483514159521032, 0.8473006958431706, 0.847220539494823)
_SG_SERIES_PINS = {
    0.5: (0.9843948528924417, 0.9843948500239019),
    1.0: (0.9377930558148414, 0.9377922580534079),
    2.0: (0.7528064506344964, 0.7524999130533069),
    3.0: (0.4227036434823449, 0.3956315141611997),
}


def _check_oracle_agreement() -> tuple[bool, str]:
    for potential, A in _ORACLE_PAIRS:
        quad = period_quadrature(potential, A).T
        ode = period_ode(potential, A).T
        rel = abs(quad - ode) / quad
        if rel > 1e-6:
            return False, f"quadrature/ODE disagree ({rel:.2e}) at {potential!r}, A={A}"
    for A in (0.5, 1.0, 2.0, 3.0):
        quad = 2.0 * math.pi / period_quadrature(SineGordon(), A).T
        closed = omega_exact_sine_gordon(A).omega_cap
        rel = abs(quad - closed) / closed
        if rel > 1e-9:
            return False, f"quadrature/elliptic disagree ({rel:.2e}) at A={A}"
    return True, ""


def _check_landen_identities() -> tuple[bool, str]:
    for m in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
        K = agm_K(m)
        resid = abs(K - agm_K(landen_ascend(m)) / (1.0 + math.sqrt(m)))
        if resid > 1e-12 * K:
            return False, f"Landen K identity fails at m={m} (resid {resid:.2e})"
    for m in (1e-6, 0.01, 0.3, 0.7, 0.999):
        back = landen_ascend(landen_descend(m))
        if abs(back - m) > 1e-12 * m:
            return False, f"ascend(descend(m)) != m at m={m}"
    for m in (0.1, 0.3, 0.5, 0.7, 0.9):
        closed = math.pi / math.sqrt(1.0 - 0.5 * m + 3.0 * math.sqrt(1.0 - m))
        got = K_lde_improved(m, 1)
        if abs(got - closed) > 1e-13 * closed:
            return False, f"order-1 closed form fails at m={m}"
    return True, ""


def _check_closed_form_regressions() -> tuple[bool, str]:
    for q, pins in _DUFFING_SERIES_PINS.items():
        for order, pin in zip((0, 2, 3), pins):
            got = duffing_omega_lde(q, 1.0, order).omega_cap
            if abs(got - pin) > 1e-12 * pin:
                return False, f"duffing order {order} drifted at mu*A^2={q}"
    for order, pin in zip((1, 2, 3), _QUARTIC_SERIES_PINS):
        got = pure_quartic_omega_lde(1.0, 1.0, order).omega_cap
        if abs(got - pin) > 1e-12 * pin:
            return False, f"pure quartic order {order} drifted"
    for A, pins in _SG_SERIES_PINS.items():
        for order, pin in zip((1, 2), pins):
            got = sine_gordon_omega_lde(A, order).omega_cap
            if abs(got - pin) > 1e-12 * pin:
                return False, f"sine-Gordon order {order} drifted at A={A}"
    return True, ""


def _check_pairing_property() -> tuple[bool, str]:
    for A in (0.5, 1.5, 2.5):
        for even in (2, 4):
            lo = sine_gordon_omega_lde(A, even).omega_cap
            hi = sine_gordon_omega_lde(A, even + 1).omega_cap
            if abs(hi - lo) > 1e-12 * lo:
                return False, f"orders {even}/{even + 1} unpaired at A={A}"
    return True, ""


def _check_error_ordering() -> tuple[bool, str]:
    for q in (1.0, 10.0, 100.0, 1e4):
        exact = 2.0 * math.pi / period_quadrature(Duffing(q), 1.0).T
        e2 = abs(duffing_omega_lde(q, 1.0, 2).omega_cap - exact)
        e3 = abs(duffing_omega_lde(q, 1.0, 3).omega_cap - exact)
        el = abs(lim_duffing_omega(q, 1.0, 2).omega_cap - exact)
        if not (e2 < el and e3 < e2):
            return False, f"Duffing error ordering breaks at mu*A^2={q}"
    exact_q = 2.0 * math.pi / 7.416298709  # pinned quartic reference at A=1
    e1 = abs(pure_quartic_omega_lde(1.0, 1.0, 1).omega_cap - exact_q) / exact_q
    e2 = abs(pure_quartic_omega_lde(1.0, 1.0, 2).omega_cap - exact_q) / exact_q
    e3 = abs(pure_quartic_omega_lde(1.0, 1.0, 3).omega_cap - exact_q) / exact_q
    el = abs(lim_pure_quartic_omega(1.0, 2).omega_cap - exact_q) / exact_q
    if not (e3 <= 5e-5 and e2 <= 2e-4 and e2 < el and math.log10(e1) <= math.log10(el) + 1.0):
        return False, "pure quartic error ladder breaks at A=1"
    for i in range(25):
        A = 0.1 + (3.0 - 0.1) * i / 24.0
        exact = omega_exact_sine_gordon(A).omega_cap
        es = abs(sine_gordon_omega_lde(A, 2).omega_cap - exact)
        el = abs(lim_sine_gordon_omega(A, 2).omega_cap - exact)
        if not es < el:
            return False, f"sine-Gordon order-2 series not ahead of balance at A={A:.3f}"
    return True, ""


_VALIDATION_GROUPS = (
    ("oracle agreement", _check_oracle_agreement),
    ("landen identities", _check_landen_identities),
    ("closed-form regressions", _check_closed_form_regressions),
    ("pairing property", _check_pairing_property),
    ("error ordering", _check_error_ordering),
)


def cmd_validate(args: argparse.Namespace, cfg: CliConfig) -> int:
    started = time.monotonic()
    all_ok = True
    for name, check in _VALIDATION_GROUPS:
        ok, detail = check()
        all_ok &= ok
        line = f"PASS {name}" if ok else f"FAIL {name}: {detail}"
        print(line)
    print(f"{'ok' if all_ok else 'FAILED'} ({time.monotonic() - started:.2f}s)")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _add_common(sub: argparse.ArgumentParser, *, precision: bool = True) -> None:
    sub.add_argument("--tol", type=float, default=None, help="numerical tolerance")
    if precision:
        sub.add_argument(
            "--precision",
            type=int,
            default=None,
            help="output float precision, 6..17 (17 = exact round-trip)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlkg-dispersion",
        description="Amplitude-dependent dispersion relations of nonlinear Klein-Gordon waves",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    disp = subs.add_parser("dispersion", help="one frequency at one amplitude")
    disp.add_argument("--potential", required=True, choices=("duffing", "sine-gordon", "pure-quartic"))
    disp.add_argument("--mu", type=float, default=None, help="coupling (duffing / pure-quartic)")
    disp.add_argument("--amplitude", type=float, required=True)
    disp.add_argument("--method", required=True, choices=("exact", "lde", "lim"))
    disp.add_argument("--order", type=int, default=None, help="series/balance order")
    disp.add_argument("--wavenumber", type=float, default=None, help="also print sqrt(Omega^2 + k^2)")
    _add_common(disp)
    disp.set_defaults(handler=cmd_dispersion)

    sweep = subs.add_parser("sweep", help="tabulate methods over a grid to CSV")
    sweep.add_argument("--potential", required=True, choices=("duffing", "sine-gordon", "pure-quartic"))
    sweep.add_argument("--mu", type=float, default=None)
    sweep.add_argument("--a-min", type=float, default=None)
    sweep.add_argument("--a-max", type=float, default=None)
    sweep.add_argument("--mua2-min", type=float, default=None)
    sweep.add_argument("--mua2-max", type=float, default=None)
    sweep.add_argument("--log", action="store_true", help="log-spaced mu*A^2 grid")
    sweep.add_argument("--points", type=int, default=None)
    sweep.add_argument("--methods", required=True, help="comma list, e.g. lde2,lde3,lim2")
    sweep.add_argument("--out", default=None, help="CSV path (default: <output_dir>/sweep.csv)")
    _add_common(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    fig = subs.add_parser("figure", help="write the CSV/SVG pair for a standard figure")
    fig.add_argument("--id", type=int, required=True, choices=(1, 2, 3))
    fig.add_argument("--points", type=int, default=None)
    fig.add_argument("--out", default=None, help="output directory (default: output_dir)")
    _add_common(fig)
    fig.set_defaults(handler=cmd_figure)

    val = subs.add_parser("validate", help="run the self-check groups")
    val.set_defaults(handler=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser
    try:
        cfg = load_config()
        if getattr(args, "precision", None) is not None:
            _validated_precision(args.precision)
        return args.handler(args, cfg)
    except (ConfigError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
