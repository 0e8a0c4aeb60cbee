"""Potentials, method identifiers and the shared result vocabulary.

The package computes the frequency Omega(A) of periodic solutions of
u'' = -V'(u) started from u(0) = A, u'(0) = 0, for three on-site potentials:

* Duffing:       V(u) = u^2/2 + mu*u^4/4   (mu may be negative: softening)
* sine-Gordon:   V(u) = -cos(u)
* pure quartic:  V(u) = mu*u^4/4           (no harmonic term)

Validity domains are enforced here, once, by :func:`validate_amplitude`;
numerical modules call it instead of re-checking piecemeal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

#: Largest accepted resummation order for the series methods.
MAX_LDE_ORDER = 30


@dataclass(frozen=True, slots=True)
class Duffing:
    """Harmonic + quartic potential; ``mu`` is the quartic coefficient."""

    mu: float = 1.0


@dataclass(frozen=True, slots=True)
class SineGordon:
    """Pendulum potential -cos(u); oscillations exist for 0 < A < pi."""


@dataclass(frozen=True, slots=True)
class PureQuartic:
    """Quartic potential with no harmonic term; requires mu > 0."""

    mu: float = 1.0


Potential = Duffing | SineGordon | PureQuartic


def validate_amplitude(potential: Potential, amplitude: float) -> None:
    """Raise :class:`DomainError` unless ``amplitude`` admits an oscillation.

    Duffing needs 1 + mu*A^2 > 0 (below that the turning point disappears),
    sine-Gordon needs 0 < A < pi, pure quartic needs mu > 0 and A > 0.
    """
    if not (isinstance(amplitude, (int, float)) and amplitude > 0):
        raise DomainError(f"amplitude must be positive, got {amplitude!r}")
    if isinstance(potential, Duffing):
        if not math.isfinite(potential.mu):
            raise DomainError(f"mu must be finite, got {potential.mu!r}")
        if 1.0 + potential.mu * amplitude * amplitude <= 0.0:
            raise DomainError(
                f"no turning point: 1 + mu*A^2 = "
                f"{1.0 + potential.mu * amplitude * amplitude} <= 0"
            )
    elif isinstance(potential, SineGordon):
        if amplitude >= math.pi:
            raise DomainError(f"amplitude {amplitude} outside (0, pi)")
    elif isinstance(potential, PureQuartic):
        if not (math.isfinite(potential.mu) and potential.mu > 0):
            raise DomainError(f"pure quartic requires mu > 0, got {potential.mu!r}")
    else:
        raise DomainError(f"unknown potential {potential!r}")


def eval_potential(potential: Potential, u: float) -> float:
    """V(u). Total on all finite inputs."""
    if isinstance(potential, Duffing):
        u2 = u * u
        return 0.5 * u2 + 0.25 * potential.mu * u2 * u2
    if isinstance(potential, SineGordon):
        return -math.cos(u)
    if isinstance(potential, PureQuartic):
        u2 = u * u
        return 0.25 * potential.mu * u2 * u2
    raise DomainError(f"unknown potential {potential!r}")


def eval_force(potential: Potential, u: float) -> float:
    """V'(u), the restoring force. Total on all finite inputs."""
    if isinstance(potential, Duffing):
        return u + potential.mu * u * u * u
    if isinstance(potential, SineGordon):
        return math.sin(u)
    if isinstance(potential, PureQuartic):
        return potential.mu * u * u * u
    raise DomainError(f"unknown potential {potential!r}")


def turning_energy(potential: Potential, amplitude: float) -> float:
    """Energy of the orbit with turning point at ``amplitude``: V(A)."""
    validate_amplitude(potential, amplitude)
    return eval_potential(potential, amplitude)


def omega_from_wavenumber(omega_cap: float, k: float) -> float:
    """Temporal frequency of a traveling wave: omega = sqrt(Omega^2 + k^2).

    Exact for k = 0 (returns ``omega_cap`` unchanged).
    """
    return math.hypot(omega_cap, k)


@dataclass(frozen=True, slots=True)
class MethodId:
    """Identifies how a frequency was (or should be) computed.

    ``kind`` is one of ``"exact"``, ``"lde"`` (resummed series of order
    ``order``) or ``"lim"`` (harmonic-balance baseline of order 1 or 2).
    """

    kind: str
    order: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "exact":
            if self.order is not None:
                raise DomainError("exact method takes no order")
        elif self.kind == "lde":
            if not (isinstance(self.order, int) and 0 <= self.order <= MAX_LDE_ORDER):
                raise DomainError(
                    f"lde order must be an int in [0, {MAX_LDE_ORDER}], got {self.order!r}"
                )
        elif self.kind == "lim":
            if self.order not in (1, 2):
                raise DomainError(f"lim order must be 1 or 2, got {self.order!r}")
        else:
            raise DomainError(f"unknown method kind {self.kind!r}")

    @classmethod
    def exact(cls) -> "MethodId":
        return cls("exact")

    @classmethod
    def lde(cls, order: int) -> "MethodId":
        return cls("lde", order)

    @classmethod
    def lim(cls, order: int) -> "MethodId":
        return cls("lim", order)

    @property
    def label(self) -> str:
        """Compact text form used in CSV headers and CLI method lists."""
        if self.kind == "exact":
            return "exact"
        return f"{self.kind}{self.order}"

    @classmethod
    def parse(cls, text: str) -> "MethodId":
        """Inverse of :attr:`label` ("exact", "lde3", "lim2", ...)."""
        t = text.strip().lower()
        if t == "exact":
            return cls.exact()
        for kind in ("lde", "lim"):
            if t.startswith(kind):
                suffix = t[len(kind):]
                try:
                    order = int(suffix)
                except ValueError:
                    raise DomainError(f"cannot parse method {text!r}") from None
                return cls(kind, order)
        raise DomainError(f"cannot parse method {text!r}")


@dataclass(frozen=True, slots=True)
class WaveContext:
    """Wavenumber/amplitude pair describing a traveling-wave query."""

    k: float
    A: float

    def __post_init__(self) -> None:
        if not self.A > 0:
            raise DomainError(f"amplitude must be positive, got {self.A!r}")


@dataclass(frozen=True, slots=True)
class DispersionQuery:
    """One frequency request: potential, amplitude, method, tolerance."""

    potential: Potential
    amplitude: float
    method: MethodId
    tol: float = 1e-12

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol!r}")


@dataclass(frozen=True, slots=True)
class DispersionResult:
    """A computed frequency Omega > 0 plus the method that produced it.

    ``diagnostics`` is method-specific (e.g. a convergence report for the
    Duffing series, the quadrature error estimate for the exact oracle) and
    may be None.
    """

    omega_cap: float
    method: MethodId
    diagnostics: object | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.omega_cap) and self.omega_cap > 0):
            raise DomainError(f"frequency must be finite and positive, got {self.omega_cap!r}")
