"""Independent verification oracles.

These deliberately avoid the elliptic and approximants modules: the
complete integral comes from adaptive quadrature of its defining
integrand, the Jacobi functions from integrating the amplitude equation
d(phi)/dt = sqrt(1 - ell^2 sin^2 phi), and the degree-1 optimality check
from a brute-force scan over the one-parameter factor family, evaluated
with inline complex arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class OracleResult:
    value: float
    estimated_error: float
    evaluations: int


def oracle_K(ell: float) -> OracleResult:
    """K(ell) by adaptive quadrature of (1 - ell^2 sin^2 t)^(-1/2) on [0, pi/2]."""
    if not 0.0 <= ell <= 1.0 - 1e-6:
        raise DomainError(f"oracle_K requires 0 <= ell <= 1 - 1e-6, got {ell!r}")
    e2 = ell * ell

    def f(t: float) -> float:
        s = math.sin(t)
        return 1.0 / math.sqrt(1.0 - e2 * s * s)

    value, abserr, info = integrate.quad(
        f, 0.0, 0.5 * math.pi, epsabs=1e-13, epsrel=1e-13, limit=200, full_output=1
    )
    if abserr > 1e-12:
        raise ConvergenceError(f"quadrature error {abserr!r} above 1e-12 at ell={ell!r}")
    return OracleResult(value, abserr, int(info["neval"]))


def oracle_amplitude(u: float, ell: float) -> OracleResult:
    """The Jacobi amplitude phi(u) from its defining ODE, |u| <= 2 K(ell)."""
    if not 0.0 <= ell <= 1.0 - 1e-6:
        raise DomainError(f"oracle_amplitude requires 0 <= ell <= 1 - 1e-6, got {ell!r}")
    K = oracle_K(ell).value
    if abs(u) > 2.0 * K + 1e-9:
        raise DomainError(f"|u| must not exceed 2K = {2 * K!r}, got {u!r}")
    if u == 0.0:
        return OracleResult(0.0, 0.0, 0)
    e2 = ell * ell

    def rhs(_t, y):
        s = math.sin(y[0])
        return [math.sqrt(1.0 - e2 * s * s)]

    sol = integrate.solve_ivp(
        rhs, (0.0, u), [0.0], method="DOP853", rtol=1e-13, atol=1e-14
    )
    if not sol.success:
        raise ConvergenceError(f"amplitude ODE failed at u={u!r}, ell={ell!r}: {sol.message}")
    phi = float(sol.y[0, -1])
    # |phi| <= pi on the admissible range, so the rtol-controlled global
    # error stays a decade under the advertised tolerance
    return OracleResult(phi, 1e-12, int(sol.nfev))


def oracle_sn(u: float, ell: float) -> OracleResult:
    """sn(u, ell) = sin(phi(u)) through the amplitude ODE."""
    res = oracle_amplitude(u, ell)
    return OracleResult(math.sin(res.value), res.estimated_error, res.evaluations)


def degree1_max_phase_error(a: float, theta: float, samples: int = 8192) -> float:
    """Max over the sqrt arc of |arg((1 + a e^{it})/(e^{it} + a) e^{-it/2})|.

    Dense sampling with a parabolic refinement of the peak; self-contained
    on purpose (this is the measuring stick of the brute-force oracle).
    """
    ts = np.linspace(-2.0 * theta, 2.0 * theta, samples)
    z = np.exp(1j * ts)
    e = np.angle((1.0 + a * z) / (z + a)) - 0.5 * ts
    e = np.abs(np.remainder(e + math.pi, 2.0 * math.pi) - math.pi)
    i = int(np.argmax(e))
    if i == 0 or i == samples - 1:
        return float(e[i])
    y0, y1, y2 = e[i - 1], e[i], e[i + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0.0:
        return float(y1)
    return float(y1 - 0.125 * (y2 - y0) ** 2 / denom)


def oracle_minimax_degree1(theta: float, search_grid: int = 10_000) -> float:
    """Brute-force argmin over a > 0 of the degree-1 sqrt phase error.

    A log-spaced scan over [1e-4, 1e6] followed by a linear zoom around
    the coarse minimum; returns the refined argmin.
    """
    if not 0.0 < theta < 0.5 * math.pi:
        raise DomainError(f"theta must lie in (0, pi/2), got {theta!r}")
    if search_grid < 10_000:
        raise DomainError(f"search_grid must be at least 10^4, got {search_grid!r}")
    grid = np.exp(np.linspace(math.log(1e-4), math.log(1e6), search_grid))
    errors = [degree1_max_phase_error(float(a), theta, 2048) for a in grid]
    i = int(np.argmin(errors))
    lo = grid[max(i - 2, 0)]
    hi = grid[min(i + 2, search_grid - 1)]
    fine = np.linspace(lo, hi, search_grid)
    fine_err = [degree1_max_phase_error(float(a), theta, 8192) for a in fine]
    return float(fine[int(np.argmin(fine_err))])


def degree1_error_curve(theta: float, search_grid: int = 10_000):
    """The coarse scan (a values, max errors), for unimodality inspection."""
    grid = np.exp(np.linspace(math.log(1e-4), math.log(1e6), search_grid))
    return grid, np.array([degree1_max_phase_error(float(a), theta, 2048) for a in grid])
