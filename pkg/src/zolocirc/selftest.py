"""Acceptance sweep: every analytic identity the library promises, end to end.

Each criterion function returns (name, ok, detail).  The CLI selftest
command runs them all and reports one line per criterion; the test suite
asserts them individually.  Criterion tolerances are pinned here.

Bound comparisons carry a 1e-12 absolute allowance: at the far end of the
sweep (degree 8 at Theta = 0.5) the rho-form bound is analytically sharp
to a relative 1e-14, which is below the rounding noise of the measured
amplitude, so a strict float comparison would be a coin toss.
"""

from __future__ import annotations

import math
import time

import numpy as np

from . import analysis, approximants, composition, connections, elliptic, oracle

THETA_SWEEP = (0.5, 1.0, 1.4, 0.5 * math.pi - 0.1)
M_SWEEP = tuple(range(1, 9))
N_SWEEP = tuple(range(0, 5))
_BOUND_SLACK = 1e-12


def _grid_for(count: int) -> int:
    return max(64, 16 * (count + 1))


def criterion_1():
    """Measured max phase error equals arccos(lambda) to 1e-9, within 5 s."""
    t0 = time.time()
    worst = 0.0
    for theta in THETA_SWEEP:
        for m in M_SWEEP:
            rep = analysis.phase_error_sign(approximants.build_s(m, theta), theta, _grid_for(m))
            worst = max(worst, abs(rep.max_error - rep.predicted))
        for n in N_SWEEP:
            rep = analysis.phase_error_sqrt(approximants.build_r(n, theta), theta, _grid_for(2 * n + 1))
            worst = max(worst, abs(rep.max_error - rep.predicted))
    elapsed = time.time() - t0
    ok = worst <= 1e-9 and elapsed <= 5.0
    return ("optimal-error identity", ok, f"worst |measured-predicted| = {worst:.3e}, {elapsed:.2f} s")


def criterion_2():
    """Alternation counts m+1 per arc / 2n+2, endpoints attained, grid-stable."""
    bad = []
    for theta in THETA_SWEEP:
        for m in M_SWEEP:
            s = approximants.build_s(m, theta)
            rep = analysis.phase_error_sign(s, theta, _grid_for(m))
            rep2 = analysis.phase_error_sign(s, theta, 2 * _grid_for(m))
            if rep.arcs != (m + 1, m + 1) or rep2.arcs != rep.arcs:
                bad.append(f"z6 m={m} theta={theta:.3f}: {rep.arcs}/{rep2.arcs}")
                continue
            angles = [x for x, _ in rep.extrema]
            ends = (-theta, theta, math.pi - theta, math.pi + theta)
            if any(min(abs(a - e) for a in angles) > 1e-8 for e in ends):
                bad.append(f"z6 m={m} theta={theta:.3f}: endpoint not attained")
        for n in N_SWEEP:
            r = approximants.build_r(n, theta)
            rep = analysis.phase_error_sqrt(r, theta, _grid_for(2 * n + 1))
            rep2 = analysis.phase_error_sqrt(r, theta, 2 * _grid_for(2 * n + 1))
            if rep.arcs != (2 * n + 2,) or rep2.arcs != rep.arcs:
                bad.append(f"z5 n={n} theta={theta:.3f}: {rep.arcs}/{rep2.arcs}")
                continue
            angles = [x for x, _ in rep.extrema]
            if any(min(abs(a - e) for a in angles) > 1e-8 for e in (-2 * theta, 2 * theta)):
                bad.append(f"z5 n={n} theta={theta:.3f}: endpoint not attained")
    return ("equioscillation certificate", not bad, "; ".join(bad) if bad else "all counts exact and stable")


def criterion_3():
    """Decay bounds sit above the measured error; the Z-number chain closes."""
    bad = []
    worst_chain = 0.0
    for theta in THETA_SWEEP:
        ell, ell_comp = math.cos(theta), math.sin(theta)
        for m in M_SWEEP:
            red = elliptic.solve_lambda(ell, m, ell_comp)
            measured = math.asin(red.lam_comp)
            b_rho, b_sec = analysis.error_bounds(m, theta, "z6")
            if not (measured <= b_rho + _BOUND_SLACK and b_rho <= b_sec * (1.0 + 1e-15)):
                bad.append(f"z6 m={m} theta={theta:.3f}")
            chain = abs(analysis.phase_error_from_Z(analysis.zolotarev_number(m, theta)) - measured)
            worst_chain = max(worst_chain, chain)
        for n in N_SWEEP:
            red = elliptic.solve_lambda(ell, 2 * n + 1, ell_comp)
            measured = math.asin(red.lam_comp)
            b_rho, b_sec = analysis.error_bounds(n, theta, "z5")
            if not (measured <= b_rho + _BOUND_SLACK and b_rho <= b_sec * (1.0 + 1e-15)):
                bad.append(f"z5 n={n} theta={theta:.3f}")
    ok = not bad and worst_chain <= 1e-10
    detail = f"worst Z-chain deviation = {worst_chain:.3e}" + ("; " + "; ".join(bad) if bad else "")
    return ("error-bound ordering", ok, detail)


def criterion_4():
    """s_{2n+1}(z)^((-1)^n) r_n(z^2) = z on 256 circle points, 1e-11."""
    worst = 0.0
    angles = 2.0 * math.pi * (np.arange(256) + 0.5) / 256
    z = np.exp(1j * angles)
    for theta in (0.5, 1.0, 1.4):
        for n in range(0, 4):
            s = approximants.build_s(2 * n + 1, theta)
            r = approximants.build_r(n, theta)
            sv = s(z)
            if n % 2:
                sv = 1.0 / sv
            worst = max(worst, float(np.max(np.abs(sv * r(z * z) - z))))
    return ("structural identity", worst <= 1e-11, f"worst residual = {worst:.3e}")


def criterion_5():
    """Factored product vs F/G lift (1e-11); direct vs product F (1e-10)."""
    worst_lift = 0.0
    for theta in THETA_SWEEP:
        for m in M_SWEEP:
            s = approximants.build_s(m, theta)
            for k in range(100):
                ang = -math.pi + 2.0 * math.pi * (k + 0.41) / 100
                z = complex(math.cos(ang), math.sin(ang))
                if m % 2 and abs(z.real) < 1e-6:
                    continue
                worst_lift = max(worst_lift, abs(s(z) - approximants.eval_s_via_FG(m, theta, z)))
    worst_fg = 0.0
    for theta in (0.5, 1.0, 1.4):
        for m in M_SWEEP:
            zf = approximants.ZolotarevFraction.from_theta(m, theta)
            for x in np.linspace(-1.0, 1.0, 201):
                fd = approximants.eval_F_direct(zf, float(x))
                fp = approximants.eval_F_product(zf, float(x))
                worst_fg = max(worst_fg, abs(fd[0] - fp[0]), abs(fd[1] - fp[1]))
    ok = worst_lift <= 1e-11 and worst_fg <= 1e-10
    return ("circle-lift agreement", ok, f"lift = {worst_lift:.3e}, direct-vs-product = {worst_fg:.3e}")


def criterion_6():
    """Composition residuals: s-law 1e-9, r-law 1e-9, F-law 1e-10."""
    angles = 2.0 * math.pi * (np.arange(200) + 0.37) / 200
    z = np.exp(1j * angles)
    worst_s = 0.0
    for m_tilde, m, theta in ((2, 2, 1.0), (2, 3, 1.0), (3, 3, 1.0), (3, 5, 1.0),
                              (3, 3, 0.5 * math.pi - 0.01)):
        left, right = composition.compose_s(m_tilde, m, theta, z)
        worst_s = max(worst_s, float(np.max(np.abs(left - right))))
    worst_r = 0.0
    for n_tilde, n in ((1, 1), (1, 2), (2, 1)):
        left, right = composition.compose_r(n_tilde, n, 1.0, z)
        worst_r = max(worst_r, float(np.max(np.abs(left - right))))
    worst_f = 0.0
    for m_tilde, m, ell in ((2, 2, 0.5), (2, 3, 0.3), (3, 2, 0.7)):
        for x in np.linspace(-1.0, 1.0, 101):
            left, right = composition.compose_F(m_tilde, m, ell, float(x))
            worst_f = max(worst_f, abs(left - right))
    ok = worst_s <= 1e-9 and worst_r <= 1e-9 and worst_f <= 1e-10
    return ("composition laws", ok, f"s = {worst_s:.3e}, r = {worst_r:.3e}, F = {worst_f:.3e}")


def criterion_7():
    """Pade poles exact, pole-set convergence, Blaschke bridges."""
    worst_pade = 0.0
    for n in range(1, 5):
        poles = connections.pade_p(n).poles
        target = sorted(-math.tan(j * math.pi / (2 * n + 1)) ** 2 for j in range(1, n + 1))
        worst_pade = max(worst_pade, max(abs(a - b) for a, b in zip(poles, target)))
    worst_dev = max(connections.pade_limit_check(n, [1e-3])[0] for n in range(1, 5))
    worst_h = 0.0
    for m_tilde, m, ell in ((2, 2, 0.25), (2, 3, 0.25), (3, 2, 0.4)):
        lt = connections.blaschke_composition_modulus(m, ell)
        h_in = connections.blaschke_h(m, ell)
        h_out = connections.blaschke_h(m_tilde, lt)
        h_dir = connections.blaschke_h(m_tilde * m, ell)
        for k in range(100):
            zz = complex(math.cos(2 * math.pi * (k + 0.43) / 100),
                         math.sin(2 * math.pi * (k + 0.43) / 100))
            worst_h = max(worst_h, abs(h_out(h_in(zz)) - h_dir(zz)))
    worst_rel = 0.0
    for ell in (0.25, 0.5):
        root = math.sqrt(ell)
        pts = list(np.linspace(-0.999 * root, 0.999 * root, 16)) + \
              list(np.linspace(1.001 / root, 3.0 / root, 8)) + \
              list(-np.linspace(1.001 / root, 3.0 / root, 8))
        for zz in pts:
            lhs, rhs = connections.blaschke_s_relation(2, ell, float(zz))
            lhs2, rhs2 = connections.scaled_F_via_blaschke(2, ell, float(zz))
            worst_rel = max(worst_rel, abs(lhs - rhs), abs(lhs2 - rhs2), abs(rhs - rhs2))
    ok = worst_pade <= 1e-12 and worst_dev <= 1e-4 and worst_h <= 1e-9 and worst_rel <= 1e-9
    return (
        "pade and blaschke connections",
        ok,
        f"pade = {worst_pade:.3e}, pole-dev = {worst_dev:.3e}, h-comp = {worst_h:.3e}, s<->h = {worst_rel:.3e}",
    )


def criterion_8():
    """Main paths agree with the independent oracles."""
    worst_k = 0.0
    for ell in [0.0] + [i / 20 for i in range(1, 20)]:
        worst_k = max(worst_k, abs(oracle.oracle_K(ell).value - elliptic.complete_K(ell)))
    worst_j = 0.0
    for ell in (0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95):
        quarter = elliptic.complete_K(ell)
        for frac in (-2.0, -1.5, -0.7, -0.2, 0.3, 0.6, 1.0, 1.4, 1.9):
            u = frac * quarter
            phi = oracle.oracle_amplitude(u, ell).value
            sn, cn, dn = elliptic.jacobi_sncndn(u, ell)
            worst_j = max(
                worst_j,
                abs(sn - math.sin(phi)),
                abs(cn - math.cos(phi)),
                abs(dn - math.sqrt(1.0 - (ell * math.sin(phi)) ** 2)),
            )
    theta = 1.0
    a_star = oracle.oracle_minimax_degree1(theta, 10_000)
    a_ref = approximants.coeff_a(1, 1, theta)
    cell = (math.log(1e6) - math.log(1e-4)) / (10_000 - 1)
    log_gap = abs(math.log(a_star) - math.log(a_ref))
    red = elliptic.solve_lambda(math.cos(theta), 3, math.sin(theta))
    err_gap = abs(oracle.degree1_max_phase_error(a_star, theta, 16384) - math.asin(red.lam_comp))
    ok = worst_k <= 1e-11 and worst_j <= 1e-11 and log_gap <= cell and err_gap <= 1e-6
    return (
        "oracle agreement",
        ok,
        f"K = {worst_k:.3e}, jacobi = {worst_j:.3e}, argmin log-gap = {log_gap:.2e} "
        f"(cell {cell:.2e}), minimax error gap = {err_gap:.2e}",
    )


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
)


def run_all():
    """Run every criterion; returns a list of (index, name, ok, detail)."""
    out = []
    for i, fn in enumerate(CRITERIA, start=1):
        name, ok, detail = fn()
        out.append((i, name, ok, detail))
    return out
