"""Bridges to neighbouring constructions.

Two families connect to the circle approximants: the Ng-Tsang finite
Blaschke products h_m, which solve the Zolotarev ratio problem for the
set pair [-sqrt(ell), sqrt(ell)] versus the outer rays beyond
+-1/sqrt(ell), and the Pade approximant p_n of sqrt(z) at z = 1, which
the sqrt approximant converges to coefficientwise as the arc shrinks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import zolotarev_number
from .approximants import (
    Family,
    FactorParam,
    UnimodularRational,
    ZolotarevFraction,
    build_s,
    coeff_a,
    eval_F_product,
)
from .elliptic import _sncndn, complement, complete_K, require_modulus, solve_lambda
from .errors import BranchError, DomainError


@dataclass(frozen=True)
class BlaschkeProduct:
    """h_m(z; ell) = prod (z - c_j)/(1 - c_j z) with real c_j in (-1, 1)."""

    m: int
    ell: float
    params: tuple[float, ...]

    def as_rational(self) -> UnimodularRational:
        return UnimodularRational(
            0, 0, tuple(FactorParam(c) for c in self.params), Family.H_FAMILY
        )

    def __call__(self, z):
        return self.as_rational()(z)


def blaschke_h(m: int, ell: float) -> BlaschkeProduct:
    """Ng-Tsang product with c_j = sqrt(ell) cn(v_j, ell)/dn(v_j, ell), v_j = (2j-1)K(ell)/m."""
    if not (isinstance(m, int) and m >= 1):
        raise DomainError(f"degree must be a positive integer, got {m!r}")
    require_modulus(ell)
    K = complete_K(ell)
    ell_comp = complement(ell)
    root = math.sqrt(ell)
    params = []
    for j in range(1, m + 1):
        sn, cn, dn = _sncndn((2 * j - 1) * K / m, ell, ell_comp)
        c = root * cn / dn
        if not abs(c) < 1.0:
            raise DomainError(f"Blaschke parameter escaped the disk at j={j}")
        params.append(c)
    return BlaschkeProduct(m, ell, tuple(params))


def _kappa(ell: float) -> float:
    root = math.sqrt(ell)
    return ((1.0 - root) / (1.0 + root)) ** 2


def blaschke_composition_modulus(m: int, ell: float) -> float:
    """The modulus ell-tilde with h_mtilde(h_m(z; ell); ell-tilde) = h_{mtilde m}.

    This is the Zolotarev number of the Ng-Tsang set pair, which a Moebius
    map carries onto the symmetric pair of modulus kappa = ((1 - sqrt(ell))
    / (1 + sqrt(ell)))^2; the number is Moebius-invariant.
    """
    return zolotarev_number(m, math.acos(_kappa(ell)))


def blaschke_s_relation(m: int, ell: float, z: complex) -> tuple[float, float]:
    """Both sides of the identity tying h_m to the sign approximant s_m.

    Left: (1 - ell-tilde)/(1 + ell-tilde) (h_m(z) - 1)/(h_m(z) + 1).
    Right: (s_m(w; Phi) + s_m(w; Phi)^{-1}) / (1 + F_m(kappa; kappa)) where
    cos(Phi) = kappa and w is the unit-circle solution of (w + 1/w)/2 =
    sqrt(kappa) (z - 1)/(z + 1), taking the root with Im w >= 0.  A
    BranchError signals that the Moebius image left [-1, 1], where no
    unit-circle w exists.
    """
    if not (isinstance(m, int) and m >= 1):
        raise DomainError(f"degree must be a positive integer, got {m!r}")
    require_modulus(ell)
    kappa = _kappa(ell)
    z = complex(z)
    if abs(z + 1.0) < 1e-12:
        raise BranchError("z = -1 is the Moebius pole")
    x = math.sqrt(kappa) * (z - 1.0) / (z + 1.0)
    if abs(x.imag) > 1e-9 or abs(x.real) > 1.0:
        raise BranchError(f"Moebius image {x!r} leaves [-1, 1]; no unit-circle w")
    xr = x.real
    w = complex(xr, math.sqrt(max(0.0, (1.0 - xr) * (1.0 + xr))))

    ell_tilde = blaschke_composition_modulus(m, ell)
    h = blaschke_h(m, ell)(z)
    lhs = (1.0 - ell_tilde) / (1.0 + ell_tilde) * (h - 1.0) / (h + 1.0)

    lam_kappa = solve_lambda(kappa, m).lam
    phi = math.acos(kappa)
    sv = build_s(m, phi)(w)
    rhs = (sv + 1.0 / sv) / (1.0 + lam_kappa)
    return lhs.real if isinstance(lhs, complex) else float(lhs), rhs.real


def scaled_F_via_blaschke(m: int, ell: float, z: complex) -> tuple[float, float]:
    """Both sides of the F-form of the same identity (through F_m(x; kappa)).

    Left as in blaschke_s_relation; right is (2/(1 + F_m(kappa; kappa)))
    F_m(x; kappa) at x = sqrt(kappa)(z - 1)/(z + 1).
    """
    if not (isinstance(m, int) and m >= 1):
        raise DomainError(f"degree must be a positive integer, got {m!r}")
    require_modulus(ell)
    kappa = _kappa(ell)
    z = complex(z)
    if abs(z + 1.0) < 1e-12:
        raise BranchError("z = -1 is the Moebius pole")
    x = math.sqrt(kappa) * (z - 1.0) / (z + 1.0)
    if abs(x.imag) > 1e-9:
        raise BranchError(f"Moebius image {x!r} is not real")
    ell_tilde = blaschke_composition_modulus(m, ell)
    h = blaschke_h(m, ell)(z)
    lhs = (1.0 - ell_tilde) / (1.0 + ell_tilde) * (h - 1.0) / (h + 1.0)
    zf = ZolotarevFraction.from_ell(m, kappa)
    rhs = 2.0 / (1.0 + zf.reduction.lam) * eval_F_product(zf, x.real)[0]
    return lhs.real if isinstance(lhs, complex) else float(lhs), rhs


@dataclass(frozen=True)
class PadeApproximant:
    """Type-(n, n) Pade approximant of sqrt(z) at z = 1.

    Coefficients are ascending in z, integer binomial sums normalized so
    the denominator constant term is 1; the poles are -tan^2(j pi/(2n+1)).
    """

    n: int
    numerator: tuple[float, ...]
    denominator: tuple[float, ...]
    poles: tuple[float, ...]

    def __call__(self, z):
        num = sum(c * z**k for k, c in enumerate(self.numerator))
        den = sum(c * z**k for k, c in enumerate(self.denominator))
        return num / den


def pade_p(n: int) -> PadeApproximant:
    """Expand sqrt(z) ((1+sqrt z)^{2n+1} + (1-sqrt z)^{2n+1}) / (...difference...)."""
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    scale = 2 * n + 1  # denominator constant term before normalization
    num = tuple(math.comb(2 * n + 1, 2 * j) / scale for j in range(n + 1))
    den = tuple(math.comb(2 * n + 1, 2 * j + 1) / scale for j in range(n + 1))
    if n == 0:
        return PadeApproximant(0, num, den, ())
    roots = np.roots([math.comb(2 * n + 1, 2 * j + 1) for j in range(n, -1, -1)])
    poles = tuple(sorted(float(r.real) for r in roots))
    return PadeApproximant(n, num, den, poles)


def pade_limit_check(n: int, theta_seq) -> list[float]:
    """Pole-set deviation of the sqrt approximant from p_n along shrinking arcs.

    For each Theta, the sorted poles {-a_j(Theta)} are compared with the
    sorted poles of p_n; the proposition says the deviations tend to 0.
    """
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    target = pade_p(n).poles
    out = []
    for theta in theta_seq:
        if n == 0:
            out.append(0.0)
            continue
        ours = sorted(-coeff_a(j, n, theta) for j in range(1, n + 1))
        out.append(max(abs(a - b) for a, b in zip(ours, target)))
    return out
