"""Limiting and perturbative closed-form solutions for strong coupling.

Covers the two dominated-coupling limits (atom-cavity coupling far above
fiber-cavity coupling, and the reverse) plus the perturbative treatment of
the symmetric manifold when the couplings are comparable, in three
variants of increasing sophistication.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .eigen import fiber_dark_amplitudes
from .errors import RegimeWarning
from .model import SystemParams, derive_rates

__all__ = [
    "VARIANTS",
    "PerturbativeModes",
    "atom_dominated_solution",
    "fiber_dominated_solution",
    "perturbative_symmetric",
    "perturbative_cavity_amplitudes",
]

VARIANTS = ("standard", "appendix_alternative", "appendix_refined")


def _damped_cos(gp, gm, p, t):
    # exp(-gp t/2) * [cos(p t) - (gm / 2p) sin(p t)], exponents combined so
    # overdamped (imaginary p) cases cannot overflow
    if p == 0:
        return np.exp(-gp * t / 2) * (1 - gm * t / 2)
    up = np.exp((-gp / 2 + 1j * p) * t)
    dn = np.exp((-gp / 2 - 1j * p) * t)
    return up * (0.5 + 1j * gm / (4 * p)) + dn * (0.5 - 1j * gm / (4 * p))


def _damped_sinc(gp, p, t):
    # exp(-gp t/2) * sin(p t) / p, with the p -> 0 limit t * exp(-gp t/2)
    if p == 0:
        return t * np.exp(-gp * t / 2)
    up = np.exp((-gp / 2 + 1j * p) * t)
    dn = np.exp((-gp / 2 - 1j * p) * t)
    return (up - dn) / (2j * p)


def atom_dominated_solution(params: SystemParams, t) -> tuple:
    """(xi1, alpha1) when the atom-cavity coupling dominates (g >> v).

    The excitation stays in the atom-1 / cavity-1 pair, undergoing damped
    vacuum Rabi oscillation at the rate p.  Validity is not enforced; the
    small parameter is v/g.
    """
    r = derive_rates(params)
    t = np.asarray(t, dtype=float)
    xi1 = _damped_cos(r.gamma_a_plus, r.gamma_a_minus, r.p, t)
    alpha1 = -1j * params.g * _damped_sinc(r.gamma_a_plus, r.p, t)
    return xi1, alpha1


def fiber_dominated_solution(params: SystemParams, t) -> tuple:
    """(xi1, xi2, alpha1, alpha2) when the fiber coupling dominates (v >> g).

    The cavity-dark mode detaches and decays at gamma/2, so half of the
    atomic amplitude relaxes exponentially while the fiber-dark pair
    oscillates; the cavities carry equal and opposite amplitudes,
    alpha2 = -alpha1, at all times.
    """
    r = derive_rates(params)
    gam = params.gamma
    t = np.asarray(t, dtype=float)
    half_dark = 0.5 * np.exp(-gam * t / 2)
    osc = 0.5 * _damped_cos(r.gamma_a_plus, r.gamma_a_minus, r.p, t)
    alpha1 = -0.5j * params.g * _damped_sinc(r.gamma_a_plus, r.p, t)
    return half_dark + osc, half_dark - osc, alpha1, -alpha1


@dataclass
class PerturbativeModes:
    """First-order quasi modes of the symmetric manifold.

    delta_s_plus / delta_s_minus : bright <-> cavity-dark mixing amplitudes
    eigenvalues : estimates per quasi mode {QBS+, QBS-, QCD} for the variant
    f_plus, f_minus, g_dark : time-coefficient functions of the quasi modes
    bs_cross : bright <-> bright first-order cross coefficient (refined only)
    second_order_shifts : eigenvalue corrections (refined only)
    """

    variant: str
    delta_s_plus: complex
    delta_s_minus: complex
    eigenvalues: dict
    f_plus: object = field(repr=False)
    f_minus: object = field(repr=False)
    g_dark: object = field(repr=False)
    bs_cross: complex = 0.0
    second_order_shifts: dict | None = None

    def symmetric_amplitudes(self, t) -> tuple:
        """(S+, S-, D) reconstructed from the quasi-mode time functions."""
        fp, fm, gd = self.f_plus(t), self.f_minus(t), self.g_dark(t)
        dp, dm = self.delta_s_plus, self.delta_s_minus
        return fp - dp * gd, fm - dm * gd, gd + dp * fp + dm * fm


def perturbative_symmetric(params: SystemParams, variant: str = "standard") -> PerturbativeModes:
    """Treat the bright <-> cavity-dark coupling as a perturbation.

    standard            : Gamma_D kept in the unperturbed generator;
                          Delta_S+- = Gamma_SD / (Gamma_D - Gamma_S+/2 -+ i zeta)
    appendix_alternative: Gamma_D moved into the perturbation; the
                          cavity-dark eigenvalue is recovered only as a
                          first-order shift, which costs accuracy
    appendix_refined    : standard placement plus the bright-bright cross
                          term and second-order eigenvalue shifts
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    r = derive_rates(params)
    g, v = params.g, params.v
    zeta, gsp, gsm, gsd, gd = r.zeta, r.gamma_s_plus, r.gamma_s_minus, r.gamma_sd, r.gamma_d
    if zeta < 10 * gsd or v < g / 2:
        warnings.warn(
            f"perturbation regime is weak (zeta={zeta:.3g}, Gamma_SD={gsd:.3g}, "
            f"v/g={v / g if g else np.inf:.3g})",
            RegimeWarning,
        )

    lam_bs_plus = -(gsp / 2 + 1j * zeta)
    lam_bs_minus = -(gsp / 2 - 1j * zeta)
    if variant == "appendix_alternative":
        dp = gsd / (-gsp / 2 - 1j * zeta)
        dm = gsd / (-gsp / 2 + 1j * zeta)
        lam_cd = -gd  # zeroth order 0 plus the first-order shift -Gamma_D
        shifts = None
        cross = 0.0
    else:
        dp = gsd / (gd - gsp / 2 - 1j * zeta)
        dm = gsd / (gd - gsp / 2 + 1j * zeta)
        lam_cd = -gd
        shifts = None
        cross = 0.0
        if variant == "appendix_refined":
            shifts = {
                "QBS+": 1j * gsm**2 / (8 * zeta) + gsd * dp,
                "QBS-": -1j * gsm**2 / (8 * zeta) + gsd * dm,
                "QCD": -gsd * (dp + dm),
            }
            lam_bs_plus += shifts["QBS+"]
            lam_bs_minus += shifts["QBS-"]
            lam_cd += shifts["QCD"]
            cross = -1j * gsm / (4 * zeta)

    eigenvalues = {"QBS+": lam_bs_plus, "QBS-": lam_bs_minus, "QCD": lam_cd}
    fp_amp = (g / 2 - v * dp) / zeta
    fm_amp = (g / 2 - v * dm) / zeta
    gd_amp = (-(g / 2) * (dp + dm) - v) / zeta

    def f_plus(t, _a=fp_amp, _l=lam_bs_plus):
        return _a * np.exp(_l * np.asarray(t, dtype=float))

    def f_minus(t, _a=fm_amp, _l=lam_bs_minus):
        return _a * np.exp(_l * np.asarray(t, dtype=float))

    def g_dark(t, _a=gd_amp, _l=lam_cd):
        return _a * np.exp(_l * np.asarray(t, dtype=float))

    return PerturbativeModes(
        variant, dp, dm, eigenvalues, f_plus, f_minus, g_dark, cross, shifts
    )


def perturbative_cavity_amplitudes(
    params: SystemParams, t, variant: str = "standard"
) -> tuple:
    """(alpha1, alpha2) combining the perturbative symmetric manifold with
    the exact fiber-dark amplitudes.

    The cavity difference alpha1 - alpha2 carries only the anti-symmetric
    manifold, A+ - A-.
    """
    modes = perturbative_symmetric(params, variant)
    t = np.asarray(t, dtype=float)
    fp, fm, gd = modes.f_plus(t), modes.f_minus(t), modes.g_dark(t)
    a_plus, a_minus = fiber_dark_amplitudes(params, t)
    sym = 0.5 * (fp - fm) - 0.5 * (modes.delta_s_plus - modes.delta_s_minus) * gd
    anti = 0.5 * (a_plus - a_minus)
    return sym + anti, sym - anti
