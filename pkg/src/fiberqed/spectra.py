"""Emission spectra of the five decay channels and their decomposition.

Because every amplitude is a finite sum of decaying exponentials, the
spectrum of each channel is the squared modulus of a closed-form Laplace
transform: a sum of at most five Lorentzians plus pairwise interference
terms that redistribute weight between output ports without changing
positivity of the total.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .eigen import CHANNEL_ROWS, QuasiModeDecomposition
from .errors import DivergentIntegral, GridInvalid
from .model import SystemParams, derive_rates
from .perturb import perturbative_symmetric

__all__ = [
    "SpectralTerm",
    "SpectrumDecomposition",
    "spectral_function",
    "default_omega_grid",
    "channel_spectrum",
    "interference_term",
    "interference_integral",
    "lorentzian_integral",
    "integrated_spectrum",
    "lorentzian_approximation",
    "cavity_coefficients",
]


def spectral_function(omega, lam) -> np.ndarray:
    """One-pole response L(omega, lambda) = 1 / (eta - i(omega - delta)).

    eta = -Re(lambda) and delta = -Im(lambda); this equals the Laplace
    transform kernel 1 / (-i omega - lambda).
    """
    omega = np.asarray(omega, dtype=float)
    return 1.0 / (-lam.real - 1j * (omega + lam.imag))


@dataclass(frozen=True)
class SpectralTerm:
    """One quasi-mode pole of a channel amplitude: chi * L(omega, lambda)."""

    label: str | None
    chi: complex
    lam: complex

    @property
    def eta(self) -> float:
        return -self.lam.real

    @property
    def delta(self) -> float:
        return -self.lam.imag

    def response(self, omega) -> np.ndarray:
        return self.chi * spectral_function(omega, self.lam)


def _channel_prefactor(params: SystemParams, channel: str) -> float:
    if channel in ("atom1", "atom2"):
        return params.gamma / (2 * np.pi)
    if channel == "cavity1":
        return params.kappa1 / np.pi
    if channel == "cavity2":
        return params.kappa2 / np.pi
    if channel == "fiber":
        return params.kappa_b / np.pi
    raise ValueError(f"unknown channel {channel!r}; choose from {sorted(CHANNEL_ROWS)}")


def default_omega_grid(params: SystemParams, n: int = 4001) -> np.ndarray:
    """Uniform grid spanning [-2 zeta - 5 Gamma_max, +2 zeta + 5 Gamma_max]."""
    r = derive_rates(params)
    gamma_max = max(
        r.gamma_s_plus, abs(r.gamma_s_minus), r.gamma_a_plus,
        abs(r.gamma_a_minus), r.gamma_sd, r.gamma_d,
    )
    half = 2 * r.zeta + 5 * gamma_max
    return np.linspace(-half, half, n)


def _check_grid(omega_grid) -> np.ndarray:
    grid = np.asarray(omega_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise GridInvalid("omega grid must be a non-empty 1-d array")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise GridInvalid("omega grid must be strictly increasing")
    return grid


@dataclass
class SpectrumDecomposition:
    """A channel spectrum split into Lorentzians and interference terms.

    amplitude is the closed-form Laplace transform of the channel amplitude
    on the grid; the physical spectrum is prefactor * |amplitude|^2.  The
    identity sum(lorentzians) + sum(interferences) = |amplitude|^2 holds
    pointwise up to rounding.
    """

    channel: str
    prefactor: float
    terms: list
    omega_grid: np.ndarray
    amplitude: np.ndarray = field(repr=False)
    lorentzians: np.ndarray = field(repr=False)
    pairs: tuple = ()
    interferences: np.ndarray = field(repr=False, default=None)

    @property
    def spectrum(self) -> np.ndarray:
        return self.prefactor * np.abs(self.amplitude) ** 2

    @property
    def lorentzian_sum(self) -> np.ndarray:
        return self.lorentzians.sum(axis=0)

    @property
    def interference_sum(self) -> np.ndarray:
        return self.interferences.sum(axis=0)

    def interference(self, label_j, label_k) -> np.ndarray:
        """W term for an unordered pair of mode labels (or indices)."""
        names = [t.label for t in self.terms]
        j = names.index(label_j) if isinstance(label_j, str) else label_j
        k = names.index(label_k) if isinstance(label_k, str) else label_k
        j, k = min(j, k), max(j, k)
        return self.interferences[self.pairs.index((j, k))]


def channel_spectrum(
    decomp: QuasiModeDecomposition, channel: str, omega_grid=None
) -> SpectrumDecomposition:
    """Spectrum of one decay channel from a quasi-mode decomposition.

    Atom channels carry the prefactor gamma/2pi, cavities kappa_i/pi and
    the fiber kappa_b/pi; the squared Laplace transform is evaluated in
    closed form from the chi coefficients and eigenvalues.
    """
    prefactor = _channel_prefactor(decomp.params, channel)
    if omega_grid is None:
        omega_grid = default_omega_grid(decomp.params)
    grid = _check_grid(omega_grid)

    row = decomp.chi_coeffs[CHANNEL_ROWS[channel]]
    labels = decomp.labels if decomp.labels is not None else (None,) * 5
    terms = [
        SpectralTerm(labels[j], complex(row[j]), complex(decomp.eigenvalues[j]))
        for j in range(5)
    ]
    responses = np.array([t.response(grid) for t in terms])
    amplitude = responses.sum(axis=0)
    lorentzians = np.abs(responses) ** 2
    pairs = tuple((j, k) for j in range(5) for k in range(j + 1, 5))
    interferences = np.array(
        [2 * np.real(responses[j] * np.conj(responses[k])) for j, k in pairs]
    )
    return SpectrumDecomposition(
        channel, prefactor, terms, grid, amplitude, lorentzians, pairs, interferences
    )


def interference_term(term_j: SpectralTerm, term_k: SpectralTerm, omega_grid) -> np.ndarray:
    """Real-valued cross term W_jk between two quasi-mode poles.

    W_jk = chi_j chi_k^* L(omega, lam_j) L^*(omega, lam_k) + c.c.; not of a
    fixed sign, it moves spectral weight between output ports.
    """
    grid = _check_grid(omega_grid)
    cross = term_j.response(grid) * np.conj(term_k.response(grid))
    return 2 * np.real(cross)


def interference_integral(term_j: SpectralTerm, term_k: SpectralTerm) -> float:
    """Net frequency-integrated contribution of one interference term.

    Closed form 2 pi chi_j chi_k^* / ((eta_j + eta_k) + i(delta_j - delta_k))
    plus its conjugate; well separated modes (|delta_j - delta_k| large)
    contribute almost nothing regardless of the chi magnitudes.
    """
    eta_sum = term_j.eta + term_k.eta
    if eta_sum <= 0:
        raise DivergentIntegral(f"eta_j + eta_k = {eta_sum} <= 0")
    den = eta_sum + 1j * (term_j.delta - term_k.delta)
    return float(2 * np.real(2 * np.pi * term_j.chi * np.conj(term_k.chi) / den))


def lorentzian_integral(term: SpectralTerm) -> float:
    """Frequency integral of one Lorentzian component, |chi|^2 pi / eta."""
    if term.eta <= 0:
        raise DivergentIntegral(f"eta = {term.eta} <= 0")
    return float(abs(term.chi) ** 2 * np.pi / term.eta)


def integrated_spectrum(spec: SpectrumDecomposition) -> float:
    """Closed-form frequency integral of the full channel spectrum."""
    total = sum(lorentzian_integral(t) for t in spec.terms if t.chi != 0)
    for j, k in spec.pairs:
        if spec.terms[j].chi != 0 and spec.terms[k].chi != 0:
            total += interference_integral(spec.terms[j], spec.terms[k])
    return spec.prefactor * total


def lorentzian_approximation(spec: SpectrumDecomposition) -> np.ndarray:
    """Spectrum with all interference terms dropped (sum of Lorentzians)."""
    return spec.prefactor * spec.lorentzian_sum


def cavity_coefficients(params: SystemParams, variant: str = "standard") -> dict:
    """Perturbative chi coefficients of both cavity channels per quasi mode.

    The fiber-dark entries +-g/4p are exact; bright and cavity-dark entries
    use the perturbative mixing amplitudes.  The two cavities share the
    bright and cavity-dark coefficients and carry opposite-sign fiber-dark
    ones, so their Lorentzian decompositions coincide.
    """
    modes = perturbative_symmetric(params, variant)
    r = derive_rates(params)
    g, v, zeta = params.g, params.v, r.zeta
    dp, dm = modes.delta_s_plus, modes.delta_s_minus
    chi_bs_plus = (g / 2 - v * dp) / (2 * zeta)
    chi_bs_minus = -(g / 2 - v * dm) / (2 * zeta)
    chi_fd = g / (4 * r.p)
    chi_cd = (dp - dm) / (2 * zeta) * ((g / 2) * (dp + dm) + v)
    cavity1 = {
        "QBS+": chi_bs_plus,
        "QBS-": chi_bs_minus,
        "QCD": chi_cd,
        "QFD+": chi_fd,
        "QFD-": -chi_fd,
    }
    cavity2 = dict(cavity1, **{"QFD+": -chi_fd, "QFD-": chi_fd})
    return {"cavity1": cavity1, "cavity2": cavity2}
