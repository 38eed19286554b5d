"""Physical parameters, amplitude bases and derived decay rates.

The system is a pair of atom-cavity units linked by a single fiber mode:
five coupled oscillators carrying at most one excitation.  All rates and
coupling strengths are stored in angular units of 2*pi*MHz (the numbers
quoted in the figure captions), and times are in the conjugate unit so
that ``exp(-rate * t)`` uses the stored values directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonSymmetric

__all__ = [
    "SystemParams",
    "BareState",
    "NormalState",
    "DerivedRates",
    "symmetric_params",
    "single_excitation",
    "derive_rates",
    "normal_mode_matrix",
    "bare_to_normal",
    "normal_to_bare",
]


@dataclass(frozen=True)
class SystemParams:
    """All physical rates of the five-mode model (units of 2*pi*MHz).

    g1, g2   : atom-cavity coupling strengths
    v1, v2   : fiber-cavity coupling strengths
    kappa1, kappa2 : cavity field decay rates
    kappa_b  : fiber field decay rate
    gamma    : atomic energy decay rate
    detuning : atom-cavity detuning; only the resonant case (0) is supported
    """

    g1: float
    g2: float
    v1: float
    v2: float
    kappa1: float
    kappa2: float
    kappa_b: float
    gamma: float
    detuning: float = 0.0

    def __post_init__(self):
        for name in ("g1", "g2", "v1", "v2", "kappa1", "kappa2", "kappa_b", "gamma"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {value}")
        if self.detuning != 0.0:
            raise ValueError("only the resonant case detuning = 0 is supported")

    def symmetric(self) -> bool:
        """True iff g1=g2, v1=v2 and kappa1=kappa2 (exact comparison)."""
        return self.g1 == self.g2 and self.v1 == self.v2 and self.kappa1 == self.kappa2

    def require_symmetric(self) -> None:
        if not self.symmetric():
            raise NonSymmetric(
                "operation is defined for the symmetric configuration only "
                f"(g1={self.g1}, g2={self.g2}, v1={self.v1}, v2={self.v2}, "
                f"kappa1={self.kappa1}, kappa2={self.kappa2})"
            )

    # Common values for the symmetric case.
    @property
    def g(self) -> float:
        self.require_symmetric()
        return self.g1

    @property
    def v(self) -> float:
        self.require_symmetric()
        return self.v1

    @property
    def kappa(self) -> float:
        self.require_symmetric()
        return self.kappa1


def symmetric_params(g, v, kappa, kappa_b, gamma, detuning=0.0) -> SystemParams:
    """Build a symmetric parameter set (both units identical)."""
    return SystemParams(g, g, v, v, kappa, kappa, kappa_b, gamma, detuning)


@dataclass(frozen=True)
class BareState:
    """Probability amplitudes of the physical modes.

    xi1, xi2     : atom amplitudes
    alpha1, alpha2 : cavity amplitudes
    beta         : fiber amplitude
    """

    xi1: complex
    xi2: complex
    alpha1: complex
    alpha2: complex
    beta: complex

    def to_array(self) -> np.ndarray:
        return np.array(
            [self.xi1, self.xi2, self.alpha1, self.alpha2, self.beta], dtype=complex
        )

    @classmethod
    def from_array(cls, arr) -> "BareState":
        return cls(*(complex(x) for x in np.asarray(arr, dtype=complex)))

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.to_array()) ** 2))


@dataclass(frozen=True)
class NormalState:
    """Probability amplitudes of the normal modes (symmetric case).

    s_plus, s_minus : bright-state amplitudes
    a_plus, a_minus : fiber-dark amplitudes
    d               : cavity-dark amplitude
    """

    s_plus: complex
    s_minus: complex
    a_plus: complex
    a_minus: complex
    d: complex

    def to_array(self) -> np.ndarray:
        return np.array(
            [self.s_plus, self.s_minus, self.a_plus, self.a_minus, self.d],
            dtype=complex,
        )

    @classmethod
    def from_array(cls, arr) -> "NormalState":
        return cls(*(complex(x) for x in np.asarray(arr, dtype=complex)))

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.to_array()) ** 2))


_SINGLE = {
    "atom1": (1, 0, 0, 0, 0),
    "atom2": (0, 1, 0, 0, 0),
    "cavity1": (0, 0, 1, 0, 0),
    "cavity2": (0, 0, 0, 1, 0),
    "fiber": (0, 0, 0, 0, 1),
}


def single_excitation(mode: str) -> BareState:
    """Bare state with one excitation in the named mode."""
    try:
        return BareState(*_SINGLE[mode])
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; choose from {sorted(_SINGLE)}") from None


@dataclass(frozen=True)
class DerivedRates:
    """Normal-mode splitting, oscillation parameter and decay rates.

    zeta : bright-state splitting sqrt(g^2 + 2 v^2)
    p    : anti-symmetric manifold oscillation parameter
           sqrt(g^2 - (Gamma_A-/2)^2); stored complex, Im(p) >= 0 when
           overdamped so the critical point is crossed continuously
    gamma_s_plus / gamma_s_minus : bright-state decay / cross-damping
    gamma_a_plus / gamma_a_minus : fiber-dark decay / cross-damping
    gamma_sd : bright <-> cavity-dark coupling rate
    gamma_d  : cavity-dark decay rate
    """

    zeta: float
    p: complex
    gamma_s_plus: float
    gamma_s_minus: float
    gamma_a_plus: float
    gamma_a_minus: float
    gamma_sd: float
    gamma_d: float


def derive_rates(params: SystemParams) -> DerivedRates:
    """Decay rates of the five normal modes for a symmetric parameter set."""
    params.require_symmetric()
    g, v = params.g, params.v
    kappa, kappa_b, gamma = params.kappa, params.kappa_b, params.gamma
    zeta_sq = g * g + 2 * v * v
    if zeta_sq == 0.0:
        raise ValueError("normal modes are undefined when g = v = 0")
    zeta = np.sqrt(zeta_sq)
    mix = (g * g * gamma / 2 + 2 * v * v * kappa_b) / zeta_sq
    gamma_a_minus = gamma / 2 - kappa
    # branch: p real when underdamped, positive imaginary when overdamped
    p = np.sqrt(complex(g * g - (gamma_a_minus / 2) ** 2))
    return DerivedRates(
        zeta=float(zeta),
        p=complex(p),
        gamma_s_plus=mix + kappa,
        gamma_s_minus=mix - kappa,
        gamma_a_plus=gamma / 2 + kappa,
        gamma_a_minus=gamma_a_minus,
        gamma_sd=(gamma / 2 - kappa_b) * v * g / zeta_sq,
        gamma_d=(gamma * v * v + g * g * kappa_b) / zeta_sq,
    )


def normal_mode_matrix(params: SystemParams) -> np.ndarray:
    """Orthogonal map from bare to normal amplitudes.

    Rows are (S+, S-, A+, A-, D) expressed over columns
    (xi1, xi2, alpha1, alpha2, beta); the inverse map is the transpose.
    """
    params.require_symmetric()
    g, v = params.g, params.v
    zeta_sq = g * g + 2 * v * v
    if zeta_sq == 0.0:
        raise ValueError("normal modes are undefined when g = v = 0")
    zeta = np.sqrt(zeta_sq)
    gz = g / (2 * zeta)
    vz = v / zeta
    return np.array(
        [
            [gz, gz, 0.5, 0.5, vz],
            [gz, gz, -0.5, -0.5, vz],
            [0.5, -0.5, 0.5, -0.5, 0.0],
            [0.5, -0.5, -0.5, 0.5, 0.0],
            [-vz, -vz, 0.0, 0.0, g / zeta],
        ]
    )


def bare_to_normal(state: BareState, params: SystemParams) -> NormalState:
    """Project a bare state onto the normal-mode amplitudes (norm preserving)."""
    return NormalState.from_array(normal_mode_matrix(params) @ state.to_array())


def normal_to_bare(state: NormalState, params: SystemParams) -> BareState:
    """Exact inverse of :func:`bare_to_normal`."""
    return BareState.from_array(normal_mode_matrix(params).T @ state.to_array())
