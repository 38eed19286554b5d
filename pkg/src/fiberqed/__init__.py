"""Single-excitation dynamics and emission spectra of two fiber-linked
atom-cavity units.

The package models five coupled oscillators (two atoms, two nanofiber
cavities and the connecting fiber) sharing one quantum.  It provides the
exact brute-force time evolution, the normal-mode picture, the quasi-mode
diagonalization with closed-form fiber-dark amplitudes, limiting and
perturbative solutions, and the Lorentzian + interference decomposition
of every emission spectrum.  All rates are in angular units of 2*pi*MHz.
"""

from .errors import (
    ConfigInvalid,
    DegenerateBlock,
    DivergentIntegral,
    GridInvalid,
    LabelAmbiguous,
    NonSymmetric,
    RegimeWarning,
)
from .model import (
    BareState,
    DerivedRates,
    NormalState,
    SystemParams,
    bare_to_normal,
    derive_rates,
    normal_mode_matrix,
    normal_to_bare,
    single_excitation,
    symmetric_params,
)
from .dynamics import (
    CHANNELS,
    IntegratorConfig,
    Trajectory,
    bare_generator,
    evolve_bare,
    evolve_normal,
    normal_generator,
    occupations,
)
from .eigen import (
    MODE_LABELS,
    QuasiModeDecomposition,
    antisymmetric_block,
    fiber_dark_amplitudes,
    full_decomposition,
    symmetric_block,
)
from .perturb import (
    PerturbativeModes,
    atom_dominated_solution,
    fiber_dominated_solution,
    perturbative_cavity_amplitudes,
    perturbative_symmetric,
)
from .spectra import (
    SpectralTerm,
    SpectrumDecomposition,
    cavity_coefficients,
    channel_spectrum,
    default_omega_grid,
    integrated_spectrum,
    interference_integral,
    interference_term,
    lorentzian_approximation,
    lorentzian_integral,
    spectral_function,
)

__version__ = "0.1.0"
