"""Limiting solutions and the perturbative symmetric manifold."""

import warnings

import numpy as np
import pytest

from fiberqed import (
    RegimeWarning,
    atom_dominated_solution,
    derive_rates,
    fiber_dark_amplitudes,
    fiber_dominated_solution,
    perturbative_cavity_amplitudes,
    perturbative_symmetric,
    symmetric_block,
    symmetric_params,
)

from conftest import FIG3, FIG4, FIG5, GAMMA, atom1_oracle


class TestAtomDominated:
    def test_initial_conditions(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            xi1, alpha1 = atom_dominated_solution(FIG3, np.array([0.0]))
        assert xi1[0] == pytest.approx(1.0)
        assert alpha1[0] == 0.0

    def test_lossless_rabi_oscillation(self):
        params = symmetric_params(g=5.0, v=0.1, kappa=0, kappa_b=0, gamma=0)
        t = np.linspace(0, 10, 500)
        xi1, alpha1 = atom_dominated_solution(params, t)
        assert np.abs(np.abs(xi1) ** 2 + np.abs(alpha1) ** 2 - 1.0).max() < 1e-12

    def test_fig3_matches_oracle(self):
        traj = atom1_oracle(FIG3, t_max=1.5, dt=2e-5, record_every=50)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            xi1, alpha1 = atom_dominated_solution(FIG3, traj.times)
        assert np.abs(xi1 - traj.states[:, 0]).max() < 1e-2
        assert np.abs(alpha1 - traj.states[:, 2]).max() < 1e-2

    def test_error_shrinks_with_coupling_ratio(self):
        # v/g = 0.1, 0.05, 0.02: the limit is approached monotonically
        errors = []
        for v in (5.0, 2.5, 1.0):
            params = symmetric_params(g=50.0, v=v, kappa=1.0, kappa_b=0.01, gamma=GAMMA)
            traj = atom1_oracle(params, t_max=1.4, dt=2e-5, record_every=100)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RegimeWarning)
                xi1, alpha1 = atom_dominated_solution(params, traj.times)
            errors.append(
                max(
                    np.abs(xi1 - traj.states[:, 0]).max(),
                    np.abs(alpha1 - traj.states[:, 2]).max(),
                )
            )
        assert errors[0] > errors[1] > errors[2]


class TestFiberDominated:
    def test_initial_conditions_and_antisymmetry(self):
        t = np.linspace(0, 5, 300)
        xi1, xi2, alpha1, alpha2 = fiber_dominated_solution(FIG4, t)
        assert xi1[0] == pytest.approx(1.0)
        assert xi2[0] == pytest.approx(0.0, abs=1e-15)
        assert np.array_equal(alpha2, -alpha1)
        # atomic pair splits into an exponential dark part and a mirrored rest
        dark = 0.5 * np.exp(-GAMMA * t / 2)
        assert np.abs((xi2 - dark) + (xi1 - dark)).max() < 1e-14

    def test_fig4_matches_oracle(self):
        traj = atom1_oracle(FIG4, t_max=4.0, dt=5e-5, record_every=100)
        xi1, xi2, alpha1, alpha2 = fiber_dominated_solution(FIG4, traj.times)
        assert np.abs(xi1 - traj.states[:, 0]).max() < 2e-2
        assert np.abs(xi2 - traj.states[:, 1]).max() < 2e-2
        assert np.abs(alpha1 - traj.states[:, 2]).max() < 2e-2
        assert np.abs(alpha2 - traj.states[:, 3]).max() < 2e-2

    def test_error_shrinks_with_coupling_ratio(self):
        errors = []
        for g in (5.0, 2.5, 1.0):  # g/v = 0.1, 0.05, 0.02
            params = symmetric_params(g=g, v=50.0, kappa=1.0, kappa_b=0.01, gamma=GAMMA)
            traj = atom1_oracle(params, t_max=1.4, dt=2e-5, record_every=100)
            xi1, _, alpha1, _ = fiber_dominated_solution(params, traj.times)
            errors.append(
                max(
                    np.abs(xi1 - traj.states[:, 0]).max(),
                    np.abs(alpha1 - traj.states[:, 2]).max(),
                )
            )
        assert errors[0] > errors[1] > errors[2]

    def test_critical_damping_is_the_limit_of_the_generic_form(self):
        critical = symmetric_params(g=0.8, v=50.0, kappa=1.0, kappa_b=0.01, gamma=GAMMA)
        nearby = symmetric_params(
            g=np.sqrt(0.8**2 + 1e-8), v=50.0, kappa=1.0, kappa_b=0.01, gamma=GAMMA
        )
        assert derive_rates(critical).p == 0
        t = np.linspace(0.0, 1.4, 400)
        for lim, gen in zip(fiber_dominated_solution(critical, t),
                            fiber_dominated_solution(nearby, t)):
            assert np.abs(lim - gen).max() < 1e-8


class TestPerturbativeSymmetric:
    def test_unperturbed_limit(self):
        # Gamma_SD = 0: no mixing, quasi modes equal normal modes
        params = symmetric_params(g=3.0, v=7.0, kappa=1.0, kappa_b=GAMMA / 2, gamma=GAMMA)
        modes = perturbative_symmetric(params)
        assert modes.delta_s_plus == 0 and modes.delta_s_minus == 0
        r = derive_rates(params)
        assert modes.eigenvalues["QBS+"] == pytest.approx(-r.gamma_s_plus / 2 - 1j * r.zeta)
        assert modes.eigenvalues["QCD"] == pytest.approx(-r.gamma_d)
        # pure decaying oscillations: |S_+(t)| has a constant envelope ratio
        t = np.linspace(0, 2, 50)
        s_plus, _, d = modes.symmetric_amplitudes(t)
        assert np.abs(np.abs(s_plus) - abs(s_plus[0]) * np.exp(-r.gamma_s_plus / 2 * t)).max() < 1e-12
        assert np.abs(np.abs(d) - abs(d[0]) * np.exp(-r.gamma_d * t)).max() < 1e-12

    def test_mixing_amplitudes_are_conjugate_pairs(self, rng):
        for _ in range(20):
            g, v = rng.uniform(1, 20, 2)
            params = symmetric_params(g=g, v=v, kappa=rng.uniform(0, 2),
                                      kappa_b=rng.uniform(0, 2), gamma=GAMMA)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RegimeWarning)
                modes = perturbative_symmetric(params)
            assert modes.delta_s_plus == pytest.approx(np.conj(modes.delta_s_minus))

    def test_standard_mixing_formula(self):
        modes = perturbative_symmetric(FIG5)
        r = derive_rates(FIG5)
        expected = r.gamma_sd / (r.gamma_d - r.gamma_s_plus / 2 - 1j * r.zeta)
        assert modes.delta_s_plus == pytest.approx(expected)

    def test_alternative_variant_shifts_the_dark_eigenvalue(self):
        modes = perturbative_symmetric(FIG5, "appendix_alternative")
        r = derive_rates(FIG5)
        assert modes.delta_s_plus == pytest.approx(
            r.gamma_sd / (-r.gamma_s_plus / 2 - 1j * r.zeta)
        )
        # first-order shift recovers -Gamma_D from a zeroth-order zero
        assert modes.eigenvalues["QCD"] == pytest.approx(-r.gamma_d)
        assert modes.second_order_shifts is None

    def test_refined_variant_terms(self):
        modes = perturbative_symmetric(FIG5, "appendix_refined")
        r = derive_rates(FIG5)
        dp = r.gamma_sd / (r.gamma_d - r.gamma_s_plus / 2 - 1j * r.zeta)
        dm = np.conj(dp)
        assert modes.bs_cross == pytest.approx(-1j * r.gamma_s_minus / (4 * r.zeta))
        shifts = modes.second_order_shifts
        assert shifts["QCD"] == pytest.approx(-r.gamma_sd * (dp + dm))
        assert shifts["QBS+"] == pytest.approx(
            1j * r.gamma_s_minus**2 / (8 * r.zeta) + r.gamma_sd * dp
        )

    def test_fig5_eigenvalues_close_to_exact(self):
        exact = symmetric_block(FIG5)
        modes = perturbative_symmetric(FIG5)
        for j, label in enumerate(exact.labels):
            rel = abs(modes.eigenvalues[label] - exact.eigenvalues[j]) / abs(
                exact.eigenvalues[j]
            )
            assert rel < 1e-2

    def test_refined_beats_standard_at_fig5(self):
        exact = symmetric_block(FIG5)
        std = perturbative_symmetric(FIG5, "standard")
        ref = perturbative_symmetric(FIG5, "appendix_refined")
        for j, label in enumerate(exact.labels):
            err_std = abs(std.eigenvalues[label] - exact.eigenvalues[j])
            err_ref = abs(ref.eigenvalues[label] - exact.eigenvalues[j])
            assert err_ref <= err_std

    def test_regime_warning(self):
        with pytest.warns(RegimeWarning):
            perturbative_symmetric(FIG3)  # v/g = 0.02, far outside validity
        with warnings.catch_warnings():
            warnings.simplefilter("error", RegimeWarning)
            perturbative_symmetric(FIG5)  # comfortably inside: no warning

    def test_unknown_variant_rejected(self):
        with pytest.raises(ValueError, match="variant"):
            perturbative_symmetric(FIG5, "bogus")


class TestPerturbativeCavityAmplitudes:
    def test_collapses_to_plain_sum_without_mixing(self):
        params = symmetric_params(g=3.0, v=7.0, kappa=1.0, kappa_b=GAMMA / 2, gamma=GAMMA)
        t = np.linspace(0, 3, 200)
        modes = perturbative_symmetric(params)
        a1, a2 = perturbative_cavity_amplitudes(params, t)
        a_plus, a_minus = fiber_dark_amplitudes(params, t)
        f_diff = modes.f_plus(t) - modes.f_minus(t)
        assert np.abs(a1 - 0.5 * (f_diff + (a_plus - a_minus))).max() < 1e-14
        assert np.abs(a2 - 0.5 * (f_diff - (a_plus - a_minus))).max() < 1e-14

    def test_cavity_difference_is_purely_antisymmetric(self):
        t = np.linspace(0, 2, 300)
        a1, a2 = perturbative_cavity_amplitudes(FIG5, t)
        a_plus, a_minus = fiber_dark_amplitudes(FIG5, t)
        assert np.abs((a1 - a2) - (a_plus - a_minus)).max() < 1e-14

    def test_fig5_matches_oracle(self):
        traj = atom1_oracle(FIG5, t_max=1.4, dt=2e-5, record_every=100)
        a1, a2 = perturbative_cavity_amplitudes(FIG5, traj.times)
        assert np.abs(a1 - traj.states[:, 2]).max() < 2e-2
        assert np.abs(a2 - traj.states[:, 3]).max() < 2e-2
