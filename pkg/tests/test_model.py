"""Parameter validation, derived rates and the bare <-> normal basis maps."""

import numpy as np
import pytest

from fiberqed import (
    BareState,
    NonSymmetric,
    NormalState,
    SystemParams,
    bare_to_normal,
    derive_rates,
    normal_mode_matrix,
    normal_to_bare,
    single_excitation,
    symmetric_params,
)

from conftest import FIG3, GAMMA, caption_params


def random_params(rng):
    g, v = rng.uniform(0.5, 20, 2)
    kappa, kappa_b, gamma = rng.uniform(0.0, 5, 3)
    return symmetric_params(g=g, v=v, kappa=kappa, kappa_b=kappa_b, gamma=gamma)


def random_bare(rng):
    z = rng.normal(size=5) + 1j * rng.normal(size=5)
    return BareState.from_array(z / np.linalg.norm(z))


class TestSystemParams:
    def test_negative_rate_rejected(self):
        with pytest.raises(ValueError, match="gamma"):
            symmetric_params(g=1, v=1, kappa=1, kappa_b=0.1, gamma=-1)

    def test_nonzero_detuning_rejected(self):
        with pytest.raises(ValueError, match="detuning"):
            symmetric_params(g=1, v=1, kappa=1, kappa_b=0.1, gamma=1, detuning=0.5)

    def test_symmetric_predicate(self):
        assert FIG3.symmetric()
        assert not SystemParams(1, 2, 1, 1, 1, 1, 0.1, 1).symmetric()
        assert not SystemParams(1, 1, 1, 1, 1, 1.5, 0.1, 1).symmetric()

    def test_common_value_accessors_require_symmetry(self):
        lopsided = SystemParams(1, 2, 1, 1, 1, 1, 0.1, 1)
        with pytest.raises(NonSymmetric):
            _ = lopsided.g

    def test_single_excitation_names(self):
        assert single_excitation("atom1").xi1 == 1
        assert single_excitation("fiber").beta == 1
        with pytest.raises(ValueError):
            single_excitation("laser")


class TestDerivedRates:
    def test_gamma_sd_vanishes_at_kappa_b_gamma_half(self):
        # the (gamma/2 - kappa_b) factor cancels exactly
        params = symmetric_params(g=3, v=7, kappa=1, kappa_b=GAMMA / 2, gamma=GAMMA)
        assert derive_rates(params).gamma_sd == 0.0

    def test_fiber_dark_rates(self):
        r = derive_rates(caption_params(0.01, 1.0, 10.0, 10.0))
        assert r.gamma_a_plus == pytest.approx(3.6, abs=1e-12)
        assert r.gamma_a_minus == pytest.approx(1.6, abs=1e-12)

    def test_splitting_fig3(self):
        assert derive_rates(FIG3).zeta == pytest.approx(np.sqrt(2502.0), rel=1e-15)

    def test_splitting_bounds(self, rng):
        for _ in range(50):
            params = random_params(rng)
            r = derive_rates(params)
            assert r.zeta >= params.g - 1e-12
            assert r.zeta >= np.sqrt(2) * params.v - 1e-12
            assert r.gamma_a_plus >= abs(r.gamma_a_minus) - 1e-12

    def test_p_identity_and_branch(self, rng):
        for _ in range(50):
            params = random_params(rng)
            r = derive_rates(params)
            # complex identity p^2 + (Gamma_A-/2)^2 = g^2
            assert abs(r.p**2 + (r.gamma_a_minus / 2) ** 2 - params.g**2) < 1e-10
            if params.g < abs(r.gamma_a_minus) / 2:
                assert r.p.real == 0.0 and r.p.imag > 0.0

    def test_nonsymmetric_rejected(self):
        with pytest.raises(NonSymmetric):
            derive_rates(SystemParams(1, 2, 1, 1, 1, 1, 0.1, 1))

    def test_zero_couplings_rejected(self):
        with pytest.raises(ValueError, match="g = v = 0"):
            derive_rates(symmetric_params(g=0, v=0, kappa=1, kappa_b=0.1, gamma=1))


class TestBasisMaps:
    def test_atom1_initial_conditions(self):
        n = bare_to_normal(single_excitation("atom1"), FIG3)
        g, v = FIG3.g, FIG3.v
        zeta = derive_rates(FIG3).zeta
        assert n.s_plus == pytest.approx(g / (2 * zeta))
        assert n.s_minus == pytest.approx(g / (2 * zeta))
        assert n.a_plus == pytest.approx(0.5)
        assert n.a_minus == pytest.approx(0.5)
        assert n.d == pytest.approx(-v / zeta)

    def test_fiber_initial_conditions(self):
        n = bare_to_normal(single_excitation("fiber"), FIG3)
        zeta = derive_rates(FIG3).zeta
        assert n.s_plus == pytest.approx(FIG3.v / zeta)
        assert n.a_plus == 0 and n.a_minus == 0
        assert n.d == pytest.approx(FIG3.g / zeta)

    def test_symmetric_cavity_state(self):
        state = BareState(0, 0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0)
        n = bare_to_normal(state, FIG3)
        assert abs(n.a_plus) < 1e-15 and abs(n.a_minus) < 1e-15 and abs(n.d) < 1e-15
        assert n.s_plus == pytest.approx(1 / np.sqrt(2))
        assert n.s_minus == pytest.approx(-1 / np.sqrt(2))

    def test_cavity_dark_state_in_bare_basis(self):
        bare = normal_to_bare(NormalState(0, 0, 0, 0, 1), FIG3)
        zeta = derive_rates(FIG3).zeta
        assert bare.xi1 == pytest.approx(-FIG3.v / zeta)
        assert bare.xi2 == pytest.approx(-FIG3.v / zeta)
        assert bare.alpha1 == 0 and bare.alpha2 == 0
        assert bare.beta == pytest.approx(FIG3.g / zeta)

    def test_equal_fiber_dark_amplitudes_cancel_in_cavities(self):
        bare = normal_to_bare(NormalState(0, 0, 0.5, 0.5, 0), FIG3)
        assert bare.alpha1 == 0 and bare.alpha2 == 0

    def test_round_trip_identity(self, rng):
        for _ in range(100):
            params = random_params(rng)
            state = random_bare(rng)
            back = normal_to_bare(bare_to_normal(state, params), params)
            assert np.abs(back.to_array() - state.to_array()).max() < 1e-12

    def test_norm_preserved(self, rng):
        for _ in range(20):
            params = random_params(rng)
            state = random_bare(rng)
            assert bare_to_normal(state, params).norm_sq() == pytest.approx(
                state.norm_sq(), abs=1e-13
            )

    def test_transform_is_orthogonal(self, rng):
        for _ in range(20):
            mat = normal_mode_matrix(random_params(rng))
            assert np.abs(mat @ mat.T - np.eye(5)).max() < 1e-14

    def test_nonsymmetric_rejected(self):
        lopsided = SystemParams(1, 2, 1, 1, 1, 1, 0.1, 1)
        with pytest.raises(NonSymmetric):
            bare_to_normal(single_excitation("atom1"), lopsided)
