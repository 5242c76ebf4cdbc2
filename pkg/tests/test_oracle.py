"""Numerical two-stage optimizer: induced distributions, stage-1 minimum,
stage-2 phase maximization, and agreement with the closed forms."""

import numpy as np
import pytest

from laqc.closed_form import classical_correlations_x, laqc_x
from laqc.oracle import (
    ComplementaryPhases,
    JointDistribution,
    LocalBasisAngles,
    SearchConfig,
    basis_vectors,
    candidate_axes,
    complementary_distribution,
    distribution_mutual_information,
    induced_distribution,
    laqc_numeric,
    maximize_complementary,
    minimize_classical,
)
from laqc.states import (
    DensityMatrix4,
    XStateParams,
    bloch_from_density,
    density_from_bloch,
    werner,
)

from conftest import sample_x_params

FAST = SearchConfig(grid=16, rounds=4, tol=1e-6)


def rho_of(p):
    return density_from_bloch(p.to_fano())


class TestInducedDistribution:
    def test_maximally_mixed_uniform(self):
        d = induced_distribution(
            werner(0.0), LocalBasisAngles(0.7, 1.1, 0.3, 4.0)
        )
        assert np.allclose(d.p, 0.25, atol=1e-14)

    def test_singlet_z_measurement(self):
        d = induced_distribution(werner(1.0), LocalBasisAngles(0, 0, 0, 0))
        assert np.allclose(d.p, [[0, 0.5], [0.5, 0]], atol=1e-14)

    def test_matches_bloch_formula(self, rng):
        # p(ij) = (1/4)[1 + s_i d1.a + s_j d2.b + s_i s_j d1.T.d2]
        for _ in range(100):
            p = sample_x_params(rng)
            rho = rho_of(p)
            fb = bloch_from_density(rho)
            t1, t2 = rng.uniform(0, np.pi, 2)
            f1, f2 = rng.uniform(0, 2 * np.pi, 2)
            d1 = np.array([np.sin(t1) * np.cos(f1), np.sin(t1) * np.sin(f1), np.cos(t1)])
            d2 = np.array([np.sin(t2) * np.cos(f2), np.sin(t2) * np.sin(f2), np.cos(t2)])
            d = induced_distribution(rho, LocalBasisAngles(t1, t2, f1, f2))
            for i, si in enumerate((1, -1)):
                for j, sj in enumerate((1, -1)):
                    expected = (
                        1 + si * d1 @ fb.a + sj * d2 @ fb.b + si * sj * d1 @ fb.T @ d2
                    ) / 4
                    assert abs(d.p[i, j] - expected) < 1e-12

    def test_antisymmetric_exchange_identities(self, rng):
        # R_ii(th1, th2, f1, f2) = R_ii(th2 + pi, th1 + pi, f2, f1)
        # R_ij(th1, th2, f1, f2) = R_ij(th2, th1, f2, f1), i != j
        p = sample_x_params(rng, "anti")
        rho = rho_of(p).matrix

        def R(i, j, t1, t2, f1, f2):
            w = np.kron(basis_vectors(t1, f1)[i], basis_vectors(t2, f2)[j])
            return (w.conj() @ rho @ w).real

        for _ in range(100):
            t1, t2 = rng.uniform(0, np.pi, 2)
            f1, f2 = rng.uniform(0, 2 * np.pi, 2)
            for i in range(2):
                assert abs(
                    R(i, i, t1, t2, f1, f2) - R(i, i, t2 + np.pi, t1 + np.pi, f2, f1)
                ) < 1e-12
            for i, j in ((0, 1), (1, 0)):
                assert abs(R(i, j, t1, t2, f1, f2) - R(i, j, t2, t1, f2, f1)) < 1e-12

    def test_negative_distribution_rejected(self):
        with pytest.raises(ValueError):
            JointDistribution(
                p=np.array([[0.6, -0.1], [0.3, 0.2]]),
                pA=np.zeros(2),
                pB=np.zeros(2),
            )


class TestDistributionMI:
    def test_trivial(self):
        u = JointDistribution(np.full((2, 2), 0.25), None, None)
        assert distribution_mutual_information(u) == 0.0
        d = JointDistribution(np.diag([0.5, 0.5]), None, None)
        assert abs(distribution_mutual_information(d) - 1.0) < 1e-15

    def test_frozen_value(self):
        d = JointDistribution(np.array([[0.4, 0.1], [0.1, 0.4]]), None, None)
        assert abs(distribution_mutual_information(d) - 0.278072) < 1e-6


class TestCandidateAxes:
    def test_canonical_x_state_axes(self):
        rho = rho_of(XStateParams(0.3, 0.3, -0.4, -0.2, 0.1))
        axes = candidate_axes(rho)
        dirs = sorted(tuple(np.round(np.abs(a), 10)) for a in axes)
        assert dirs == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

    def test_bell_diagonal_gets_all_eigendirections(self):
        axes = candidate_axes(werner(0.5))
        assert len(axes) == 3


class TestMinimizeClassical:
    def test_rho_s_picks_theta_zero(self):
        p = XStateParams(0.5, 0.5, -0.5, -0.5, 0.0)
        val, res = minimize_classical(rho_of(p), FAST)
        c_val, c_branch = classical_correlations_x(p)
        assert abs(val - c_val) < 1e-9
        assert res.angles.theta1 < 1e-9

    def test_werner_degenerate(self):
        val, res = minimize_classical(werner(0.5), FAST)
        c_val, _ = classical_correlations_x(
            XStateParams(0, 0, -0.5, -0.5, -0.5)
        )
        assert abs(val - c_val) < 1e-9
        assert res.degenerate

    def test_product_state_zero(self):
        val, res = minimize_classical(werner(0.0), FAST)
        assert abs(val) < 1e-12
        assert res.degenerate

    def test_bounded_by_branch_tuples(self, rng):
        # the minimum never exceeds any of the three canonical branch bases
        for sym in ("sym", "anti"):
            for _ in range(10):
                p = sample_x_params(rng, sym)
                rho = rho_of(p)
                val, _ = minimize_classical(rho, FAST)
                for t, f in ((0.0, 0.0), (np.pi / 2, 0.0), (np.pi / 2, np.pi / 2)):
                    mi = distribution_mutual_information(
                        induced_distribution(rho, LocalBasisAngles(t, t, f, f))
                    )
                    assert val <= mi + 1e-12


class TestMaximizeComplementary:
    def test_singlet_reaches_one(self):
        rho = werner(1.0)
        _, res = minimize_classical(rho, FAST)
        val, _, _ = maximize_complementary(rho, res.angles, FAST)
        assert abs(val - 1.0) < 1e-6

    def test_maximally_mixed_zero(self):
        val, _, deg = maximize_complementary(
            werner(0.0), LocalBasisAngles(0, 0, 0, 0), FAST
        )
        assert abs(val) < 1e-9
        assert deg

    def test_at_least_zero_phases(self):
        p = XStateParams(0.4, 0.4, -0.3, -0.2, 0.1)
        rho = rho_of(p)
        _, res = minimize_classical(rho, FAST)
        val, _, _ = maximize_complementary(rho, res.angles, FAST)
        at_zero = distribution_mutual_information(
            complementary_distribution(rho, res.angles, ComplementaryPhases(0, 0))
        )
        assert val >= at_zero - 1e-12

    def test_theta_zero_phase_degeneracy(self):
        # with theta = 0, phi enters only through Psi = Phi - phi: shifting
        # both phi and Phi by the same amount leaves the distribution fixed
        p = XStateParams(0.5, 0.5, -0.5, -0.5, 0.0)
        rho = rho_of(p)
        for theta in (0.0, np.pi / 2):
            for shift in (0.4, 1.3, 2.9):
                d0 = complementary_distribution(
                    rho,
                    LocalBasisAngles(theta, theta, 0.2, 0.7),
                    ComplementaryPhases(1.0, 2.0),
                )
                d1 = complementary_distribution(
                    rho,
                    LocalBasisAngles(theta, theta, 0.2 + shift, 0.7 + shift),
                    ComplementaryPhases(
                        (1.0 + shift) % (2 * np.pi), (2.0 + shift) % (2 * np.pi)
                    ),
                )
                assert abs(
                    distribution_mutual_information(d0)
                    - distribution_mutual_information(d1)
                ) < 1e-9


class TestPipeline:
    @pytest.mark.parametrize("F", [0.3, 0.7])
    def test_rho_s_agreement(self, F):
        p = XStateParams(1 - F, 1 - F, -F, -F, 1 - 2 * F)
        rep = laqc_numeric(rho_of(p), FAST)
        l_val, _ = laqc_x(p)
        c_val, _ = classical_correlations_x(p)
        assert abs(rep.laqc - l_val) < 1e-5
        assert abs(rep.classical - c_val) < 1e-5

    def test_verstraete_matches_rho_s(self):
        F = 0.7
        ps = XStateParams(1 - F, 1 - F, -F, -F, 1 - 2 * F)
        pv = XStateParams(1 - F, -(1 - F), F, -F, 2 * F - 1)
        rs = laqc_numeric(rho_of(ps), FAST)
        rv = laqc_numeric(rho_of(pv), FAST)
        assert abs(rs.laqc - rv.laqc) < 1e-6
        assert abs(rs.classical - rv.classical) < 1e-6

    def test_werner_ad_agreement(self):
        from laqc.channels import amplitude_damping_kraus, apply_channel, werner_ad_closed_form

        k = amplitude_damping_kraus(0.3)
        rho = apply_channel(werner(0.8), k, k)
        rep = laqc_numeric(rho, FAST)
        l_val, _ = laqc_x(werner_ad_closed_form(0.8, 0.3))
        assert abs(rep.laqc - l_val) < 1e-5

    def test_subsystem_swap_invariance_symmetric(self, rng):
        swap = np.zeros((4, 4))
        for i, j in ((0, 0), (1, 2), (2, 1), (3, 3)):
            swap[i, j] = 1.0
        for _ in range(5):
            p = sample_x_params(rng, "sym")
            rho = rho_of(p)
            swapped = DensityMatrix4(swap @ rho.matrix @ swap)
            a = laqc_numeric(rho, FAST)
            b = laqc_numeric(swapped, FAST)
            assert abs(a.classical - b.classical) < 1e-9
            assert abs(a.laqc - b.laqc) < 1e-9


class TestSearchConfig:
    def test_rejects_small_grid(self):
        with pytest.raises(ValueError):
            SearchConfig(grid=8)

    def test_rejects_few_rounds(self):
        with pytest.raises(ValueError):
            SearchConfig(rounds=1)
