"""Smoke tests for the python module: exact values of the built-in demo
instances and a few bound identities."""

import pytest

import mht


def test_ternary_map_solution():
    pvy = mht.ternary_example()
    sol = mht.map_solve(pvy)
    assert sol.error == pytest.approx(0.6, abs=1e-9)
    assert sol.mu == pytest.approx(0.4, abs=1e-12)
    assert sol.qy_star.weights == pytest.approx([1 / 3] * 3, abs=1e-12)
    assert [s[0] for s in sol.tie_sets] == [0, 1, 2]


def test_ternary_np_solution():
    pvy = mht.ternary_example()
    sol = mht.map_solve(pvy)
    flat_p = mht.FiniteMeasure([x for row in pvy.rows for x in row])
    aux = mht.product(mht.FiniteMeasure.uniform(3), sol.qy_star)
    flat_q = mht.FiniteMeasure([x for row in aux.rows for x in row])
    np_sol = mht.alpha_beta(flat_p, flat_q, 1 / 3)
    assert np_sol.gamma == pytest.approx(1.2, abs=1e-9)
    assert np_sol.p == pytest.approx(1.0)
    assert np_sol.alpha == pytest.approx(0.6, abs=1e-9)


def test_bound_identities():
    pvy = mht.ternary_example()
    sol = mht.map_solve(pvy)
    assert mht.metaconverse_alpha(pvy, sol.qy_star) == pytest.approx(
        0.6, abs=1e-9
    )
    spectrum = mht.spectrum_supremum(pvy, sol.qy_star)
    assert spectrum.value == pytest.approx(0.6, abs=1e-9)
    assert spectrum.gamma == pytest.approx(0.4, abs=1e-9)

    vh = mht.verdu_han(pvy)  # defaults to Q_Y = P_Y
    assert vh.best_value == pytest.approx(27 / 47, abs=1e-9)
    assert mht.tight_poor_verdu(pvy).best_value == pytest.approx(
        0.6, abs=1e-9
    )
    assert mht.counting_measure_error(pvy) == pytest.approx(0.6, abs=1e-9)


def test_two_observation_decoder_bound():
    two = mht.ternary_two_observation()
    metric = mht.first_observation_metric()
    dec = mht.max_metric_decoder(metric)
    assert mht.decoder_error(two, dec) == pytest.approx(0.6, abs=1e-9)
    qvy, mu_prime = mht.max_metric_auxiliary(two, metric)
    alpha, eps1 = mht.decoder_alpha_bound(two, qvy, dec)
    assert eps1 == pytest.approx(1 / 3, abs=1e-9)
    assert alpha == pytest.approx(0.6, abs=1e-9)
    assert mu_prime == pytest.approx(1.2, abs=1e-9)


def test_channel_coding_roundtrip():
    w = mht.bsc(3, 0.1)
    result = mht.best_code_search(w, 3, 2)
    assert result.code.codewords == [0, 7]
    assert result.error == pytest.approx(0.028, abs=1e-12)
    joint = mht.code_to_joint(w, result.code)
    sol = mht.map_solve(joint)
    assert mht.metaconverse(w, result.code, sol.qy_star) == pytest.approx(
        result.error, abs=1e-9
    )


def test_lossy_roundtrip():
    pv = mht.FiniteMeasure([0.4, 0.3, 0.2, 0.1])
    d = [[0.0 if v == w else 1.0 for w in range(4)] for v in range(4)]
    spec = mht.DistortionSpec(d, 0.0)
    code = mht.LossyCode([0, 1])
    assert mht.excess_distortion(pv, spec, code) == pytest.approx(0.3)
    assert mht.excess_distortion_test_form(pv, spec, code) == pytest.approx(
        0.3, abs=1e-9
    )
    assert mht.kostina_relaxation(
        pv, spec, 2, mht.FiniteMeasure.uniform(4)
    ) == pytest.approx(0.3, abs=1e-9)


def test_validation_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        mht.FiniteMeasure([0.5, 0.6])
    with pytest.raises(ValueError):
        mht.JointDistribution([[0.5, -0.1], [0.3, 0.3]])
    with pytest.raises(RuntimeError):
        mht.bsc(11, 0.1)  # dense-storage guard
