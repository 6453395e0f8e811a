import math

import pytest

import eprdep

PI = math.pi
LN2 = math.log(2)


def test_version():
    assert eprdep.__version__


def test_polarizer_and_eigensystem():
    op = eprdep.polarizer_operator(0.0)
    assert op[0][0] == 1 and op[1][1] == -1
    values, vectors = eprdep.eigensystem(PI / 2)
    assert values == [1.0, -1.0]
    assert vectors[0][0].real == pytest.approx(math.sqrt(2) / 2)


def test_singlet_joint_distribution_matches_closed_form():
    psi = eprdep.singlet_state()
    d = eprdep.joint_distribution(psi, PI / 8, PI / 4)
    c = eprdep.singlet_joint_closed_form(PI / 8, PI / 4)
    assert d == pytest.approx(c, abs=1e-12)
    assert d[0] == pytest.approx(0.0190301, abs=1e-7)
    assert eprdep.marginals(d) == ([pytest.approx(0.5)] * 2, [pytest.approx(0.5)] * 2)
    assert eprdep.product_expectation(d) == pytest.approx(-math.cos(PI / 8), abs=1e-12)


def test_invalid_inputs_raise_value_error():
    with pytest.raises(ValueError):
        eprdep.polarizer_operator(4.0)
    with pytest.raises(ValueError):
        eprdep.joint_distribution([2, 0, 0, 0], 0.0, 0.0)
    with pytest.raises(ValueError):
        eprdep.inverse_degree(1.5)


def test_dependence_functions():
    assert eprdep.entropy(0.25) == pytest.approx(2 * LN2)
    assert eprdep.degree_of_dependence(0.375) == pytest.approx(0.1887219, abs=1e-7)
    assert eprdep.inverse_degree(0.1887219) == pytest.approx(0.375, abs=1e-6)
    assert eprdep.info_flow(0.0) == pytest.approx(LN2)
    assert eprdep.signed_info_flow(0.5) == pytest.approx(LN2)
    assert eprdep.distribution_from_signed_flow(0.0) == (0.25, 0.25, 0.25, 0.25)


def test_bell_report():
    r = eprdep.bell_report(PI, 2 * PI / 3, 0.0, PI / 3)
    assert r["bell_value"] == pytest.approx(-2.5, abs=1e-12)
    assert r["total_flow"] == pytest.approx(1.0855833, abs=1e-7)
    assert r["violates_bell"]
    assert eprdep.bell_functional(*eprdep.tsirelson_config()) == pytest.approx(2 * math.sqrt(2))
    assert eprdep.classify(PI, 0.0, 0.0, PI) == (True, False, True)


def test_monte_carlo_and_frechet():
    r = eprdep.run_monte_carlo(20000, 7, workers=2)
    assert r == eprdep.run_monte_carlo(20000, 7)
    assert abs(r["alpha_hat"] - 0.838) < 0.05
    lo, hi = r["frechet_V"]
    assert lo <= r["tau_hat"] <= hi
    assert eprdep.frechet_interval(0.3, 0.4) == (0.0, 0.3)
    assert eprdep.sample_config(1, 2) == eprdep.sample_config(1, 2)


def test_sampling_and_angle_parsing():
    counts = eprdep.sample_joint_outcomes([1, 0, 0, 0], 100, 5)
    assert counts == [100, 0, 0, 0]
    assert eprdep.parse_angle("3pi/8") == pytest.approx(3 * PI / 8)
