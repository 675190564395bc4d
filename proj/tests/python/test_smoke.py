from fractions import Fraction

import json

import pytest

import sidonkit


def test_powers_of_two_are_sidon():
    assert sidonkit.is_sidon([1, 2, 4, 8], 2)
    verdict = sidonkit.verify([1, 2, 4], 3)
    assert verdict["is_sidon"] is False
    assert verdict["witness"] == {"u": {"1": 2, "3": 1}, "v": {"2": 3}}
    assert verdict["collision_sum"] == "6"


def test_hyperplane_method_reports_weight():
    verdict = sidonkit.verify([0, 1, 2], 2, method="hyperplane")
    assert verdict["weight"]["coeffs"] == {"1": 1, "2": -2, "3": 1}


def test_worked_perturbation():
    beta, trace = sidonkit.perturb([0, 1, 2], Fraction(1, 10), 2)
    assert beta == [0, Fraction(21, 20), Fraction(41, 20)]
    assert trace[0]["delta1"] == "1"
    assert sidonkit.is_sidon(beta, 2)


def test_padic_perturbation_stays_within_bound():
    alpha = [0, 1, 2, 3, 4]
    beta, _ = sidonkit.perturb(alpha, "1/100", 3, abs="p-adic", p=3)
    for a, b in zip(alpha, beta):
        assert sidonkit.abs_value(b - a, "p-adic", 3) < Fraction(1, 100)
    assert sidonkit.is_sidon(beta, 3)


def test_set_operations():
    assert sidonkit.h_fold_sumset([1, 2, 4], 2) == [2, 3, 4, 5, 6, 8]
    assert sidonkit.r_s_sum_difference([0, 1], 2, 1) == [-1, 0, 1, 2]
    assert sidonkit.shifted_sumset([0, 1], 5, 1, 2) == [5, 6]
    assert sidonkit.forbidden_set([0, Fraction(21, 20)], 2, 2) == [
        Fraction(-61, 20), -2, Fraction(-59, 40), Fraction(-19, 20), Fraction(1, 10)]


def test_absolute_values():
    assert sidonkit.abs_value(12, "p-adic", 2) == Fraction(1, 4)
    assert sidonkit.small_nonzero_element(Fraction(1, 3), "p-adic", 2) == 4
    assert sidonkit.small_nonzero_element(Fraction(1, 10)) == Fraction(1, 20)


def test_weights_and_density():
    assert len(sidonkit.weight_vectors(2, 2)) == 4
    assert len(sidonkit.weight_vectors(2, 2, canonical=True)) == 2
    assert sidonkit.exact_grid_density(4, 3, 2)["fraction"] == "1/2"
    report = sidonkit.sidon_density(5, 2, 50, "rational:1000", seed=3)
    assert report == sidonkit.sidon_density(5, 2, 50, "rational:1000", seed=3)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        sidonkit.verify([1, 1], 2)
    with pytest.raises(sidonkit.SidonError):
        sidonkit.verify(["1/0"], 2)
    with pytest.raises(TypeError):
        sidonkit.verify([0.5], 2)


def test_cli_in_process():
    code, out, err = sidonkit.run_cli(["verify", "--h", "2", "--json", '["1","2","4","8"]'])
    assert code == 0 and err == ""
    assert json.loads(out)["is_sidon"] is True
    code, _, err = sidonkit.run_cli(["verify", "--h", "2", "--json", '["1","1"]'])
    assert code == 2 and "duplicate" in err
