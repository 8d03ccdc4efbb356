import pytest

import gdclab


def test_kernel_n3_half():
    basis = gdclab.kernel(3, "1/2")
    assert basis["dimension"] == 1
    coords = dict(zip(basis["coordinates"], basis["basis"][0]))
    assert coords["RGS:012"] == "2/1" or coords["RGS:012"] == "-2/1"
    scale = -1 if coords["RGS:012"].startswith("-") else 1
    assert coords["RGS:000"] == ("1/1" if scale == 1 else "-1/1")


def test_witness_images_agree():
    w = gdclab.witnesses("1/2")
    first = gdclab.apply_phi(w["thmA_nu1"], "1/2")
    second = gdclab.apply_phi(w["thmA_nu2"], "1/2")
    assert first == second
    assert first["weights"]["111"] == "1/4"
    assert gdclab.apply_phi(w["thmA_nu1"], "1/3") != gdclab.apply_phi(w["thmA_nu2"], "1/3")


def test_domination_values():
    assert gdclab.d_markov("1/4", "1/2") == "3/8"
    assert gdclab.d_paintbox(["1/2", "1/4"], "1/2") == "1/8"
    lower = gdclab.product_measure(3, "1/4")
    upper = gdclab.product_measure(3, "1/2")
    assert gdclab.dominates(lower, upper)
    assert not gdclab.dominates(upper, lower)


def test_exchangeable():
    xi = gdclab.xi_distribution(["1/2", "1/4"], "1/2")
    assert xi["atoms"] == {"1/8": "1/4", "3/8": "1/4", "5/8": "1/4", "7/8": "1/4"}
    assert gdclab.split_identity_check("1/2", "1/4", 5)
    assert gdclab.uniqueness_audit(["1/2", "1/4"], "2/3")["unique"]


def test_chain_and_graph():
    assert gdclab.markov_to_color("1/4", "1/2") == ("1/4", "1/3")
    run = gdclab.run_conditional(0.5)
    assert run["strictly_increasing"]
    report = gdclab.couple_check(3, [(0, 1), (1, 2), (0, 2)], "ising", 0.5)
    assert report["deviation"] <= 1e-10


def test_errors_map_to_python():
    with pytest.raises(gdclab.SizeLimitError):
        gdclab.kernel(14, "1/2")
    with pytest.raises(ValueError):
        gdclab.d_markov("2", "1/2")


def test_sampler_reproducible():
    a = gdclab.sample_rwrs(200, seed=4)
    b = gdclab.sample_rwrs(200, seed=4)
    assert a == b
    assert gdclab.verify("trivial-iid")[0]["passed"]
