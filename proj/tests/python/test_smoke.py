from math import comb

import pytest

samuel = pytest.importorskip("samuel")


def test_regular_table_and_fit():
    R = samuel.ring(["x", "y", "z"])
    table = samuel.hilbert_samuel_table(R.maximal_ideal(), 8)
    assert table == [comb(n + 2, 3) for n in range(9)]
    fit = samuel.fit_coefficients(table, 3)
    assert fit["e"] == [1, 0, 0, 0]
    assert fit["eta"] < 0


def test_depth_one_example():
    R = samuel.ring(["x", "y", "z", "w"], ["x*y^3", "x*z", "x*w"])
    Q = R.ideal(["x - y", "x - z", "x - w"])
    table = samuel.hilbert_samuel_table(Q, 10)
    assert samuel.fit_coefficients(table, 3)["e"] == [1, 0, 3, 3]


def test_cubic_series():
    R = samuel.ring(["x", "y"], ["y^3"])
    table = samuel.hilbert_samuel_table(R.maximal_ideal(), 10)
    series = samuel.graded_series(table, 1)
    assert series["closed_form"] == "(1 + t + t^2)/(1 - t)"
    assert samuel.fit_coefficients(table, 1)["e"] == [3, 3]


def test_sequences_and_colon_formula():
    R = samuel.ring(["x", "y", "u", "v"], ["x*u", "x*v", "y*u", "y*v"])
    Q = R.ideal(["x - u", "y - v"])
    assert not samuel.is_regular_sequence(R, ["x - u", "y - v"])["verdict"]
    assert samuel.is_d_sequence(R, ["x - u", "y - v"])["verdict"]
    assert samuel.is_superficial(Q, "x - u", 3, 8)["verdict"]
    formula = samuel.ed_colon_formula(Q, ["x - u", "y - v"])
    e = samuel.fit_coefficients(samuel.hilbert_samuel_table(Q, 10), 2)["e"]
    assert formula["value"] == e[2]
    assert formula["unmet"] == []


def test_idealization():
    assert samuel.idealization_coeffs(4, 2, [1, 0, 0, 0, 0], [1, 0, 0]) == [1, 0, 1, 0, 0]
    R = samuel.ring(["a", "b", "c", "d"])
    report = samuel.idealization_cross_check(R, ["a", "b"], ["a", "b", "c", "d"], 12)
    assert report["claims"][0]["verdict"] == "VERIFIED"
    assert report["e"][2] == 1


def test_groebner_basis_and_colength():
    gb = samuel.groebner_basis(["x", "y"], ["x^2 - y", "x*y"])
    assert "y^2" in gb
    R = samuel.ring(["x", "y"])
    assert samuel.local_colength(R.ideal(["x^2", "y^3"])) == 6


def test_builtin_corpus():
    report = samuel.run_corpus()
    assert report["schema"] == 1
    assert report["summary"]["instances"] == 6
    assert report["summary"]["failure"] == 0
    assert report["summary"]["errors"] == 0


def test_errors_are_raised():
    with pytest.raises(samuel.Error, match="InvalidArgument"):
        samuel.ring(["x"], [], field="fp:7")
    with pytest.raises(samuel.Error, match="ParseError"):
        samuel.ring(["x"], ["x +* 1"])
