import ccsym


def test_symbol_of_t_with_itself():
    k = ccsym.ring("Fp:5")
    t = ccsym.series("t", k)
    assert str(ccsym.symbol(t, t)) == "4"
    assert str(ccsym.symbol_oracle(t, t)) == "4"


def test_symbol_with_nilpotents():
    k = ccsym.ring("Q,eps:3")
    f = ccsym.series("1 - e*t^-1 @prec=12", k)
    g = ccsym.series("1 - e*t @prec=12", k)
    assert str(ccsym.symbol(f, g)) == "1+e^2"
    assert str(ccsym.symbol_exp_log(f, g)) == "1+e^2"


def test_series_arithmetic():
    k = ccsym.ring("Fp:3,eps:2")
    f = ccsym.series("t - e @prec=4", k)
    assert f.winding_number() == 1
    assert (f * f.inv()).residue().is_zero()
    p = ccsym.factor(f)
    assert p["w"] == 1 and p["neg"] == {"1": "e"}


def test_witt_vectors():
    q = ccsym.ring("Q")
    assert ccsym.witt_ghost(q, ["3", "1"]) == ["3", "11"]
    assert ccsym.witt_add(q, ["1", "0"], ["1", "0"]) == ["2", "-1"]
    assert ccsym.witt_unghost(q, ["1", "1"]) == ["1", "0"]


def test_reciprocity_on_p1():
    f7 = ccsym.ring("Fp:7")
    out = ccsym.weil_reciprocity(f7, "0,1,inf", "t", "1-t")
    assert out["law_holds"] and out["product"] == "1"

    res = ccsym.residue_theorem(f7, "0,1,inf", "t", "1 / (t-0)*(t-1)")
    assert res["law_holds"] and res["sum"] == "0"

    f2 = ccsym.ring("Fp:2")
    witt = ccsym.witt_reciprocity(
        f2, "0,1,inf", "t / (t-1)", ["1 / (t-0)*(t-1)", "0", "0", "0"]
    )
    assert witt["law_holds"]


def test_crosscheck_and_errors():
    assert ccsym.crosscheck(trials=2, seed=5)["ok"]
    import pytest

    with pytest.raises(ccsym.CcsymError):
        ccsym.series("t^", ccsym.ring("Fp:5"))
