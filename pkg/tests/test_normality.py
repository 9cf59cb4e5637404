import pytest
from hypothesis import given, settings, strategies as st

from reeslike.config import degree_cap, raised_degree_cap
from reeslike.errors import HypothesisError, InputError, TooLargeError
from reeslike.exactpoly import FF, GradedPolyRing
from reeslike.gbengine import Ideal
from reeslike.normality import (
    PowerCache,
    ReesLikeElement,
    even_power_caveat,
    fedder_coherence,
    fedder_fsplit,
    frobenius_power,
    is_radical_monomial,
    monomial_curve_example,
    rees_algebra_membership,
    rl_membership,
    seminormality_probe,
    seminormality_verdict,
)

S1 = GradedPolyRing(["x"])
S2 = GradedPolyRing(["x1", "x2"])


def test_element_arithmetic_and_printing():
    b = ReesLikeElement.of(S1, {1: "x"})
    assert str(b) == "x*t"
    assert str(b ** 3) == "x^3*t^3"
    assert str(ReesLikeElement.of(S1, {1: "1"})) == "t"
    assert str(ReesLikeElement.of(S2, {2: "x1 + x2"})) == "(x1 + x2)*t^2"
    assert ReesLikeElement.of(S1, [0, "x"]) == b
    with pytest.raises(InputError):
        ReesLikeElement.of(S1, {-1: "x"})


def test_rl_membership_looks_at_odd_exponents():
    I = Ideal(S1, ["x^2"])
    assert rl_membership(ReesLikeElement.of(S1, {2: "1", 1: "x^2"}), I)
    assert not rl_membership(ReesLikeElement.of(S1, {1: "x"}), I)


def test_probe_refutes_square():
    rep = seminormality_probe(Ideal(S1, ["x^2"]))
    assert rep["verdict"] == "refuted"
    assert rep["witness"] == "x*t"
    assert rep["witness_exponent"] == 1


@pytest.mark.parametrize("ring,gens", [(S1, ["x"]), (S2, ["x1*x2"]), (S2, ["x1", "x2"])])
def test_probe_does_not_refute_radical_ideals(ring, gens):
    rep = seminormality_probe(Ideal(ring, gens), bound=3)
    assert rep["verdict"] == "not refuted up to bound"
    assert rep["checked"] > 0


def test_probe_sigma_validation():
    with pytest.raises(InputError):
        seminormality_probe(Ideal(S1, ["x"]), sigma=2)


def test_even_power_caveat():
    rep = even_power_caveat(S1, Ideal(S1, ["x"]))
    assert rep == {"b": "t", "b_in_RL": False, "b_squared_in_RL": True}


def test_radical_verdicts():
    assert is_radical_monomial(Ideal(S2, ["x1*x2", "x1^2*x2"]))
    assert not is_radical_monomial(Ideal(S2, ["x1^2"]))
    assert seminormality_verdict(Ideal(S2, ["x1*x2"]))["verdict"] == "seminormal"
    assert seminormality_verdict(Ideal(S2, ["x1^2", "x2"]))["verdict"] == "not seminormal"
    assert seminormality_verdict(Ideal(S2, ["x1^2 + x2^2"]))["verdict"] == "undetermined"
    assert seminormality_verdict(Ideal(S2, ["x1^2 + x2^2"]), radical=True)["verdict"] == "seminormal"
    F2 = GradedPolyRing(["x"], field=FF(2))
    assert seminormality_verdict(Ideal(F2, ["x"]))["verdict"] == "undetermined"
    with pytest.raises(InputError):
        is_radical_monomial(Ideal(S2, ["x1 + x2"]))


monomial = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda e: sum(e) > 0)


@settings(max_examples=30, deadline=None)
@given(st.lists(monomial, min_size=1, max_size=3))
def test_probe_agrees_with_radical_verdict(exps):
    I = Ideal(S2, [S2.monomial(e) for e in exps])
    rep = seminormality_probe(I)
    radical = is_radical_monomial(I)
    # radical ideals can never be refuted; with exponents at most sigma = 3 the squarefree
    # part of a non-squarefree minimal generator is always a witness
    assert (rep["verdict"] == "refuted") == (not radical)


def test_power_cache_and_rees_membership():
    I = Ideal(S2, ["x1", "x2"])
    powers = PowerCache(I, cap=3)
    assert len(powers[2].gens) == 3
    e = ReesLikeElement.of(S2, {0: "1", 2: "x1*x2", 1: "x1"})
    assert rees_algebra_membership(e, I, powers=powers)["member"]
    bad = ReesLikeElement.of(S2, {2: "x1"})
    out = rees_algebra_membership(bad, I, powers=powers)
    assert not out["member"] and out["per_exponent"] == {2: False}
    with pytest.raises(TooLargeError):
        powers[4]


def test_monomial_curve():
    rep = monomial_curve_example()
    assert rep["ok"], rep
    assert rep["f_in_rees"] is False
    assert rep["f2_in_rees"] and rep["f3_in_rees"]
    assert rep["f2_identity"] and rep["f3_identity"]


def test_raised_cap_is_scoped(monkeypatch):
    monkeypatch.delenv("REESLIKE_DEGREE_CAP", raising=False)
    with raised_degree_cap(400):
        assert degree_cap() == 400
    assert degree_cap() == 40
    monkeypatch.setenv("REESLIKE_DEGREE_CAP", "900")
    with raised_degree_cap(400):
        assert degree_cap() == 900


def test_fedder():
    F3 = GradedPolyRing(["x1", "x2"], field=FF(3))
    assert fedder_fsplit(Ideal(F3, ["x1*x2"]))["f_split"]
    assert not fedder_fsplit(Ideal(F3, ["x1^2"]))["f_split"]
    assert str(frobenius_power(Ideal(F3, ["x1 + x2"]), 3).gens[0]) == "x1^3 + x2^3"
    for gens in (["x1*x2"], ["x1", "x2"]):
        rep = fedder_coherence(Ideal(F3, gens))
        assert rep["agree"] and rep["base"]["f_split"] and rep["rees_like"]["f_split"]


def test_fedder_guards():
    with pytest.raises(HypothesisError):
        fedder_fsplit(Ideal(S2, ["x1"]))
    F2 = GradedPolyRing(["x"], field=FF(2))
    with pytest.raises(HypothesisError):
        fedder_fsplit(Ideal(F2, ["x"]))
    F7 = GradedPolyRing(["x"], field=FF(7))
    with pytest.raises(TooLargeError):
        fedder_fsplit(Ideal(F7, ["x"]))
    assert fedder_fsplit(Ideal(F7, ["x"]), allow_large=True)["f_split"]
