import pytest

from reeslike.errors import InputError
from reeslike.exactpoly import GradedPolyRing
from reeslike.gbengine import Ideal, free_resolution, height
from reeslike.golden import F_WEIGHTED, G_WEIGHTED
from reeslike.standardize import (
    block_variables,
    codim_preservation_harness,
    irreducibility_certificate,
    partials_height_check,
    prime_sequence_check,
    prime_standardize,
    step_by_step,
    w_name,
)

W = GradedPolyRing(["x1", "x2", "x3"], [1, 2, 3])


def test_step_by_step_renames_and_multiplies():
    std, Is = step_by_step(W, Ideal(W, ["x1^2 - x2", "x1^3 - x3"]))
    assert std.target.names == ("x1", "x2_1", "x2_2", "x3_1", "x3_2", "x3_3")
    assert str(std.mapping["x3"]) == "x3_1*x3_2*x3_3"
    assert std.degree_preserving()
    assert [str(g) for g in Is.gens] == ["x1^2 - x2_1*x2_2", "x1^3 - x3_1*x3_2*x3_3"]
    assert std.selected == ("x2", "x3")


def test_step_by_step_name_collision():
    R = GradedPolyRing(["a", "a1", "a2"], [2, 1, 1])
    with pytest.raises(InputError):
        step_by_step(R)


def test_prime_standardization_of_weighted_example():
    std, Is = prime_standardize(W, Ideal(W, ["x1^2 - x2", "x1^3 - x3"]))
    R = std.target
    assert std.kind == "prime-full"
    assert set(R.weights) == {1}
    assert [str(g) for g in Is.gens] == [str(R.parse(F_WEIGHTED)), str(R.parse(G_WEIGHTED))]
    assert std.degree_preserving()
    assert block_variables(std, "x2")[:2] == [w_name(2, 0, 1), w_name(2, 0, 2)]


def test_prime_standardization_of_a_subset():
    std, _ = prime_standardize(W, None, ["x3"])
    assert std.kind == "prime-subset"
    assert std.selected == ("x3",)
    assert str(std.mapping["x1"]) == "x1"
    assert std.target.weights[:2] == (1, 2)
    with pytest.raises(InputError):
        prime_standardize(W, None, ["q"])


def test_prime_sequence_verdicts():
    std, _ = prime_standardize(W)
    seq = prime_sequence_check([std.mapping[v] for v in W.names])
    assert seq["verdict"] == "certificate"
    R = GradedPolyRing(["a", "b", "c"])
    bad = prime_sequence_check([R("a*b")])
    assert bad["verdict"] == "counterexample"
    assert bad["witness"]["factors"] == ["a", "b"]
    zd = prime_sequence_check([R("a^2 + b^2"), R("a^2 + b^2")])
    assert zd["verdict"] == "counterexample"
    refused = prime_sequence_check([R("a^2 + b^2 + c^2")])
    assert refused["verdict"] == "refused"


def test_irreducibility_certificate():
    R = GradedPolyRing(["a", "b", "c"])
    assert irreducibility_certificate(R("a*b + c^2")) is not None
    assert irreducibility_certificate(R("a*b + a*c")) is None
    assert irreducibility_certificate(R("a^2 + b^2")) is None


@pytest.mark.parametrize("var", ["x1", "x2", "x3"])
def test_partials_height(var):
    std, _ = prime_standardize(W)
    out = partials_height_check(std, var)
    assert out["ok"]
    assert out["height"] >= 4


def test_codim_harness_reports_preservation():
    S = GradedPolyRing(["u", "v", "w", "x", "y", "z"], [1, 1, 1, 2, 2, 2])
    Q = Ideal(S, ["-v*x + u*y", "-w*x + u*z", "-w*y + v*z"])
    std, _ = prime_standardize(S, None, ["x"])
    rep = codim_preservation_harness(Q, std)
    assert rep["preserved"] and rep["heights_agree"]
    std2, Qs = step_by_step(S, Q)
    assert height(Q) == height(Qs) == 2


@pytest.mark.parametrize("gens", [["x1^2 - x2", "x1^3 - x3"], ["x1*x2 - x3", "x2^2"], ["x3^2 - x2^3"]])
def test_standardizations_keep_graded_betti_numbers(gens):
    I = Ideal(W, gens)
    before = free_resolution(I).betti()
    for std, _ in (step_by_step(W), prime_standardize(W)):
        assert free_resolution(std.apply_ideal(I)).betti() == before


def test_single_degree_two_variable():
    T = GradedPolyRing(["t1"], [2])
    std, _ = prime_standardize(T)
    assert str(std.mapping["t1"]) == "w_1_0_1*w_1_0_2 + w_1_1_1*w_1_1_2"
    out = partials_height_check(std, "t1")
    assert out["ok"] and out["height"] == 4 and out["bound"] == 2
