import pytest
from hypothesis import given, settings, strategies as st

from reeslike.errors import HypothesisError, InputError
from reeslike.exactpoly import GradedPolyRing
from reeslike.gbengine import Ideal
from reeslike.presentation import (
    build_rees_like,
    computed_invariants,
    formula_invariants,
    invariants,
    kernel_oracle,
    maps_to_zero,
    regularity_chain,
    sum_product_inequality,
)

S = GradedPolyRing(["x1", "x2"])


def rlp(gens, signs=None, ring=S):
    return build_rees_like([ring(g) for g in gens], signs)


def test_linear_presentation():
    p = rlp(["x1", "x2"])
    assert [str(g) for g in p.generators] == [
        "-x2*y1 + x1*y2", "y1^2 - x1^2*z", "y1*y2 - x1*x2*z", "y2^2 - x2^2*z"]
    assert str(p.ring) == "x1:1, x2:1, y1:2, y2:2, z:2 over QQ"


def test_quadrics_have_two_syzygies_and_six_products():
    p = rlp(["x1^2", "x1*x2", "x2^2"])
    assert len(p.syz_gens) == 2 and len(p.gen_gens) == 6
    assert p.degrees == (2, 2, 2)
    assert p.ring.weights == (1, 1, 3, 3, 3, 2)


@pytest.mark.parametrize("gens,signs", [
    (["x1", "x2"], None),
    (["x1^2", "x1*x2", "x2^2"], None),
    (["x1*x2"], None),
    (["x1^2", "x2^3"], (1, -1)),
    (["x1^2 - x2^2", "x1*x2"], (-1, 1)),
])
def test_generators_vanish_and_match_kernel(gens, signs):
    p = rlp(gens, signs)
    assert all(maps_to_zero(p, g) for g in p.generators)
    assert kernel_oracle(list(p.f), signs).equals(p.ideal)


def test_weighted_base_ring():
    W = GradedPolyRing(["a", "b"], [1, 2])
    p = build_rees_like([W("a^2 - b"), W("a*b")])
    assert p.degrees == (2, 3)
    assert kernel_oracle(list(p.f)).equals(p.ideal)


@pytest.mark.parametrize("gens", [["x1", "x2"], ["x1^2", "x1*x2", "x2^2"], ["x1*x2"], ["x1^2", "x2^2"]])
def test_formula_and_computed_invariants_agree(gens):
    out = invariants(rlp(gens), "both")
    assert out["agree"]
    assert out["formula"] == out["computed"]


def test_invariant_values_for_linear_ideal():
    p = rlp(["x1", "x2"])
    assert formula_invariants(p) == {"maxdeg": 4, "degree": 8, "reg": 4, "pd": 3, "depth": 2, "ht": 2, "dim": 3}
    assert computed_invariants(p)["degree"] == 8


def test_input_errors():
    with pytest.raises(InputError):
        rlp(["x1", "x1*x2"])  # redundant
    with pytest.raises(InputError):
        rlp(["x1 + x2^2"])
    with pytest.raises(InputError):
        rlp(["1"])
    with pytest.raises(InputError):
        rlp(["x1", "x2"], (1, 2))
    with pytest.raises(InputError):
        build_rees_like([])
    with pytest.raises(InputError):
        invariants(rlp(["x1"]), "sideways")
    Y = GradedPolyRing(["y1", "x"])
    with pytest.raises(InputError):
        build_rees_like([Y("x")])


monomials = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)).filter(lambda e: sum(e) > 0)
R3 = GradedPolyRing(["x1", "x2", "x3"])


def minimal_monomials(exps):
    exps = sorted(set(exps), key=sum)
    out = []
    for e in exps:
        if not any(all(a <= b for a, b in zip(g, e)) for g in out):
            out.append(e)
    return out


@settings(max_examples=12, deadline=None)
@given(st.lists(monomials, min_size=1, max_size=3))
def test_random_monomial_ideals_match_kernel(exps):
    gens = [R3.monomial(e) for e in minimal_monomials(exps)]
    p = build_rees_like(gens)
    assert kernel_oracle(gens).equals(p.ideal)
    Q = p.ideal
    assert Ideal(p.ring, p.generators).equals(Q)


def test_sum_product_inequality():
    assert sum_product_inequality([1])
    assert sum_product_inequality([2, 2])
    assert sum_product_inequality([9] * 6)
    with pytest.raises(InputError):
        sum_product_inequality([])
    with pytest.raises(InputError):
        sum_product_inequality([2, 0])


def test_regularity_chain_for_quadrics():
    chain = regularity_chain(rlp(["x1^2", "x1*x2", "x2^2"]))
    assert chain["ok"] and chain["cm_regularity_bound"]
    assert chain["relations"] == ["=", "<=", "<=", "<=", "="]
    assert [s["value"] for s in chain["steps"]] == [9, 9, 11, 12, 51, 51]


def test_regularity_chain_guards():
    with pytest.raises(HypothesisError):
        regularity_chain(rlp(["x1*x2"]))
    # S/(x1^2, x1*x2) has depth 0 and dimension 1
    with pytest.raises(HypothesisError):
        regularity_chain(rlp(["x1^2", "x1*x2"]))
