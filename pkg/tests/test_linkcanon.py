import pytest
from hypothesis import given, settings, strategies as st

from reeslike.errors import HypothesisError
from reeslike.exactpoly import FF, GradedPolyRing, PolyMatrix
from reeslike.gbengine import Ideal
from reeslike.golden import D1_QUADRICS, D2_QUADRICS, D3_QUADRICS, G_EVEN_QUADRICS, G_ODD_QUADRICS, QUADRICS
from reeslike.linkcanon import (
    canonical_module_checks,
    complete_intersection_C,
    d_complex_for,
    g_elements,
    g_for,
    identity_residuals,
    init_ideal_check,
    koszul,
    link,
    match_columns,
    mixed_sign_membership,
    primary_decomposition_C_check,
    self_duality_certificate,
    ses_checks,
    signed_permutation_equivalent,
)
from reeslike.presentation import build_rees_like

S = GradedPolyRing(["x1", "x2"])


def rlp(gens, ring=S):
    return build_rees_like([ring(g) for g in gens])


@pytest.fixture(scope="module")
def linear():
    return rlp(["x1", "x2"])


@pytest.fixture(scope="module")
def quadrics():
    return rlp(QUADRICS)


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_recursion_identities(j):
    assert all(r.is_zero for r in identity_residuals(j))


def test_base_conventions():
    R = GradedPolyRing(["y1", "z", "F1"])
    ge, go = g_elements([R("F1")], [R("y1")], R("z"))
    assert (str(ge), str(go)) == ("y1", "F1")
    with pytest.raises(ValueError):
        g_elements([], [], R("z"))


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_direct_and_recursive_agree(j, cs):
    names = [f"y{i}" for i in range(1, j + 1)] + ["z", "u", "v"]
    R = GradedPolyRing(names)
    u, v = R.var("u"), R.var("v")
    fs = [u * cs[k] + v * (k + 1) for k in range(j)]
    ys = [R.var(f"y{i}") for i in range(1, j + 1)]
    assert g_elements(fs, ys, R.var("z")) == g_elements(fs, ys, R.var("z"), "recursive")


def test_quadric_g_elements(quadrics):
    ge, go = g_for(quadrics)
    assert str(ge) == G_EVEN_QUADRICS
    assert str(go) == G_ODD_QUADRICS


@pytest.mark.parametrize("name", ["linear", "quadrics"])
def test_link_equals_colon(name, request):
    p = request.getfixturevalue(name)
    data = link(p)
    assert data.equal
    assert data.colon.equals(data.J)
    assert data.C.equals(complete_intersection_C(p))


def test_link_hypotheses():
    with pytest.raises(HypothesisError):
        link(rlp(["x1*x2"]))
    F2 = GradedPolyRing(["x1", "x2"], field=FF(2))
    with pytest.raises(HypothesisError):
        link(build_rees_like([F2("x1"), F2("x2")]))


def test_sign_variants(linear):
    mixed = mixed_sign_membership(linear)
    assert mixed["ok"] and not mixed["g_even_in_plain"]
    dec = primary_decomposition_C_check(linear)
    assert dec["ok"]
    assert dec["multiplicity"] == dec["expected_multiplicity"] == 16


def test_short_exact_sequence_colons(linear):
    assert ses_checks(linear)["ok"]


def test_initial_ideal(linear):
    rep = init_ideal_check(linear)
    assert rep["ok"] and rep["match"]
    one = init_ideal_check(rlp(["x1^2"]))
    assert one["ok"] and one["closed_form"] is None


def test_koszul_differentials():
    R = GradedPolyRing(["a", "b", "c"])
    K = koszul([R("a"), R("b"), R("c")])
    assert K.is_complex()
    assert K.d(1).to_strings() == [["a", "b", "c"]]
    assert K.d(3).to_strings() == [["c"], ["-b"], ["a"]]


def test_d_complex_against_worked_matrices(quadrics):
    cx = d_complex_for(quadrics)
    T = quadrics.ring
    assert list(cx.ranks) == [2, 6, 6, 2]
    assert cx.d(1) == PolyMatrix.parse(T, D1_QUADRICS)
    assert cx.d(2) == PolyMatrix.parse(T, D2_QUADRICS)
    # the third differential agrees after a global sign
    assert cx.d(3) == -PolyMatrix.parse(T, D3_QUADRICS)
    assert signed_permutation_equivalent(cx.d(3), PolyMatrix.parse(T, D3_QUADRICS)) is not None
    assert cx.shifts[0] == (0, -1)


def test_match_columns():
    R = GradedPolyRing(["a", "b"])
    A = PolyMatrix.parse(R, [["a", "-b"], ["b", "a"]])
    B = PolyMatrix.parse(R, [["b", "a"], ["-a", "b"]])
    perm, signs = match_columns(A, B)
    for c in range(2):
        assert [A[r, c] for r in range(2)] == [B[r, perm[c]] * signs[c] for r in range(2)]
    assert match_columns(A, PolyMatrix.parse(R, [["a", "a"], ["b", "b"]])) is None


def test_self_duality(linear):
    cert = self_duality_certificate(d_complex_for(linear))
    assert cert is not None and len(cert) == 3


@pytest.mark.parametrize("name", ["linear", "quadrics"])
def test_canonical_module_checks(name, request):
    rep = canonical_module_checks(request.getfixturevalue(name))
    assert rep["ok"], rep
    assert rep["exactness"]["point_seed"] == 20261015
