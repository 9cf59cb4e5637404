from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from reeslike.errors import InputError
from reeslike.exactpoly import GradedPolyRing, PolyMatrix
from reeslike.gbengine import (
    FreeComplex,
    Ideal,
    free_resolution,
    hilbert_data,
    hilbert_data_from_initial,
    minimalize,
    syzygies,
)

S = GradedPolyRing(["x", "y", "z"])


def series(numerator, weights, top):
    """Coefficients of numerator / prod(1 - t^w) through degree ``top``."""
    coeffs = list(numerator) + [0] * (top + 1)
    coeffs = coeffs[: top + 1]
    for w in weights:
        for d in range(w, top + 1):
            coeffs[d] += coeffs[d - w]
    return coeffs


def count_standard_monomials(ideal, top):
    """Hilbert function by brute force: monomials outside the oracle's initial ideal."""
    ring = ideal.ring
    key = oracles.grevlex_key(ring.weights)
    gb = oracles.buchberger(oracles.as_dicts(ideal.nonzero_gens), key)
    lms = [max(g, key=key) for g in gb]
    out = [0] * (top + 1)
    for e in product(range(top + 1), repeat=ring.nvars):
        d = ring.degree_of(e)
        if d <= top and not any(all(a <= b for a, b in zip(m, e)) for m in lms):
            out[d] += 1
    return out


def test_koszul_betti_numbers():
    cx = free_resolution(Ideal(S, ["x", "y", "z"]))
    assert list(cx.ranks) == [1, 3, 3, 1]
    assert cx.betti() == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}
    assert cx.is_complex() and cx.is_minimal() and cx.is_homogeneous()
    assert cx.projective_dimension() == 3 and cx.regularity() == 0


def test_twisted_cubic():
    R = GradedPolyRing(["a", "b", "c", "d"])
    cx = free_resolution(Ideal(R, ["a*c - b^2", "b*d - c^2", "a*d - b*c"]))
    assert cx.betti_table() == {0: {0: 1}, 1: {1: 3, 2: 2}}
    assert cx.regularity() == 1


def test_dual_is_a_complex():
    cx = free_resolution(Ideal(S, ["x^2", "y^2", "x*z"]))
    dual = cx.dual()
    assert dual.is_complex()
    assert list(dual.ranks) == list(reversed(cx.ranks))


def test_minimalize_splits_trivial_summands():
    x = S.var("x")
    one = S.one
    # R <- R(-1) + R <- R(-1) with d1 = (x, 1), d2 = (1, -x)^T: exact, so it all splits off
    d1 = PolyMatrix(S, [[x, one]], 2)
    d2 = PolyMatrix(S, [[one], [-x]], 1)
    cx = FreeComplex(S, [1, 2, 1], [[0], [1, 0], [1]], [d1, d2])
    assert cx.is_complex() and cx.is_homogeneous() and not cx.is_minimal()
    small = minimalize(cx)
    assert small.is_minimal()
    assert sum(small.ranks) == 0


def test_inhomogeneous_input_rejected():
    with pytest.raises(InputError):
        free_resolution(Ideal(S, ["x^2 + y"]))


@pytest.mark.parametrize(
    "weights,gens",
    [
        ((1, 1, 1), ["x^2", "y^2"]),
        ((1, 1, 1), ["x*y", "y*z", "x*z"]),
        ((1, 1, 1), ["x^2 - y*z", "y^3 - x*z^2"]),
        ((1, 2, 3), ["x^2 - y", "x*y - z"]),
        ((2, 1, 1), ["x - y^2", "y*z^2"]),
    ],
)
def test_hilbert_routes_agree_with_brute_force(weights, gens):
    R = GradedPolyRing(["x", "y", "z"], list(weights))
    I = Ideal(R, gens)
    a, b = hilbert_data(I), hilbert_data_from_initial(I)
    assert a == b
    top = 8
    assert series(a.numerator, weights, top) == count_standard_monomials(I, top)


def test_multiplicity_from_numerator():
    h = hilbert_data(Ideal(S, ["x^2", "y^2"]))
    assert (h.dimension, h.codimension, h.multiplicity) == (1, 2, 4)
    h = hilbert_data(Ideal(S, ["x*y"]))
    assert (h.dimension, h.multiplicity) == (2, 2)
    assert hilbert_data(Ideal(S, ["1"])).dimension == -1


small = st.integers(min_value=-2, max_value=2)


@st.composite
def homogeneous_gens(draw):
    out = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 2))
        monos = [e for e in product(range(d + 1), repeat=3) if sum(e) == d]
        terms = draw(st.dictionaries(st.sampled_from(monos), small, min_size=1, max_size=3))
        out.append(S.poly(terms))
    return [g for g in out if g]


@settings(max_examples=30, deadline=None)
@given(homogeneous_gens())
def test_syzygies_compose_to_zero(gens):
    if not gens:
        return
    syz = syzygies(gens)
    row = PolyMatrix(S, [gens], len(gens))
    if syz.ncols:
        assert (row @ syz).is_zero()
    cx = free_resolution(Ideal(S, gens))
    assert cx.is_complex() and cx.is_minimal()
