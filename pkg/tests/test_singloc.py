from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from reeslike.errors import HypothesisError, InputError, TooLargeError
from reeslike.exactpoly import FF, GradedPolyRing, PolyMatrix
from reeslike.gbengine import Ideal, height, radical_membership
from reeslike.golden import JACOBIAN_LINEAR
from reeslike.presentation import build_rees_like
from reeslike.singloc import (
    block_jacobian,
    jacobian,
    minor_count,
    minors,
    minors_ideal,
    monomial_min_primes,
    reassemble,
    singular_locus,
    verify_sing_description,
)

S = GradedPolyRing(["x1", "x2"])


def rlp(gens, ring=S):
    return build_rees_like([ring(g) for g in gens])


def test_block_jacobian_of_linear_ideal():
    p = rlp(["x1", "x2"])
    bj = block_jacobian(p)
    assert bj.full.to_strings() == JACOBIAN_LINEAR
    assert reassemble(bj) == bj.full
    assert list(bj.full.row_labels) == ["x1", "x2", "y1", "y2", "z"]
    assert bj.blocks["d1F"] == p.syzygy_matrix.to_ring(p.ring)


def test_block_jacobian_without_syzygies():
    p = rlp(["x1*x2"])
    bj = block_jacobian(p)
    assert bj.syz_cols == 0
    assert reassemble(bj) == bj.full


def test_minor_order_and_count():
    R = GradedPolyRing(["a", "b", "c", "d", "e", "f"])
    M = PolyMatrix.parse(R, [["a", "b", "c"], ["d", "e", "f"]])
    assert [str(g) for g in minors(M, 2)] == ["-b*d + a*e", "-c*d + a*f", "-c*e + b*f"]
    assert minor_count(5, 4, 2) == 60
    with pytest.raises(TooLargeError):
        minors(M, 2, limit=2)
    with pytest.raises(InputError):
        minors(M, 3)


def naive_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    acc = 0
    for k in range(len(rows)):
        sub = [r[:k] + r[k + 1:] for r in rows[1:]]
        acc += (-1) ** k * rows[0][k] * naive_det(sub)
    return acc


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_minors_match_cofactor_expansion(entries):
    R = GradedPolyRing(["u"])
    u = R.var("u")
    rows = [[u * a + b for a, b in zip(r, reversed(r))] for r in entries]
    M = PolyMatrix(R, rows, 3)
    for t in (1, 2, 3):
        got = minors(M, t)
        want = []
        for rs in combinations(range(3), t):
            for cs in combinations(range(3), t):
                want.append(naive_det([[rows[i][j] for j in cs] for i in rs]))
        assert got == [R(0) + w for w in want]


def test_cusp_singular_locus():
    R = GradedPolyRing(["x", "y"], [2, 3])
    I = Ideal(R, ["y^2 - x^3"])
    sing = singular_locus(I, "general")
    assert radical_membership(R("x"), sing) and radical_membership(R("y"), sing)


def test_prime_ambient_characteristic_guard():
    R = GradedPolyRing(["x", "y", "z"], field=FF(3))
    with pytest.raises(HypothesisError):
        singular_locus(Ideal(R, ["x^3 + y^3 + z^3"]), "prime-ambient", 1)
    with pytest.raises(InputError):
        singular_locus(Ideal(R, ["x"]), "elsewhere")


def test_monomial_min_primes():
    R = GradedPolyRing(["a", "b", "c"])
    primes = monomial_min_primes(Ideal(R, ["a*b", "b*c"]))
    assert [[str(g) for g in P.gens] for P in primes] == [["b"], ["a", "c"]]
    assert monomial_min_primes(Ideal(R, ["a^2"]))[0].equals(Ideal(R, ["a"]))
    with pytest.raises(InputError):
        monomial_min_primes(Ideal(R, ["a + b"]))


@pytest.mark.parametrize("gens,ht", [(["x1", "x2"], 4), (["x1*x2"], 2), (["x1^2", "x1*x2", "x2^2"], 5)])
def test_sing_description(gens, ht):
    p = rlp(gens)
    mins = monomial_min_primes(p.base_ideal())
    rep = verify_sing_description(p, mins)
    assert rep["ok"], rep
    assert rep["height_minors"] == ht
    J = minors_ideal(jacobian(p.generators, p.ring), p.m)
    assert height(J) == ht
