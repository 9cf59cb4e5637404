"""Heights of Jacobian minors, then a prime standardization of a weighted ring.

Run with ``python tutorials/02_singular_locus_and_standardization.py``.
"""

from reeslike.exactpoly import GradedPolyRing
from reeslike.gbengine import Ideal, free_resolution, height
from reeslike.presentation import build_rees_like
from reeslike.singloc import jacobian, minors_ideal, monomial_min_primes, verify_sing_description
from reeslike.standardize import partials_height_check, prime_sequence_check, prime_standardize

S = GradedPolyRing(["x1", "x2"])
for gens in (["x1", "x2"], ["x1*x2"]):
    p = build_rees_like([S(g) for g in gens])
    J = minors_ideal(jacobian(p.generators, p.ring), p.m)
    rep = verify_sing_description(p, monomial_min_primes(p.base_ideal()))
    print(gens, "height of m-minors:", height(J), "description verified:", rep["ok"])

# A weighted ring with variables of degree 1, 2, 3.  Prime standardization swaps each
# variable of degree d > 1 for a prime form of degree d in fresh degree-1 variables.
W = GradedPolyRing(["x1", "x2", "x3"], [1, 2, 3])
I = Ideal(W, ["x1^2 - x2", "x1^3 - x3"])
std, Is = prime_standardize(W, I)
print("standardized generators have", [len(g.terms) for g in Is.gens], "terms")
print("standard ring:", std.target)
for v, g in std.mapping.items():
    print(f"  {v} -> {g}")
print("prime sequence:", prime_sequence_check([std.mapping[v] for v in ("x2", "x3")])["verdict"])
for v in W.names:
    print(f"  partials of the block for {v}:", partials_height_check(std, v)["ok"])

# Standardizing a single variable of a presentation leaves the Betti table alone.
p = build_rees_like([S("x1"), S("x2")])
_, Qz = prime_standardize(p.ring, p.ideal, ["z"])
print("Betti tables agree:", free_resolution(Qz).betti_table() == free_resolution(p.ideal).betti_table())
