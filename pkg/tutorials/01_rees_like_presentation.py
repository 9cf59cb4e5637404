"""Build the Rees-like presentation of a small ideal and read off its invariants.

Run with ``python tutorials/01_rees_like_presentation.py``.
"""

from reeslike.exactpoly import GradedPolyRing
from reeslike.gbengine import free_resolution
from reeslike.presentation import build_rees_like, invariants, kernel_oracle
from reeslike.singloc import jacobian

S = GradedPolyRing(["x1", "x2"])

# The presentation lives in T = S[y1, y2, z] with y_i of degree deg f_i + 1 and z of degree 2.
p = build_rees_like([S("x1"), S("x2")])
print("ring:", p.ring)
for g in p.generators:
    print("  ", g)

# The generators come from syzygies of (f) plus the products y_i*y_j - f_i*f_j*z.
# Cross-check them against the kernel of the substitution map by elimination.
print("kernel agrees:", kernel_oracle(list(p.f)).equals(p.ideal))

# Closed-form invariants next to the ones computed from a free resolution.
out = invariants(p, "both")
print("formula: ", out["formula"])
print("computed:", out["computed"])
print("Betti table:", free_resolution(p.ideal).betti_table())

J = jacobian(p.generators, p.ring)
print(f"Jacobian is {J.shape[0]} x {J.shape[1]}")
