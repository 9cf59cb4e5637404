"""Link the presentation to a complete intersection, then probe seminormality and F-splitting.

Run with ``python tutorials/03_linkage_and_normality.py``.
"""

from reeslike.exactpoly import FF, GradedPolyRing
from reeslike.gbengine import Ideal
from reeslike.linkcanon import canonical_module_checks, d_complex_for, link
from reeslike.normality import fedder_coherence, monomial_curve_example, seminormality_probe
from reeslike.presentation import build_rees_like

S = GradedPolyRing(["x1", "x2"])
p = build_rees_like([S("x1^2"), S("x1*x2"), S("x2^2")])

L = link(p)
print("J equals C : Q:", L.equal)
cx = d_complex_for(p)
for i in (1, 2, 3):
    print(f"d{i} has shape {cx.d(i).shape}")
rep = canonical_module_checks(p)
print("canonical module checks:", rep["ok"])

X = GradedPolyRing(["x"])
probe = seminormality_probe(Ideal(X, ["x^2"]))
print("probe on (x^2):", probe["verdict"], "witness", probe["witness"])

curve = monomial_curve_example()
print("curve: f in Rees", curve["f_in_rees"], "f^2 in Rees", curve["f2_in_rees"])

F3 = GradedPolyRing(["x1", "x2"], field=FF(3))
print("Fedder on (x1*x2) over F_3:", fedder_coherence(Ideal(F3, ["x1*x2"]))["agree"])
