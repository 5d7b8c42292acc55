"""Enumerate admissible minimal-orbit weights and build the induced modules.

Run: python demos/minimal_orbit_tour.py
"""

from fractions import Fraction as F

import gtrel as g
from gtrel.classify import Sl2InducedParams
from gtrel.minimal_orbit import Level, hw_orbit_list, minimal_orbit_reps


def show(title):
    print()
    print("== " + title)


show("admissible level test")
for n, k in ((2, F(-3, 2)), (2, F(-1, 2)), (2, F(-3))):
    print("n=%d k=%s ->" % (n, k), g.admissible_level(n, k))

show("minimal-orbit representatives at (n,p,q) = (2,3,2)")
lvl = Level(2, 3, 2)
reps = list(minimal_orbit_reps(lvl))
for rep, w in reps:
    print("lambda_bar", rep.lambda_bar, "a", rep.a, "weight", w)

show("the dot-action orbit chain")
rep = reps[0][0]
for lam, case in hw_orbit_list(lvl, rep):
    M = g.hw_module_of(lam)
    sweep = g.weight_multiplicity_sweep(M, 4)
    print(lam, case.tag, "max box-4 multiplicity", max(sweep.values()))

show("sl2-induced twisted localization of the first branch")
ind = g.build_sl2_induced_minimal(lvl, rep, (F(-3, 2), F(0)), F(1, 3))
print("gamma:", ind.gamma)
print("mu:", ind.mu)
print("module relations:", ind.module.C.sorted())

show("the classifier recovers the branch from (gamma, mu)")
for lam, x, case in g.resolve_sl2_induced(Sl2InducedParams(ind.gamma, ind.mu)):
    print("branch", lam, "x", x, case.tag)

show("a larger level: (2,5,2) has six representatives")
lvl5 = Level(2, 5, 2)
for rep5, w in minimal_orbit_reps(lvl5):
    sweep = g.weight_multiplicity_sweep(g.hw_module_of(w), 3)
    print(
        rep5.lambda_bar,
        "weight",
        w,
        "max mult",
        max(sweep.values()),
        "bound",
        rep5.lambda_bar[1] + 1,
    )
