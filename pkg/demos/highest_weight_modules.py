"""Build highest weight relation modules and inspect their structure.

Run: python demos/highest_weight_modules.py
"""

from fractions import Fraction as F

import gtrel as g


def show(title):
    print()
    print("== " + title)


show("classify a weight")
for lam in [(F(-3, 2), F(0)), (F(-2), F(0)), (F(-2), F(3))]:
    case = g.hw_relation_case(lam)
    print(lam, "->", case.tag, getattr(case, "i", ""), getattr(case, "j", ""))

show("case-a module for lambda = (-3/2, 0)")
M = g.hw_module_of((F(-3, 2), F(0)))
print("seed rows:", M.seed.rows)
print("relations:", M.C.sorted())
print("weight of seed:", g.weight_of(M.seed))

show("the seed is a highest weight vector")
v = g.basis_vector(g.zero_shift(2))
print("detected weight:", g.is_highest_weight_vector(M, v))
for k in (1, 2):
    print("E(%d,%d) kills it:" % (k, k + 1), g.act(M, g.gen_E(k, k + 1), v).is_zero())

show("generator action produces exact rational coefficients")
out = g.act(M, g.gen_E(2, 1), v)
for z, c in sorted(out.items()):
    print("shift", z, "coeff", c)

show("simplicity and the alpha_1 Casimir")
print("is_simple:", g.is_simple(M))
print("Casimir (H1+1)^2 + 4 E21 E12 on seed:", dict(g.casimir_alpha1(M, v)))

show("weight multiplicities inside a box")
sweep = g.weight_multiplicity_sweep(M, 3)
print("weights seen:", len(sweep), "max multiplicity:", max(sweep.values()))

show("axiom verification (exact, seeded)")
print(g.verify_axioms(M, box=3, samples=100, seed=1))
