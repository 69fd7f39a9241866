"""Searching for a term order with squarefree leading terms."""

from normaltoric import Configuration, TermOrder, buchberger, toric_ideal_mingens, verify_theorem1
from normaltoric.binomial import initial_ideal, format_monomial
from normaltoric.corpus import normal_configuration

cubic = Configuration([[1, 1, 1, 1], [0, 1, 2, 3]])
gens = toric_ideal_mingens(cubic)
print("minimal generators:", ", ".join(map(str, gens)))

# A weight that favours x1 and x4 makes every leading term squarefree.
G = buchberger(gens, TermOrder((1, 0, 0, 1)))
leads, squarefree = initial_ideal(G)
print("w = (1,0,0,1):", [format_monomial(a) for a in leads], "squarefree" if squarefree else "")
print("S-pairs reduced:", G.spair_reductions)

# Favouring the middle variables instead puts the squares in front.
G = buchberger(gens, TermOrder((0, 1, 1, 0)))
leads, squarefree = initial_ideal(G)
print("w = (0,1,1,0):", [format_monomial(a) for a in leads], "squarefree" if squarefree else "not squarefree")

# The search does this automatically for any normal input of codimension one or two.
for k in range(4):
    cfg = normal_configuration(2, 3, 3, seed=42, index=k)
    r = verify_theorem1(cfg)
    tag = r.codim2_class.tag if r.codim2_class else "-"
    print(f"\n{cfg.A.tolist()}  {tag}")
    print("  weight:", tuple(str(x) for x in r.order.weight))
    for b in r.groebner.binomials():
        print("   ", b)
