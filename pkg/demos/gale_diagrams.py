"""Gale diagrams of codimension-two configurations and their sign classes."""

from normaltoric import Configuration, gale_diagram, sign_classes
from normaltoric.exactmath import IntegerMatrix
from normaltoric.gale import find_four_quadrant_basis, find_imbalanced_basis, quadrants_hit
from normaltoric.binomial import toric_ideal_mingens

cubic = IntegerMatrix([[1, 1, 1, 1], [0, 1, 2, 3]])
G = gale_diagram(cubic)
G.check()  # A·B = 0 and B spans the whole kernel lattice
print("points:", G.points)
print("classes:", sign_classes(G))
print("open quadrants hit:", sorted(quadrants_hit(G)))

# Complete intersections admit an imbalanced diagram; the twisted cubic has three
# generators and none turns up.
for rows in ([[1, 1, 0, 0], [0, 0, 1, 1]], [[1, 1, 1, 1], [0, 1, 2, 3]]):
    cfg = Configuration(rows)
    found = find_imbalanced_basis(cfg.gale())
    print(f"\n{rows}: {len(toric_ideal_mingens(cfg))} generators,",
          "imbalanced basis" if found else "no imbalanced basis", found.points if found else "")

# The rational quartic is not normal; some basis change spreads its points over
# all four open quadrants, which forces at least four generators.
quartic = Configuration([[1, 1, 1, 1], [0, 1, 3, 4]])
H = find_four_quadrant_basis(quartic.gale())
print("\nquartic four-quadrant basis:", H.points if H else None)
for g in toric_ideal_mingens(quartic):
    print("  ", g)
