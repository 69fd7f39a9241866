"""Covering radius of kernel polytopes: below one exactly for normal configurations."""

from fractions import Fraction

from normaltoric import Configuration, covering_radius_bounds, q_zero
from normaltoric.kernelgeom import unit_cube

for rows in ([[2, 3]], [[1, 2]], [[3, 5]], [[1, 1, 1, 1], [0, 1, 2, 3]], [[1, 1, 1], [0, 1, 3]]):
    cfg = Configuration(rows)
    Q = q_zero(cfg.gale())
    lo, hi = covering_radius_bounds(Q, Fraction(1, 64))
    side = "< 1, normal" if hi < 1 else "> 1, not normal" if lo > 1 else "near 1"
    line = f"{str(rows):32} radius in [{lo}, {hi}]  {side}"
    if Q.dim == 1:
        (a, b), = Q.bbox
        line += f"  (1/length = {1 / (b - a)})"
    print(line)

lo, hi = covering_radius_bounds(unit_cube(2))
print("unit square:", lo, hi)
