"""Deciding normality two ways: the semigroup oracle and the kernel-polytope covering test."""

from normaltoric import Configuration, covers_space, normality_oracle, q_zero
from normaltoric.semigroup import in_cone, in_semigroup

# The numerical semigroup generated by 2 and 3 misses 1, although 1 lies in the cone
# and in the group they generate.
A = Configuration([[2, 3]])
print("1 in cone:", in_cone(A, (1,)) is not None)
print("1 in semigroup:", in_semigroup(A, (1,)))
print("5 in semigroup:", in_semigroup(A, (5,)))

for rows in ([[2, 3]], [[1, 2]], [[1, 1, 1, 1], [0, 1, 2, 3]], [[1, 1, 1, 1], [0, 1, 3, 4]]):
    cfg = Configuration(rows)
    cert = normality_oracle(cfg)
    Q = q_zero(cfg.gale())
    verdict = covers_space(Q)
    print(f"\nA = {rows}")
    print("  oracle:  normal" if cert.verdict else f"  oracle:  not normal, {cert.witness} is a hole")
    if verdict.covers:
        print("  covering: translates of Q0 cover space")
    else:
        print(f"  covering: point {tuple(str(x) for x in verdict.uncovered_witness)} is missed")
