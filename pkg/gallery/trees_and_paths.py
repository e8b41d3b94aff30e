"""Trees, paths and the maps between them.

A Schroeder tree with n leaves becomes a small Schroeder path by walking
the tree in preorder: leftmost children step up, rightmost children step
down, middle children step flat.  Reading the mirror image gives a second
map; composing one with the inverse of the other scrambles Dyck paths.
"""
from schroeder import bijections, objects

n = 4
trees = list(objects.enumerate_schroeder_trees(n))
print(f"{len(trees)} Schroeder trees with {n} leaves; each with its two path encodings:")
for t in trees:
    print(f"  {t.encode():<18} psi {bijections.psi(t).steps:<8} psi' {bijections.psi_prime(t).steps}")

print("\nalpha pairs paths with an even and an odd number of up steps:")
for a, b in bijections.mapping_pairs("alpha", n):
    print(f"  {a:<8} <-> {b}")

print("\nbeta turns a large path with a flat step on the axis into a small path:")
for a, b in bijections.mapping_pairs("beta", n):
    print(f"  {a:<8} -> {b}")

print("\ngamma permutes Dyck paths:")
for a, b in bijections.mapping_pairs("gamma", n):
    print(f"  {a:<8} -> {b}")

for name, check in bijections.CHECKS.items():
    reports = [check(m) for m in range(2, 8)]
    print(f"{name:>10}: exhaustive check for n = 2..7 {'passed' if all(r.passed for r in reports) else 'FAILED'}")
