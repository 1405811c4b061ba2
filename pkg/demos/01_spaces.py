#!/usr/bin/env python3
# Finite spaces as specialization preorders.
#
# A finite topology is the same data as a reflexive transitive relation:
# i <= j when i lies in the closure of {j}.  Open sets are the up-sets.
# This script builds the standard small spaces and pokes at the kernel
# operations.

from topogame import (
    FiniteSpace,
    chain,
    delta_space,
    discrete,
    enumerate_maximal_cellular,
    fan,
    indiscrete,
    is_regular,
    mask_of,
    maximal_disjoint_refinement,
    points_of,
    product,
    sierpinski,
    space_to_json,
)


def show(name, space):
    opens = [points_of(o) for o in space.opens()]
    print(f"{name}: n={space.n}, opens={opens}")


# The four-point zoo.
show("discrete(3)", discrete(3))
show("indiscrete(3)", indiscrete(3))
show("sierpinski", sierpinski())
show("chain(3)", chain(3))
show("fan(2)", fan(2))

s = sierpinski()
print("\nIn the Sierpinski space the open point is dense:")
print("  closure({1}) =", points_of(s.closure(mask_of([1]))))
print("  interior({0}) =", points_of(s.interior(mask_of([0]))))

# Maximal cellular families: pairwise disjoint opens nothing open avoids.
print("\nMaximal cellular families of the Sierpinski space:")
for family in enumerate_maximal_cellular(s):
    print("  ", [points_of(m) for m in family])

# Refining a dense-union family into a cellular one, with witnesses.
d2 = discrete(2)
family = [mask_of([0]), mask_of([0, 1])]
refinement, witness = maximal_disjoint_refinement(d2, family)
print("\nGreedy cellular refinement of {{0},{0,1}} in discrete(2):")
for m in refinement:
    print(f"  {points_of(m)} inside witness {points_of(witness[m])}")

# Finite spaces are Alexandrov: re-generating the topology from
# countable intersections of opens changes nothing.
print("\ndelta_space(chain(4)) == chain(4):", delta_space(chain(4)) == chain(4))

# Finite regular spaces are exactly the partition topologies.
print("is_regular(sierpinski):", is_regular(s))

# Products carry the componentwise preorder.
p = product(s, s)
print(f"\nsierpinski x sierpinski has {len(p.opens())} open sets on {p.n} points")

print("\nWire format:")
print(space_to_json(s))
