"""Show the built-in gadget family and how the recursion picks from it.

Each gadget maps a count n to h'*n + h''; running the table backwards from
a target therefore peels off roughly log2(h') bits per 12 vertices or
fewer.  The family below keeps that rate under 2.88 vertices per bit and
its progressions h'*k + h'' (k >= 2) cover every integer above 52.
"""

from math import log2

from misynth import load_gamma_family, select_gadget
from misynth.synthesizer import gadget_chain

family = load_gamma_family()

print(f"family gamma = {family.gamma:.4f}  (certified < 2.88), n0 = {family.n0}")
print()
print(" h'   h''   vertices   vertices/bit")
for m in family.sorted_by_ratio():
    print(f"{m.h_prime:3}  {m.h_dprime:4}   {m.num_vertices:8}   "
          f"{m.num_vertices / log2(m.h_prime):12.3f}")
print()

for n in (100, 75, 59, 10 ** 12 + 7):
    gadget, k = select_gadget(family, n)
    print(f"n = {n}: use ({gadget.h_prime}, {gadget.h_dprime}), recurse on k = {k}")
print()

n = 10 ** 12 + 7
base_n, chain = gadget_chain(n)
print(f"full chain for n = {n}: {len(chain)} attachments, "
      f"base table entry {base_n}")
print("pairs:", " ".join(f"({g.h_prime},{g.h_dprime})" for g in chain))
