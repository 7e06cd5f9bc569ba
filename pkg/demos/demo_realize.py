"""Walk through realizing a target count and inspecting the result.

Run:  python3 demos/demo_realize.py [n]
"""

import sys

from misynth import count_mis, realize, to_dimacs, vertex_report

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2026

result = realize(n)
g = result.graph

print(f"target count          : {n}")
print(f"vertices used         : {g.num_vertices}  "
      f"(left {g.left_size}, right {g.right_size})")
print(f"lower bound 2*log2(n) : {result.certificate.lower_bound}")
print(f"upper budget          : {result.certificate.budget:.1f}")
print()

print("construction ledger (innermost first):")
for step in result.ledger:
    print(f"  {step.kind:<16} {step.params}  ->  count {step.predicted_count}, "
          f"{step.vertex_count} vertices")
print()

# within oracle reach the count can be confirmed by brute force
if g.min_part() <= 40:
    print(f"oracle recount        : {count_mis(g)}")
print()

report = vertex_report(result)
print(f"vertices per bit      : {report['ratio']:.3f}" if report["ratio"] else "")
print()
print("the graph itself, DIMACS-style:")
print(to_dimacs(g), end="")
