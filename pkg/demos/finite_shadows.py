"""Finite versions of the statements: chains in P(n) and small topologies.

Run: python3 demos/finite_shadows.py
"""

from orderchains import enumerate_max_chains, init_of_finite_order, make_tau, homeo_class, phi, verify_iso
from orderchains.finite import claim1_table

for n in range(6):
    print(f"P({n}): {len(enumerate_max_chains(n))} maximal chains")

c = init_of_finite_order((2, 0, 1))
print("\nchain of initial segments of 2 < 0 < 1:", c.to_hex())
for alpha, (a, b) in claim1_table(c).items():
    print(f"  alpha={alpha}: A={a:03b}  B={b:03b}  B == A + alpha: {b == a | 1 << alpha}")

tau = make_tau(4, 0b0011)
orbit = homeo_class(tau)
print(f"\nP({{0,1}}) + {{X}} on 4 points: {len(orbit)} relabelled copies")
print("  phi over the orbit:", sorted(format(phi(t), "04b") for t in orbit))
r = verify_iso(5, 2)
print(f"  n=5, s=2: class size {r['class_size']}, passed={r['passed']}")
print(f"  {r['note']}")
