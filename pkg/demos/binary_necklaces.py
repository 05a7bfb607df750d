"""Identity-product necklaces over C2, computed two ways.

Over C2 = {1, g} an n-tuple has product 1 iff g occurs an even number of
times, so the count below is the number of binary n-necklaces with an even
number of ones.
"""

from necklaces import build_group, count_identity_necklaces
from necklaces.oracle import format_orbit, rotation_orbits

C2 = build_group('C2')

print("n  formula  oracle")
for n in range(1, 10):
    print(f"{n}  {count_identity_necklaces(C2, n).value:7d}  {len(rotation_orbits(C2, n)):6d}")

# the divisor sum for n = 6, one row per d | 6
res = count_identity_necklaces(C2, 6)
print("\nn = 6:  d  phi(6/d)  [C2 : 6/d]  2^(d-1)")
for t in res.terms:
    print(f"        {t.d}  {t.weight:8d}  {t.torsion:10d}  {t.power:7d}")
print(f"sum {res.numerator_check} / 6 = {res.value}")

print("\nthe eight orbits (0 = identity, 1 = g):")
for orbit in rotation_orbits(C2, 6):
    print(" ", format_orbit(orbit), "period", orbit.smallest_period)
