"""Irreducible polynomials with vanishing x^(n-1) coefficient, via necklaces.

Write elements of F_{q^n} in a normal basis theta, theta^q, ...; Frobenius
then rotates coordinates. A coordinate vector summing to 0 is an element of
trace 0, and the trace is minus the x^(n-1) coefficient of the minimal
polynomial. So these polynomials are counted by aperiodic zero-sum necklaces.
"""

from necklaces import count_aperiodic
from necklaces.galois import (additive_group, build_base_field, build_extension,
                              enumerate_irreducibles, find_normal_basis, phi_map,
                              verify_phi_equivariance)

F2 = build_base_field(2)
K = build_extension(F2, 3)
theta = find_normal_basis(K)
print(f"F8 = F2[x]/({K.modulus_poly}), normal element theta = {theta}")
for a in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]:
    print(f"  phi{a} = {phi_map(K, a)}")

print("\n q  n  irreducibles  zero-sum aperiodic necklaces")
for q, p, e in [(2, 2, 1), (3, 3, 1), (4, 2, 2)]:
    F = build_base_field(p, e)
    for n in range(1, 6 if q < 4 else 4):
        polys = enumerate_irreducibles(F, n, second_coeff=0)
        print(f"{q:2d} {n:2d}  {len(polys):12d}  {count_aperiodic(additive_group(F), n).value:10d}")

print("\nover F3, degree 3:", ', '.join(str(f) for f in enumerate_irreducibles(build_base_field(3), 3, 0)))

rep = verify_phi_equivariance(build_extension(build_base_field(3), 4))
print("\nF81 / F3 check:")
for line in rep.lines():
    print(" ", line)
