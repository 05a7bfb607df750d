"""Splitting all n-necklaces over S3 by the conjugacy class of the product.

Every tuple's product lands in exactly one class, so the class-by-class
counts add up to the plain count of n-necklaces with 6 colours.
"""

from necklaces import build_group, conjugacy_classes, count_K_necklaces, count_moreau, make_subset
from necklaces.oracle import rotation_orbits

S3 = build_group('S3')
classes = [make_subset(S3, c) for c in conjugacy_classes(S3)]

for n in range(1, 7):
    parts = []
    for K in classes:
        formula = count_K_necklaces(S3, K, n).value
        assert formula == len(rotation_orbits(S3, n, K))
        parts.append(formula)
    names = ' + '.join(map(str, parts))
    print(f"n={n}: {names} = {sum(parts)}   (6-colour necklaces: {count_moreau(6, n).value})")

print("\nclasses:", ['{' + ', '.join(S3.labels[i] for i in K) + '}' for K in classes])
