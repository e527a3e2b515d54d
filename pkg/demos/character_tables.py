"""Exact character tables, from scratch.

Tables are computed over a finite field and lifted to exact cyclotomic
values, so orthogonality can be asserted with equality rather than
tolerances.  The value strings write z for a primitive e-th root of unity,
where e is the group exponent.
"""

from cmkit import (
    FiniteGroup,
    Permutation,
    build_gm,
    character_table,
    inner_product,
    Cyclotomic,
)

s3 = FiniteGroup.from_generators(3, [Permutation([1, 0, 2]), Permutation([1, 2, 0])])

for name, G in (("S3", s3), ("C6", FiniteGroup.cyclic(6)), ("gm(6)", build_gm(6).group)):
    T = character_table(G)
    classes = G.conjugacy_classes()
    print(f"{name}: order {G.order}, {len(classes)} classes, conductor {T.conductor}")
    header = "  ".join(f"{c.representative.cycle_string():>12}" for c in classes[:6])
    print(" " * 6 + header + ("  ..." if len(classes) > 6 else ""))
    for chi in T.irreducibles[:8]:
        row = "  ".join(f"{v.to_string():>12}" for v in chi.values[:6])
        print(f"deg {chi.degree}  " + row + ("  ..." if len(classes) > 6 else ""))
    if len(T.irreducibles) > 8:
        print(f"... {len(T.irreducibles) - 8} more rows")

    # exact orthonormality, no epsilons anywhere
    one, zero = Cyclotomic.one(), Cyclotomic.zero()
    for i, a in enumerate(T.irreducibles):
        for j, b in enumerate(T.irreducibles):
            assert inner_product(a, b) == (one if i == j else zero)
    print("orthogonality: exact")
    print()
