"""Four ways to get a Group, and what validation rejects.

Every constructor funnels through the same checks: identity first,
Latin rows and columns, two-sided inverses, associativity.  Elements
are plain ints indexing the multiplication table, and sets of elements
are int bitmasks throughout the library.
"""

from groupcovers import (
    NotLatinSquare,
    cyclic,
    dihedral,
    direct_product,
    from_permutation_generators,
    normal_subgroups,
    quotient,
    validate_group,
)

# 1. A raw multiplication table (here: the Klein four-group).
klein = validate_group(
    [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ],
    name="V4",
)
print(f"{klein.name}: order {klein.order}, abelian: {klein.is_abelian}")

# 2. Permutation generators in cycle notation.
s4 = from_permutation_generators(4, ["(1 2 3 4)", "(1 2)"], "S4")
print(f"{s4.name}: order {s4.order}, element orders {sorted(set(s4.element_orders))}")

# 3. Presets and products.
d6 = dihedral(6)
g = direct_product(cyclic(3), cyclic(4))
print(f"{d6.name}: center has {d6.center.bit_count()} elements")
print(f"{g.name}: cyclic: {g.is_cyclic}  (orders 3 and 4 are coprime)")

# 4. Quotients come with the projection homomorphism.
v4_in_s4 = next(s for s in normal_subgroups(s4) if s.order == 4)
q, pi = quotient(s4, v4_in_s4.members)
print(f"S4 / V4 has order {q.order}; pi maps the identity to {pi(0)}")
a, b = 5, 17
assert pi(s4.mul(a, b)) == q.mul(pi(a), pi(b))
print("pi respects multiplication on a sample pair")

# Validation failures name what went wrong and where.
try:
    validate_group([[0, 1, 2], [1, 2, 0], [2, 0, 2]])
except NotLatinSquare as exc:
    print(f"rejected: {exc}")
