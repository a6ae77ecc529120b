"""Covering a group by proper subgroups.

No group is the union of two proper subgroups, so the interesting
questions start at three members: how few subgroups can cover (sigma),
how large can an irredundant cover get (lambda, the number of maximal
cyclic subgroups), and which sizes in between actually occur.
"""

from groupcovers import (
    all_subgroups,
    cover_enumeration_stats,
    cyclic,
    dihedral,
    direct_product,
    enumerate_irredundant_covers,
    frobenius_style_cover,
    minimal_cover,
    sigma_exact,
    sigma_tomkinson,
    symmetric,
)

e8 = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2), name="E8")

print(f"sigma({e8.name}) = {sigma_exact(e8)}")
print(f"sigma(C7) = {sigma_exact(cyclic(7))}  (cyclic: no proper cover exists)")
witness = minimal_cover(e8)
print(f"a minimum cover of {e8.name}: member orders {[s.order for s in witness.members]}")

# The full irredundant landscape.  E8 shows a gap: sizes 3,4,5,7 occur
# but 6 never does.
stats = cover_enumeration_stats(e8)
print(f"{e8.name}: {stats.cover_count} irredundant covers")
for size, count in stats.size_counts:
    print(f"  size {size}: {count}")

# Q8 is at the opposite extreme: a single irredundant cover, so every
# irredundant cover has the same size.  demos/04 classifies all such
# groups.
from groupcovers import generalized_quaternion

q8 = generalized_quaternion(3)
covers = enumerate_irredundant_covers(q8)
print(f"{q8.name}: {len(covers)} irredundant cover(s)")

# For solvable groups sigma is also readable off a chief series: one
# more than the order of the smallest factor with several complements.
for g in (symmetric(3), symmetric(4), dihedral(6)):
    print(f"{g.name}: exact {sigma_exact(g)}, chief-factor formula {sigma_tomkinson(g)}")

# A hands-on family: a normal subgroup plus all conjugates of a cyclic
# core-free maximal complement covers with pairwise trivial overlaps.
d10 = dihedral(5)
n = next(s for s in all_subgroups(d10) if s.order == 5)
h = next(s for s in all_subgroups(d10) if s.order == 2)
built = frobenius_style_cover(d10, n, h)
print(f"{d10.name}: constructed cover of size {len(built)} = |N| + 1")
