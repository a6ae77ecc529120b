"""Walking the subgroup lattice of S4 and reading a chief series."""

from groupcovers import (
    all_subgroups,
    chief_series,
    frattini_subgroup,
    is_nilpotent,
    is_solvable,
    is_supersolvable,
    maximal_subgroups,
    symmetric,
    sylow_subgroup,
)

s4 = symmetric(4)
subs = all_subgroups(s4)
print(f"{s4.name} has {len(subs)} subgroups")

by_order = {}
for s in subs:
    by_order.setdefault(s.order, []).append(s)
for order in sorted(by_order):
    row = by_order[order]
    normal = sum(1 for s in row if s.is_normal)
    print(f"  order {order:2d}: {len(row):2d} subgroups, {normal} normal")

print(f"maximal subgroup orders: {[s.order for s in maximal_subgroups(s4)]}")
print(f"Sylow 2-subgroup order: {sylow_subgroup(s4, 2).order}")
print(f"Frattini subgroup size: {frattini_subgroup(s4).bit_count()}")

print(
    f"solvable={is_solvable(s4)} nilpotent={is_nilpotent(s4)}"
    f" supersolvable={is_supersolvable(s4)}"
)

# A chief series refines the group through normal subgroups; each factor
# records its order, whether it is central, and how many complements it
# has.  The complement counts drive the covering-number formula used in
# demos/03.
print("chief series factors (bottom up):")
for f in chief_series(s4):
    print(
        f"  order {f.factor_order} (p={f.prime})"
        f" central={f.is_central} complements={f.complement_count}"
    )
