"""Subgroup lattices, normal structure, and chief series.

Subgroups are bitmasks over element indices.  The full lattice is
computed by closing the cyclic subgroups under joins; every subgroup is
a join of cyclic ones, and any subgroup can be reached by adjoining one
cyclic subgroup at a time, so joining found subgroups against cyclic
subgroups until nothing new appears is exhaustive.

All listings come back in a canonical order, sorted by (order, members
mask), so downstream choices like "the first witness" are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import is_prime, p_part, prime_divisors, prime_power_base
from .errors import InvalidParameters, PrimeDoesNotDivideOrder
from .groups import Group, is_normal_mask, iter_bits


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of some fixed ambient group, as a member bitmask."""

    members: int
    order: int
    is_normal: bool

    def __contains__(self, element: int) -> bool:
        return bool(self.members >> element & 1)

    def key(self) -> tuple[int, int]:
        return (self.order, self.members)


@dataclass(frozen=True)
class CyclicSubgroup:
    """A cyclic subgroup tagged with its least-index generator."""

    subgroup: Subgroup
    generator: int
    is_maximal: bool  # maximal among the cyclic subgroups, not in the lattice


@dataclass(frozen=True)
class ChiefFactor:
    """One factor of a chief series, between two normal subgroups."""

    lower: int
    upper: int
    factor_order: int
    complement_count: int
    is_central: bool
    prime: int | None

    @property
    def is_complemented(self) -> bool:
        return self.complement_count >= 1


def generated_mask(group: Group, seed_mask: int) -> int:
    """Subgroup generated by the elements of seed_mask."""
    t = group.cayley
    mask = 1
    members = [0]
    queue = [x for x in iter_bits(seed_mask) if x != 0]
    while queue:
        x = queue.pop()
        if mask >> x & 1:
            continue
        mask |= 1 << x
        members.append(x)
        for y in members:
            for z in (t[x][y], t[y][x]):
                if not mask >> z & 1:
                    queue.append(z)
    return mask


@lru_cache(maxsize=None)
def _cyclic_masks(group: Group) -> tuple[tuple[int, int], ...]:
    """(mask, least generator) for every cyclic subgroup, ascending scan."""
    t = group.cayley
    seen: dict[int, int] = {}
    for x in range(group.order):
        mask = 1
        y = x
        while y != 0:
            mask |= 1 << y
            y = t[y][x]
        if mask not in seen:
            seen[mask] = x
    return tuple(sorted(seen.items(), key=lambda kv: (kv[0].bit_count(), kv[0])))


@lru_cache(maxsize=None)
def _subgroup_masks(group: Group) -> tuple[int, ...]:
    full = group.full_mask
    found = {m for m, _ in _cyclic_masks(group)}
    nontrivial_cyclic = [m for m in found if m != 1]
    closure: dict[int, int] = {}
    full_seeds: list[int] = []
    worklist = list(found)
    while worklist:
        s = worklist.pop()
        for c in nontrivial_cyclic:
            if c & ~s == 0:
                continue
            u = s | c
            j = closure.get(u)
            if j is None:
                if u == full or any(fs & ~u == 0 for fs in full_seeds):
                    j = full
                else:
                    j = generated_mask(group, u)
                    if j == full:
                        full_seeds.append(u)
                closure[u] = j
            if j not in found:
                found.add(j)
                worklist.append(j)
    return tuple(sorted(found, key=lambda m: (m.bit_count(), m)))


@lru_cache(maxsize=None)
def all_subgroups(group: Group) -> tuple[Subgroup, ...]:
    return tuple(
        Subgroup(m, m.bit_count(), is_normal_mask(group, m))
        for m in _subgroup_masks(group)
    )


@lru_cache(maxsize=None)
def cyclic_subgroups(group: Group) -> tuple[CyclicSubgroup, ...]:
    pairs = _cyclic_masks(group)
    out = []
    for mask, gen in pairs:
        maximal = not any(
            other != mask and mask & ~other == 0 for other, _ in pairs
        )
        sub = Subgroup(mask, mask.bit_count(), is_normal_mask(group, mask))
        out.append(CyclicSubgroup(sub, gen, maximal))
    return tuple(out)


def maximal_subgroups(group: Group) -> tuple[Subgroup, ...]:
    subs = all_subgroups(group)
    full = group.full_mask
    proper = [s for s in subs if s.members != full]
    return tuple(
        s
        for s in proper
        if not any(
            t.members != s.members and s.members & ~t.members == 0 for t in proper
        )
    )


def normal_subgroups(group: Group) -> tuple[Subgroup, ...]:
    return tuple(s for s in all_subgroups(group) if s.is_normal)


def minimal_normal_subgroups(group: Group) -> tuple[Subgroup, ...]:
    normals = [s for s in normal_subgroups(group) if s.members != 1]
    return tuple(
        s
        for s in normals
        if not any(
            t.members != s.members and t.members & ~s.members == 0 for t in normals
        )
    )


def normal_core(group: Group, mask: int) -> int:
    core = mask
    for g in range(group.order):
        core &= group.conjugate_set(mask, g)
        if core == 1:
            break
    return core


def frattini_subgroup(group: Group) -> int:
    maximals = maximal_subgroups(group)
    phi = group.full_mask
    for s in maximals:
        phi &= s.members
    return phi


def derived_subgroup_mask(group: Group, mask: int) -> int:
    """Commutator subgroup [S, S] of the subgroup with the given mask."""
    members = list(iter_bits(mask))
    comms = 0
    for a in members:
        for b in members:
            comms |= 1 << group.commutator(a, b)
    return generated_mask(group, comms)


@lru_cache(maxsize=None)
def is_solvable(group: Group) -> bool:
    mask = group.full_mask
    while True:
        nxt = derived_subgroup_mask(group, mask)
        if nxt == mask:
            return mask == 1
        mask = nxt


def sylow_subgroup(group: Group, p: int) -> Subgroup:
    if not is_prime(p):
        raise InvalidParameters(f"p = {p} is not prime")
    if group.order % p != 0:
        raise PrimeDoesNotDivideOrder(
            f"{p} does not divide the group order {group.order}"
        )
    target = p_part(group.order, p)
    for s in all_subgroups(group):
        if s.order == target:
            return s
    raise AssertionError("unreachable: Sylow subgroup must exist")


@lru_cache(maxsize=None)
def is_nilpotent(group: Group) -> bool:
    return all(
        sylow_subgroup(group, p).is_normal for p in prime_divisors(group.order)
    )


@lru_cache(maxsize=None)
def is_supersolvable(group: Group) -> bool:
    """Every maximal subgroup has prime index."""
    if group.order == 1:
        return True
    if not is_solvable(group):
        return False
    return all(
        is_prime(group.order // s.order) for s in maximal_subgroups(group)
    )


def _is_central_section(group: Group, upper: int, lower: int) -> bool:
    for x in iter_bits(upper & ~lower):
        for g in range(group.order):
            if not lower >> group.commutator(x, g) & 1:
                return False
    return True


def _complement_count(group: Group, lower: int, upper: int) -> int:
    """Subgroups A with A * upper = G and A meeting upper exactly in lower.

    The trivial witness A = lower is excluded: it only qualifies when
    upper is the whole group, and it carries no splitting information.
    """
    lo = lower.bit_count()
    up = upper.bit_count()
    count = 0
    for s in all_subgroups(group):
        if s.members == lower:
            continue
        if s.order * up == group.order * lo and (s.members & upper) == lower:
            count += 1
    return count


@lru_cache(maxsize=None)
def chief_series(group: Group) -> tuple[ChiefFactor, ...]:
    """A chief series of the group, canonically chosen.

    At each step the next term is the smallest (by order, then mask)
    normal subgroup of the whole group sitting minimally above the
    current term.  Each factor records its order, how many subgroups
    complement it, whether it is central, and the prime when the factor
    order is a prime power.
    """
    normals = [s.members for s in normal_subgroups(group)]
    factors: list[ChiefFactor] = []
    lower = 1
    while lower != group.full_mask:
        above = [m for m in normals if lower & ~m == 0 and m != lower]
        candidates = [
            m
            for m in above
            if not any(o != m and o & ~m == 0 for o in above)
        ]
        upper = min(candidates, key=lambda m: (m.bit_count(), m))
        order = upper.bit_count() // lower.bit_count()
        factors.append(
            ChiefFactor(
                lower=lower,
                upper=upper,
                factor_order=order,
                complement_count=_complement_count(group, lower, upper),
                is_central=_is_central_section(group, upper, lower),
                prime=prime_power_base(order),
            )
        )
        lower = upper
    return tuple(factors)


def has_normal_p_complement(group: Group, p: int) -> bool:
    if not is_prime(p):
        raise InvalidParameters(f"p = {p} is not prime")
    if group.order % p != 0:
        raise PrimeDoesNotDivideOrder(
            f"{p} does not divide the group order {group.order}"
        )
    target = group.order // p_part(group.order, p)
    return any(s.order == target for s in normal_subgroups(group))
