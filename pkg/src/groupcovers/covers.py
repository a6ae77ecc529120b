"""Covers of a group by proper subgroups.

A cover is a family of proper subgroups whose union is the whole group;
it is irredundant when no member can be dropped, equivalently when every
member owns a private element.  This module computes the family of
maximal cyclic subgroups (whose size is the largest irredundant cover
size), the minimum cover size two independent ways, and the complete
set of irredundant covers for small groups.

The enumeration works at the level of generator traces.  Fix generators
x_1..x_k of the k maximal cyclic subgroups.  Every element is a power of
some x_i, so a family covers the group iff it covers the generators, and
a member's privacy can be witnessed by a private generator.  Members of
an irredundant cover therefore have pairwise distinct generator traces,
and swapping a member for another subgroup with the same trace preserves
both properties.  So the search runs over distinct traces and multiplies
in the per-trace subgroup counts afterwards, branching on the least
uncovered generator with an exclusion set so each trace family is
visited exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import (
    EnumerationBoundExceeded,
    GroupIsCyclic,
    InvariantViolation,
    NoFactorWithMultipleComplements,
    NotProperSubgroup,
    NotSolvable,
    NotSubgroup,
    PreconditionViolation,
)
from .groups import Group, is_normal_mask, is_subgroup_mask, iter_bits
from .lattice import (
    Subgroup,
    all_subgroups,
    chief_series,
    cyclic_subgroups,
    generated_mask,
    is_solvable,
    maximal_subgroups,
    normal_core,
)

DEFAULT_ENUM_BOUND = 32


@dataclass(frozen=True)
class SigmaValue:
    """Minimum cover size; None encodes infinity (cyclic groups)."""

    value: int | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "Infinite" if self.value is None else str(self.value)


INFINITE = SigmaValue(None)


@dataclass(frozen=True)
class Cover:
    """A family of proper subgroups in canonical (order, members) order."""

    members: tuple[Subgroup, ...]
    source_group_order: int

    def __len__(self) -> int:
        return len(self.members)

    def member_masks(self) -> tuple[int, ...]:
        return tuple(s.members for s in self.members)


@lru_cache(maxsize=None)
def _subgroup_by_mask(group: Group) -> dict[int, Subgroup]:
    return {s.members: s for s in all_subgroups(group)}


def _coerce_masks(family: Cover | Iterable[Subgroup | int]) -> list[int]:
    if isinstance(family, Cover):
        return [s.members for s in family.members]
    out = []
    for m in family:
        out.append(m.members if isinstance(m, Subgroup) else int(m))
    return out


def make_cover(group: Group, family: Iterable[Subgroup | int]) -> Cover:
    """Validate and canonicalize a family of proper subgroups."""
    lookup = _subgroup_by_mask(group)
    members: dict[int, Subgroup] = {}
    for mask in _coerce_masks(family):
        sub = lookup.get(mask)
        if sub is None:
            if not is_subgroup_mask(group, mask):
                raise NotSubgroup(f"mask {mask:#x} is not a subgroup")
            raise AssertionError("subgroup missing from lattice")
        if sub.order == group.order:
            raise NotProperSubgroup("cover members must be proper subgroups")
        members[mask] = sub
    ordered = tuple(sorted(members.values(), key=Subgroup.key))
    return Cover(ordered, group.order)


def is_cover(group: Group, family: Cover | Iterable[Subgroup | int]) -> bool:
    cov = family if isinstance(family, Cover) else make_cover(group, family)
    if any(s.order == group.order for s in cov.members):
        raise NotProperSubgroup("cover members must be proper subgroups")
    union = 0
    for s in cov.members:
        union |= s.members
    return union == group.full_mask


def is_irredundant(
    group: Group, family: Cover | Iterable[Subgroup | int]
) -> bool:
    """True iff the family is a cover and every member has a private element."""
    cov = family if isinstance(family, Cover) else make_cover(group, family)
    if not is_cover(group, cov):
        return False
    masks = cov.member_masks()
    for i, m in enumerate(masks):
        others = 0
        for j, o in enumerate(masks):
            if j != i:
                others |= o
        if m & ~others == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Maximal cyclic family and lambda


def maximal_cyclic_family(group: Group) -> Cover:
    if group.is_cyclic:
        raise GroupIsCyclic(
            "a cyclic group has a single maximal cyclic subgroup: itself"
        )
    members = tuple(
        sorted(
            (c.subgroup for c in cyclic_subgroups(group) if c.is_maximal),
            key=Subgroup.key,
        )
    )
    return Cover(members, group.order)


def lambda_(group: Group) -> int:
    """Number of maximal cyclic subgroups; the largest irredundant cover size."""
    return len(maximal_cyclic_family(group).members)


def maximal_cyclic_pairs_generate(group: Group) -> bool:
    """True iff any two distinct maximal cyclic subgroups generate the group.

    Holds for every group whose irredundant covers all have one size.
    """
    masks = maximal_cyclic_family(group).member_masks()
    full = group.full_mask
    return all(
        generated_mask(group, a | b) == full
        for i, a in enumerate(masks)
        for b in masks[i + 1 :]
    )


# ---------------------------------------------------------------------------
# Exact minimum cover size via branch and bound


def _min_set_cover(
    universe: int, candidates: Sequence[int], limit: int | None = None
) -> tuple[int, tuple[int, ...]] | None:
    """Minimum-cardinality subfamily of candidates covering the universe.

    Candidates must be in a fixed canonical order; ties everywhere break
    toward the earlier candidate so results are reproducible.  With a
    limit, returns None when no cover of size <= limit exists.
    """
    cands = list(candidates)
    if not cands:
        return None if universe else (0, ())
    max_gain = max(m.bit_count() for m in cands)

    unc = universe
    greedy: list[int] = []
    while unc:
        gain, pick = 0, -1
        for i, m in enumerate(cands):
            g = (m & unc).bit_count()
            if g > gain:
                gain, pick = g, i
        if pick < 0:
            break
        greedy.append(cands[pick])
        unc &= ~cands[pick]

    best_size = len(greedy) if unc == 0 else len(cands) + 1
    best_sel: tuple[int, ...] | None = tuple(greedy) if unc == 0 else None
    if limit is not None and limit + 1 < best_size:
        best_size, best_sel = limit + 1, None

    def rec(unc: int, chosen: list[int], banned: int) -> None:
        nonlocal best_size, best_sel
        if unc == 0:
            if len(chosen) < best_size:
                best_size, best_sel = len(chosen), tuple(chosen)
            return
        need = -(-unc.bit_count() // max_gain)
        if len(chosen) + need >= best_size:
            return
        options: list[int] | None = None
        for e in iter_bits(unc):
            opts = [
                i
                for i in range(len(cands))
                if not banned >> i & 1 and cands[i] >> e & 1
            ]
            if options is None or len(opts) < len(options):
                options = opts
                if not opts:
                    return
        assert options is not None
        for i in options:
            chosen.append(cands[i])
            rec(unc & ~cands[i], chosen, banned)
            chosen.pop()
            banned |= 1 << i

    rec(universe, [], 0)
    if best_sel is None or (limit is not None and best_size > limit):
        return None
    return best_size, best_sel


@lru_cache(maxsize=None)
def sigma_exact(group: Group) -> SigmaValue:
    """Exact minimum cover size, infinite for cyclic groups.

    Candidates are the maximal subgroups: enlarging each member of any
    cover to a maximal subgroup above it never increases the family
    size, so the optimum over maximal subgroups is the true optimum.
    """
    if group.is_cyclic:
        return INFINITE
    masks = [s.members for s in maximal_subgroups(group)]
    result = _min_set_cover(group.full_mask, masks)
    if result is None:
        raise InvariantViolation("maximal subgroups fail to cover a non-cyclic group")
    return SigmaValue(result[0])


def minimal_cover(group: Group) -> Cover:
    """A witness cover of size sigma_exact(group)."""
    if group.is_cyclic:
        raise GroupIsCyclic("cyclic groups have no cover by proper subgroups")
    masks = [s.members for s in maximal_subgroups(group)]
    result = _min_set_cover(group.full_mask, masks)
    assert result is not None
    size, sel = result
    cover = make_cover(group, sel)
    if len(cover.members) != size or not is_cover(group, cover):
        raise InvariantViolation("set-cover witness failed validation")
    return cover


@lru_cache(maxsize=None)
def sigma_tomkinson(group: Group) -> SigmaValue:
    """Minimum cover size via chief factors, for solvable groups.

    Equals q + 1 where q is the smallest order of a chief factor with
    at least two complements.
    """
    if group.is_cyclic:
        return INFINITE
    if not is_solvable(group):
        raise NotSolvable("the chief-factor formula applies to solvable groups")
    orders = [
        f.factor_order for f in chief_series(group) if f.complement_count >= 2
    ]
    if not orders:
        raise NoFactorWithMultipleComplements(
            f"{group.name}: no chief factor has two or more complements"
        )
    return SigmaValue(min(orders) + 1)


# ---------------------------------------------------------------------------
# Exhaustive irredundant-cover enumeration


@dataclass(frozen=True)
class _SearchSpace:
    """Proper subgroups bucketed by generator trace.

    generators: the chosen generator element of each maximal cyclic
    subgroup.  traces: distinct nonzero bitmasks over those generators.
    class_masks[i]: the subgroup masks whose trace is traces[i].
    """

    generators: tuple[int, ...]
    traces: tuple[int, ...]
    class_masks: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _search_space(group: Group) -> _SearchSpace:
    family = [c for c in cyclic_subgroups(group) if c.is_maximal]
    family.sort(key=lambda c: c.subgroup.key())
    gens = tuple(c.generator for c in family)
    buckets: dict[int, list[int]] = {}
    for sub in all_subgroups(group):
        if sub.order == group.order:
            continue
        trace = 0
        for i, g in enumerate(gens):
            if sub.members >> g & 1:
                trace |= 1 << i
        if trace:
            buckets.setdefault(trace, []).append(sub.members)
    traces = tuple(sorted(buckets, key=lambda t: (t.bit_count(), t)))
    classes = tuple(tuple(sorted(buckets[t])) for t in traces)
    return _SearchSpace(gens, traces, classes)


def _walk_trace_covers(
    space: _SearchSpace,
    on_cover: Callable[[tuple[int, ...], bool], None],
    size_cap: int | None,
) -> None:
    """Visit every irredundant trace family exactly once.

    on_cover receives the chosen trace indices and whether every chosen
    trace is a singleton.  Branches on the least uncovered generator;
    traces already tried at a node are banned in later branches, which
    partitions the cover space.  A branch is abandoned as soon as any
    chosen trace loses its last private generator, since privacy only
    shrinks as members are added.
    """
    traces = space.traces
    k = len(space.generators)
    by_gen: list[list[int]] = [[] for _ in range(k)]
    for tid, t in enumerate(traces):
        for g in iter_bits(t):
            by_gen[g].append(tid)

    chosen: list[int] = []

    def rec(
        uncovered: int, banned: int, union: int, priv: list[int], singles: bool
    ) -> None:
        if uncovered == 0:
            on_cover(tuple(chosen), singles)
            return
        if size_cap is not None and len(chosen) >= size_cap:
            return
        g = (uncovered & -uncovered).bit_length() - 1
        for tid in by_gen[g]:
            if banned >> tid & 1:
                continue
            t = traces[tid]
            fresh = t & ~union
            if fresh == 0 or any(p & ~t == 0 for p in priv):
                banned |= 1 << tid
                continue
            chosen.append(tid)
            rec(
                uncovered & ~t,
                banned,
                union | t,
                [p & ~t for p in priv] + [fresh],
                singles and t.bit_count() == 1,
            )
            chosen.pop()
            banned |= 1 << tid

    rec((1 << k) - 1, 0, 0, [], True)


@dataclass(frozen=True)
class EnumerationStats:
    """Counts from a full irredundant-cover walk, no covers materialized."""

    cover_count: int
    size_counts: tuple[tuple[int, int], ...]
    multi_trace_sizes: tuple[int, ...]

    @property
    def min_size(self) -> int:
        return self.size_counts[0][0]

    @property
    def max_size(self) -> int:
        return self.size_counts[-1][0]


def _check_enumerable(group: Group, enum_bound: int) -> None:
    if group.is_cyclic:
        raise GroupIsCyclic("cyclic groups have no cover by proper subgroups")
    if group.order > enum_bound:
        raise EnumerationBoundExceeded(group.order, enum_bound)


@lru_cache(maxsize=None)
def cover_enumeration_stats(
    group: Group,
    size_cap: int | None = None,
    *,
    enum_bound: int = DEFAULT_ENUM_BOUND,
) -> EnumerationStats:
    _check_enumerable(group, enum_bound)
    space = _search_space(group)
    class_sizes = [len(c) for c in space.class_masks]
    counts: dict[int, int] = {}
    multi: set[int] = set()

    def tally(tids: tuple[int, ...], singles: bool) -> None:
        n = 1
        for tid in tids:
            n *= class_sizes[tid]
        counts[len(tids)] = counts.get(len(tids), 0) + n
        if not singles:
            multi.add(len(tids))

    _walk_trace_covers(space, tally, size_cap)
    if not counts and size_cap is None:
        raise InvariantViolation("no irredundant cover found for a non-cyclic group")
    return EnumerationStats(
        cover_count=sum(counts.values()),
        size_counts=tuple(sorted(counts.items())),
        multi_trace_sizes=tuple(sorted(multi)),
    )


def irredundant_cover_sizes(
    group: Group, *, enum_bound: int = DEFAULT_ENUM_BOUND
) -> tuple[int, ...]:
    """All sizes attained by irredundant covers, ascending."""
    stats = cover_enumeration_stats(group, enum_bound=enum_bound)
    return tuple(size for size, _ in stats.size_counts)


def enumerate_irredundant_covers(
    group: Group,
    size_cap: int | None = None,
    *,
    enum_bound: int = DEFAULT_ENUM_BOUND,
) -> frozenset[Cover]:
    """The complete set of irredundant covers (size <= size_cap if given).

    Materializes one Cover per result, so on groups with very many
    irredundant covers (large elementary abelian ones especially) prefer
    cover_enumeration_stats.
    """
    _check_enumerable(group, enum_bound)
    space = _search_space(group)
    lookup = _subgroup_by_mask(group)
    found: list[Cover] = []

    def emit(tids: tuple[int, ...], _singles: bool) -> None:
        pools = [space.class_masks[tid] for tid in tids]
        for combo in itertools.product(*pools):
            members = tuple(
                sorted((lookup[m] for m in combo), key=Subgroup.key)
            )
            found.append(Cover(members, group.order))

    _walk_trace_covers(space, emit, size_cap)
    return frozenset(found)


# ---------------------------------------------------------------------------
# The normal-subgroup-plus-conjugates cover construction


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionViolation(message)


def frobenius_style_cover(
    group: Group, normal: Subgroup | int, complement: Subgroup | int
) -> Cover:
    """Cover {N} plus all conjugates of H, for G = N x| H with H cyclic,
    maximal, and core-free.  Always has size |N| + 1, is irredundant,
    and its members intersect pairwise in the identity alone.
    """
    n_mask = normal.members if isinstance(normal, Subgroup) else int(normal)
    h_mask = complement.members if isinstance(complement, Subgroup) else int(complement)
    _require(is_subgroup_mask(group, n_mask), "N is not a subgroup")
    _require(is_subgroup_mask(group, h_mask), "H is not a subgroup")
    h_order = h_mask.bit_count()
    _require(
        max(group.element_order(x) for x in iter_bits(h_mask)) == h_order,
        "H is not cyclic",
    )
    _require(
        any(s.members == h_mask for s in maximal_subgroups(group)),
        "H is not a maximal subgroup",
    )
    _require(normal_core(group, h_mask) == 1, "H is not core-free")
    _require(is_normal_mask(group, n_mask), "N is not normal")
    _require(n_mask & h_mask == 1, "N and H intersect nontrivially")
    n_order = n_mask.bit_count()
    _require(n_order * h_order == group.order, "N H does not exhaust the group")

    conjugates = {group.conjugate_set(h_mask, g) for g in range(group.order)}
    cover = make_cover(group, [n_mask, *conjugates])

    if len(cover.members) != n_order + 1:
        raise InvariantViolation(
            f"expected |N|+1 = {n_order + 1} members, built {len(cover.members)}"
        )
    if not is_irredundant(group, cover):
        raise InvariantViolation("constructed cover is not irredundant")
    masks = cover.member_masks()
    for a, b in itertools.combinations(masks, 2):
        if a & b != 1:
            raise InvariantViolation("two members intersect beyond the identity")
    return cover


# ---------------------------------------------------------------------------
# One-sizedness by brute force


def one_sized_bruteforce(
    group: Group, *, enum_bound: int = DEFAULT_ENUM_BOUND
) -> bool:
    """True iff every irredundant cover has the same size.

    Irredundant cover sizes always fill the range endpoints sigma and
    lambda, so this reduces to lambda == sigma; within the enumeration
    bound the full size set is cross-checked.
    """
    lam = lambda_(group)
    sig = sigma_exact(group).value
    assert sig is not None
    answer = lam == sig
    if group.order <= enum_bound:
        sizes = irredundant_cover_sizes(group, enum_bound=enum_bound)
        if sizes[0] != sig or sizes[-1] != lam or (len(sizes) == 1) != answer:
            raise InvariantViolation(
                f"{group.name}: enumerated sizes {sizes} conflict with "
                f"sigma={sig}, lambda={lam}"
            )
    return answer


__all__ = [
    "Cover",
    "SigmaValue",
    "INFINITE",
    "EnumerationStats",
    "make_cover",
    "is_cover",
    "is_irredundant",
    "maximal_cyclic_family",
    "lambda_",
    "maximal_cyclic_pairs_generate",
    "sigma_exact",
    "minimal_cover",
    "sigma_tomkinson",
    "cover_enumeration_stats",
    "irredundant_cover_sizes",
    "enumerate_irredundant_covers",
    "frobenius_style_cover",
    "one_sized_bruteforce",
]
