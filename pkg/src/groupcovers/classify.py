"""Structural recognition of the groups whose irredundant covers all
have one size, plus corpus-level consistency checks.

The decision procedure looks for a decomposition G = H x C into normal
subgroups with C cyclic of coprime order and H one of three recognized
shapes: elementary abelian of rank 2, the quaternion group of order 8,
or a nonabelian split extension of a prime-order group by a coprime
cyclic group.  Recognition is by numeric invariants (order, exponent,
involution count, existence of specific subgroups), never by general
isomorphism search; at these shapes the invariants are characterizing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_prime, prime_divisors
from .covers import lambda_, one_sized_bruteforce, sigma_exact, _min_set_cover
from .errors import (
    GroupIsCyclic,
    NotSolvable,
    PreconditionViolation,
    PrimeDoesNotDivideOrder,
)
from .groups import Group, iter_bits, quotient
from .lattice import (
    Subgroup,
    all_subgroups,
    chief_series,
    has_normal_p_complement,
    is_solvable,
    normal_subgroups,
)

DEFAULT_ENUM_BOUND = 32


@dataclass(frozen=True)
class FamilyTag:
    """Which recognized shape the H factor has."""

    kind: str  # "CpTimesCp" | "Q8" | "CpRtimesCn"
    p: int | None = None
    n: int | None = None


@dataclass(frozen=True)
class ClassificationOutcome:
    one_sized: bool
    family: FamilyTag | None
    witness_h: Subgroup | None
    witness_c: Subgroup | None


def _is_abelian_within(group: Group, mask: int) -> bool:
    t = group.cayley
    members = list(iter_bits(mask))
    return all(
        t[a][b] == t[b][a]
        for i, a in enumerate(members)
        for b in members[i + 1 :]
    )


def _is_cyclic_subgroup(group: Group, sub: Subgroup) -> bool:
    return max(group.element_order(x) for x in iter_bits(sub.members)) == sub.order


def _is_normal_within(group: Group, ambient: int, sub: int) -> bool:
    return all(
        group.conjugate_set(sub, g) == sub for g in iter_bits(ambient)
    )


def _recognize_family(group: Group, h: Subgroup) -> FamilyTag | None:
    m = h.order
    orders = [group.element_order(x) for x in iter_bits(h.members)]
    abelian = _is_abelian_within(group, h.members)

    root = isqrt(m)
    if root * root == m and is_prime(root) and abelian:
        if all(o in (1, root) for o in orders):
            return FamilyTag("CpTimesCp", p=root)

    if m == 8 and not abelian and orders.count(2) == 1:
        return FamilyTag("Q8")

    if abelian:
        return None
    inside = [s for s in all_subgroups(group) if s.members & ~h.members == 0]
    for p in prime_divisors(m):
        n = m // p
        if n < 2 or n % p == 0:
            continue
        has_normal_p = any(
            s.order == p and _is_normal_within(group, h.members, s.members)
            for s in inside
        )
        if not has_normal_p:
            continue
        if any(s.order == n and _is_cyclic_subgroup(group, s) for s in inside):
            return FamilyTag("CpRtimesCn", p=p, n=n)
    return None


@lru_cache(maxsize=None)
def classify(group: Group) -> ClassificationOutcome:
    """Decide one-sizedness structurally, returning the witnesses.

    Searches normal-subgroup pairs (H, C) in canonical order for a
    decomposition with H of recognized shape, C cyclic, trivial
    intersection, coprime orders, and |H||C| = |G|.  C may be trivial.
    """
    if group.is_cyclic:
        raise GroupIsCyclic("cyclic groups admit no cover at all")
    normals = normal_subgroups(group)
    for h in normals:
        family = _recognize_family(group, h)
        if family is None:
            continue
        for c in normals:
            if h.members & c.members != 1:
                continue
            if h.order * c.order != group.order:
                continue
            if gcd(h.order, c.order) != 1:
                continue
            if not _is_cyclic_subgroup(group, c):
                continue
            return ClassificationOutcome(True, family, h, c)
    return ClassificationOutcome(False, None, None, None)


@dataclass(frozen=True)
class ClassificationAgreement:
    structural: ClassificationOutcome
    bruteforce: bool
    lambda_value: int
    sigma_value: int

    @property
    def agreement(self) -> bool:
        return self.structural.one_sized == self.bruteforce


def verify_classification(
    group: Group, *, enum_bound: int = DEFAULT_ENUM_BOUND
) -> ClassificationAgreement:
    """Run the structural decision and the cover-based one side by side."""
    outcome = classify(group)
    brute = one_sized_bruteforce(group, enum_bound=enum_bound)
    sig = sigma_exact(group).value
    assert sig is not None
    return ClassificationAgreement(
        structural=outcome,
        bruteforce=brute,
        lambda_value=lambda_(group),
        sigma_value=sig,
    )


# ---------------------------------------------------------------------------
# Chief-factor centrality versus normal p-complements


@dataclass(frozen=True)
class PNilpotenceCheck:
    prime: int
    hypothesis_holds: bool
    conclusion_holds: bool
    status: str  # "consistent" | "vacuous" | "violation"


def check_p_nilpotence(group: Group, p: int) -> PNilpotenceCheck:
    """If every complemented chief factor of p-power order is central,
    the group must have a normal p-complement.  Records both truths."""
    if not is_solvable(group):
        raise NotSolvable("chief-factor centrality check needs a solvable group")
    if group.order % p != 0:
        raise PrimeDoesNotDivideOrder(
            f"{p} does not divide the group order {group.order}"
        )
    hypothesis = all(
        f.is_central
        for f in chief_series(group)
        if f.is_complemented and f.prime == p
    )
    conclusion = has_normal_p_complement(group, p)
    if not hypothesis:
        status = "vacuous"
    elif conclusion:
        status = "consistent"
    else:
        status = "violation"
    return PNilpotenceCheck(p, hypothesis, conclusion, status)


# ---------------------------------------------------------------------------
# Abelian minimum-size covers force solvability


@dataclass(frozen=True)
class AbelianCoverCheck:
    sigma: int
    abelian_cover_exists: bool
    solvable: bool
    status: str


def _maximal_abelian_proper_masks(group: Group) -> list[int]:
    abelian = [
        s.members
        for s in all_subgroups(group)
        if s.order < group.order and _is_abelian_within(group, s.members)
    ]
    return [
        m
        for m in abelian
        if not any(o != m and m & ~o == 0 for o in abelian)
    ]


def check_abelian_sigma_cover(group: Group) -> AbelianCoverCheck:
    """Does some cover of minimum size consist of abelian subgroups?

    Any abelian member extends to a maximal abelian subgroup, so the
    search runs exact set cover over those, capped at sigma.  Existence
    must imply solvability.
    """
    if group.is_cyclic:
        raise GroupIsCyclic("cyclic groups have no cover by proper subgroups")
    sig = sigma_exact(group).value
    assert sig is not None
    found = _min_set_cover(
        group.full_mask, sorted(_maximal_abelian_proper_masks(group)), limit=sig
    )
    exists = found is not None
    solvable = is_solvable(group)
    if not exists:
        status = "vacuous"
    elif solvable:
        status = "consistent"
    else:
        status = "violation"
    return AbelianCoverCheck(sig, exists, solvable, status)


# ---------------------------------------------------------------------------
# Quotient invariants of one-sized groups


@dataclass(frozen=True)
class QuotientCheckItem:
    normal_order: int
    quotient_order: int
    sigma_quotient: int
    lambda_quotient: int


@dataclass(frozen=True)
class QuotientInvariantsCheck:
    sigma: int
    items: tuple[QuotientCheckItem, ...]
    status: str


def check_quotient_invariants(
    group: Group, *, enum_bound: int = DEFAULT_ENUM_BOUND
) -> QuotientInvariantsCheck:
    """For a one-sized group, every non-cyclic quotient must again have
    minimum cover size sigma(G) and exactly sigma(G) maximal cyclic
    subgroups."""
    if not one_sized_bruteforce(group, enum_bound=enum_bound):
        raise PreconditionViolation(
            "quotient invariants only apply to one-sized groups"
        )
    sig = sigma_exact(group).value
    assert sig is not None
    items = []
    for n in normal_subgroups(group):
        q, _ = quotient(group, n.members)
        if q.is_cyclic:
            continue
        qsig = sigma_exact(q).value
        assert qsig is not None
        items.append(
            QuotientCheckItem(
                normal_order=n.order,
                quotient_order=q.order,
                sigma_quotient=qsig,
                lambda_quotient=lambda_(q),
            )
        )
    ok = all(
        it.sigma_quotient == sig and it.lambda_quotient == sig for it in items
    )
    return QuotientInvariantsCheck(
        sig, tuple(items), "consistent" if ok else "violation"
    )
