"""Finite groups as validated multiplication tables.

A group of order n is stored as an n-by-n table over the element
indices 0..n-1, with index 0 always the identity.  Element sets
(subgroups, covers, centers) are passed around as plain int bitmasks,
which keeps the combinatorial layers allocation-free.

Construction routes: an explicit table (validated against all four
axioms), closure of permutation generators, one of the named preset
families, direct products, and quotients by a normal subgroup.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

from .arith import is_prime
from .errors import (
    InvalidParameters,
    MalformedCycle,
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    NotSubgroup,
    OrderBoundExceeded,
)

ORDER_BOUND = 512


# ---------------------------------------------------------------------------
# Bitmask helpers


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Table validation


def _as_array(cayley: Sequence[Sequence[int]]) -> np.ndarray:
    try:
        arr = np.array([[int(v) for v in row] for row in cayley], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise InvalidParameters(
            f"multiplication table must be a square array of integers ({exc})"
        ) from None
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[0] != arr.shape[1]:
        raise InvalidParameters("multiplication table must be square and nonempty")
    if arr.shape[0] > ORDER_BOUND:
        raise OrderBoundExceeded(ORDER_BOUND)
    return arr


def _check_axioms(arr: np.ndarray) -> tuple[int, ...]:
    """Validate identity, Latin property, inverses, associativity.

    Returns the inverse map.  Checks run in that fixed order so the
    reported error names the first broken axiom, not a downstream
    symptom of it.
    """
    n = arr.shape[0]
    idx = np.arange(n)

    out_of_range = (arr < 0) | (arr >= n)
    if out_of_range.any():
        row = int(np.argmax(out_of_range.any(axis=1)))
        raise NotLatinSquare("row", row)

    if not np.array_equal(arr[0], idx):
        raise NoIdentityAtZero("row 0 does not fix every element")
    if not np.array_equal(arr[:, 0], idx):
        raise NoIdentityAtZero("column 0 does not fix every element")

    row_ok = (np.sort(arr, axis=1) == idx).all(axis=1)
    if not row_ok.all():
        raise NotLatinSquare("row", int(np.argmax(~row_ok)))
    col_ok = (np.sort(arr, axis=0) == idx[:, None]).all(axis=0)
    if not col_ok.all():
        raise NotLatinSquare("column", int(np.argmax(~col_ok)))

    # Rows are permutations, so a right inverse exists; demand it also
    # works from the left.
    right_inv = np.argmax(arr == 0, axis=1)
    two_sided = arr[right_inv, idx] == 0
    if not two_sided.all():
        raise MissingInverse(int(np.argmax(~two_sided)))

    for a in range(n):
        left = arr[arr[a]]
        right = arr[a][arr]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            raise NotAssociative(a, int(b), int(c))

    return tuple(int(v) for v in right_inv)


# ---------------------------------------------------------------------------
# The Group class


class Group:
    """An immutable finite group given by its multiplication table.

    Two Group objects are never considered equal, even for identical
    tables; identity semantics let per-group caches key on the object
    itself.
    """

    def __init__(
        self,
        cayley: Sequence[Sequence[int]],
        name: str | None = None,
        *,
        _trusted: bool = False,
    ) -> None:
        arr = _as_array(cayley)
        if _trusted:
            inverse = tuple(int(v) for v in np.argmax(arr == 0, axis=1))
        else:
            inverse = _check_axioms(arr)
        self.order: int = int(arr.shape[0])
        self.cayley: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(v) for v in row) for row in arr
        )
        self.inverse: tuple[int, ...] = inverse
        self.name: str = name if name is not None else f"G{self.order}"

    def __repr__(self) -> str:
        return f"<Group {self.name!r} of order {self.order}>"

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def elements(self) -> range:
        return range(self.order)

    # -- arithmetic on element indices

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 * x * g."""
        t = self.cayley
        return t[t[self.inverse[g]][x]][g]

    def commutator(self, a: int, b: int) -> int:
        """a^-1 * b^-1 * a * b."""
        t = self.cayley
        return t[t[t[self.inverse[a]][self.inverse[b]]][a]][b]

    def power(self, x: int, k: int) -> int:
        m = self.element_order(x)
        k %= m
        acc = 0
        for _ in range(k):
            acc = self.cayley[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        y = x
        k = 1
        while y != 0:
            y = self.cayley[y][x]
            k += 1
        return k

    # -- whole-group invariants

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(x) for x in range(self.order))

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.cayley
        return all(
            t[a][b] == t[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    @cached_property
    def is_cyclic(self) -> bool:
        return max(self.element_orders) == self.order

    @cached_property
    def center(self) -> int:
        t = self.cayley
        n = self.order
        m = 0
        for x in range(n):
            if all(t[x][g] == t[g][x] for g in range(n)):
                m |= 1 << x
        return m

    # -- element-set operations

    def centralizer(self, mask: int) -> int:
        t = self.cayley
        targets = list(iter_bits(mask))
        out = 0
        for g in range(self.order):
            if all(t[g][x] == t[x][g] for x in targets):
                out |= 1 << g
        return out

    def conjugate_set(self, mask: int, g: int) -> int:
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self.conjugate(x, g)
        return out


def validate_group(
    cayley: Sequence[Sequence[int]], name: str | None = None
) -> Group:
    """Build a Group from a raw table, raising on any broken axiom."""
    return Group(cayley, name)


def is_subgroup_mask(group: Group, mask: int) -> bool:
    """True iff mask is nonempty, contains the identity, and is closed."""
    if not mask & 1:
        return False
    t = group.cayley
    members = list(iter_bits(mask))
    return all(mask >> t[a][b] & 1 for a in members for b in members)


def is_normal_mask(group: Group, mask: int) -> bool:
    return all(
        group.conjugate_set(mask, g) == mask for g in range(group.order)
    )


# ---------------------------------------------------------------------------
# Permutations


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_permutation(text: str, degree: int) -> tuple[int, ...]:
    """Parse disjoint cycle notation like ``(1 2 3)(4 5)`` on 1-based points."""
    leftover = _CYCLE_RE.sub("", text).strip()
    if leftover:
        raise MalformedCycle(f"unexpected text {leftover!r} in {text!r}")
    image = list(range(degree))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        tokens = body.replace(",", " ").split()
        if not tokens:
            continue
        try:
            points = [int(tok) for tok in tokens]
        except ValueError:
            raise MalformedCycle(f"non-integer point in cycle ({body})") from None
        for p in points:
            if not 1 <= p <= degree:
                raise MalformedCycle(
                    f"point {p} out of range 1..{degree} in {text!r}"
                )
            if p - 1 in seen:
                raise MalformedCycle(f"point {p} repeated in {text!r}")
            seen.add(p - 1)
        for i, p in enumerate(points):
            image[p - 1] = points[(i + 1) % len(points)] - 1
    return tuple(image)


def from_permutation_generators(
    degree: int,
    generators: Sequence[str | Sequence[int]],
    name: str | None = None,
) -> Group:
    """Close a generating set of permutations into a Group.

    Products compose left to right: (p * q)(x) = q(p(x)).  Elements are
    ordered lexicographically by image tuple, which puts the identity
    first automatically.
    """
    if degree < 1:
        raise InvalidParameters("permutation degree must be at least 1")
    gens: list[tuple[int, ...]] = []
    for g in generators:
        if isinstance(g, str):
            gens.append(_parse_permutation(g, degree))
        else:
            perm = tuple(int(v) for v in g)
            if sorted(perm) != list(range(degree)):
                raise MalformedCycle(f"{g!r} is not a permutation of 0..{degree - 1}")
            gens.append(perm)

    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    if len(seen) >= ORDER_BOUND:
                        raise OrderBoundExceeded(ORDER_BOUND)
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt

    perms = sorted(seen)
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(q[x] for x in p)] for q in perms]
        for p in perms
    ]
    return Group(table, name, _trusted=True)


# ---------------------------------------------------------------------------
# Preset families


def cyclic(n: int, name: str | None = None) -> Group:
    if n < 1:
        raise InvalidParameters("cyclic group order must be at least 1")
    if n > ORDER_BOUND:
        raise OrderBoundExceeded(ORDER_BOUND)
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return Group(table, name or f"C{n}", _trusted=True)


def dihedral(n: int, name: str | None = None) -> Group:
    """Dihedral group with n rotations (order 2n); element f*n + i is s^f r^i."""
    if n < 1:
        raise InvalidParameters("dihedral parameter must be at least 1")
    if 2 * n > ORDER_BOUND:
        raise OrderBoundExceeded(ORDER_BOUND)
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for f1 in (0, 1):
        for i1 in range(n):
            for f2 in (0, 1):
                for i2 in range(n):
                    i = (i2 + i1) % n if f2 == 0 else (i2 - i1) % n
                    table[f1 * n + i1][f2 * n + i2] = (f1 ^ f2) * n + i
    return Group(table, name or f"D{2 * n}", _trusted=True)


def generalized_quaternion(k: int, name: str | None = None) -> Group:
    """Generalized quaternion group of order 2^k, k >= 3.

    Element j*m + i is x^i y^j with m = 2^(k-1), y^2 = x^(m/2),
    y^-1 x y = x^-1.
    """
    if k < 3:
        raise InvalidParameters("generalized quaternion needs order at least 8")
    if 2**k > ORDER_BOUND:
        raise OrderBoundExceeded(ORDER_BOUND)
    m = 2 ** (k - 1)
    h = m // 2
    table = [[0] * (2 * m) for _ in range(2 * m)]
    for j1 in (0, 1):
        for i1 in range(m):
            for j2 in (0, 1):
                for i2 in range(m):
                    if j1 == 0:
                        j, i = j2, (i1 + i2) % m
                    elif j2 == 0:
                        j, i = 1, (i1 - i2) % m
                    else:
                        j, i = 0, (i1 - i2 + h) % m
                    table[j1 * m + i1][j2 * m + i2] = j * m + i
    return Group(table, name or f"Q{2 * m}", _trusted=True)


def symmetric(n: int, name: str | None = None) -> Group:
    if n < 1:
        raise InvalidParameters("symmetric degree must be at least 1")
    gens = [] if n == 1 else ["(1 2)", "(" + " ".join(map(str, range(1, n + 1))) + ")"]
    return from_permutation_generators(max(n, 1), gens, name or f"S{n}")


def alternating(n: int, name: str | None = None) -> Group:
    if n < 1:
        raise InvalidParameters("alternating degree must be at least 1")
    label = name or f"A{n}"
    if n <= 2:
        return from_permutation_generators(max(n, 1), [], label)
    if n == 3:
        gens = ["(1 2 3)"]
    elif n % 2 == 1:
        gens = ["(1 2 3)", "(" + " ".join(map(str, range(1, n + 1))) + ")"]
    else:
        gens = ["(1 2 3)", "(" + " ".join(map(str, range(2, n + 1))) + ")"]
    return from_permutation_generators(n, gens, label)


def direct_product(a: Group, b: Group, name: str | None = None) -> Group:
    """Componentwise product; element (x, y) gets index x * |b| + y."""
    n1, n2 = a.order, b.order
    if n1 * n2 > ORDER_BOUND:
        raise OrderBoundExceeded(ORDER_BOUND)
    t1 = np.array(a.cayley, dtype=np.int64)
    t2 = np.array(b.cayley, dtype=np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(
        n1 * n2, n1 * n2
    )
    return Group(table, name or f"{a.name} x {b.name}", _trusted=True)


def semidirect_cp_cn(p: int, n: int, l: int, name: str | None = None) -> Group:
    """The group <x, a | x^p, a^n, a^-1 x a = x^l> of order p*n.

    Requires p prime, 1 <= l < p, and l^n = 1 mod p so the action is
    well defined.  Element j*p + i is a^j x^i.
    """
    if not is_prime(p):
        raise InvalidParameters(f"p = {p} must be prime")
    if n < 1:
        raise InvalidParameters("n must be at least 1")
    if not 1 <= l < p:
        raise InvalidParameters(f"twist l = {l} must lie in 1..{p - 1}")
    if pow(l, n, p) != 1:
        raise InvalidParameters(f"l^n = {l}^{n} is not 1 mod {p}")
    if p * n > ORDER_BOUND:
        raise OrderBoundExceeded(ORDER_BOUND)
    lpow = [pow(l, j, p) for j in range(n)]
    table = [[0] * (p * n) for _ in range(p * n)]
    for j1 in range(n):
        for i1 in range(p):
            row = table[j1 * p + i1]
            for j2 in range(n):
                shift = i1 * lpow[j2]
                for i2 in range(p):
                    row[j2 * p + i2] = ((j1 + j2) % n) * p + (shift + i2) % p
    return Group(table, name or f"C{p}:C{n}[{l}]", _trusted=True)


# ---------------------------------------------------------------------------
# Quotients


@dataclass(frozen=True)
class Homomorphism:
    """A map between groups recorded as an image tuple on element indices."""

    source: Group
    target: Group
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image_mask(self) -> int:
        return mask_of(self.mapping)


def quotient(group: Group, normal_mask: int) -> tuple[Group, Homomorphism]:
    """Quotient by a normal subgroup, plus the projection map.

    Coset indices follow the smallest element in each coset, so the
    result is canonical for a given (group, subgroup) pair.
    """
    if not is_subgroup_mask(group, normal_mask):
        raise NotSubgroup("quotient requires a subgroup")
    if not is_normal_mask(group, normal_mask):
        raise NotNormal("quotient requires a normal subgroup")
    n = group.order
    members = list(iter_bits(normal_mask))
    coset_of = [-1] * n
    reps: list[int] = []
    for a in range(n):
        if coset_of[a] == -1:
            k = len(reps)
            reps.append(a)
            for x in members:
                coset_of[group.cayley[a][x]] = k
    m = len(reps)
    table = [
        [coset_of[group.cayley[reps[i]][reps[j]]] for j in range(m)]
        for i in range(m)
    ]
    q = Group(table, f"{group.name}/N{len(members)}", _trusted=True)
    return q, Homomorphism(group, q, tuple(coset_of))
