"""Exception hierarchy for the groupcovers package.

Every error raised deliberately by this package derives from
:class:`GroupCoversError`, so callers can catch one type at an API
boundary.  Validation errors carry enough detail (a witness triple, a
row index, a line number) to debug the offending input without
re-running the check by hand.
"""

from __future__ import annotations


class GroupCoversError(Exception):
    """Base class for all errors raised by groupcovers."""


# ---------------------------------------------------------------------------
# Group construction and validation


class GroupValidationError(GroupCoversError):
    """A candidate multiplication table failed one of the group axioms."""


class NoIdentityAtZero(GroupValidationError):
    """Index 0 does not act as a two-sided identity."""


class NotLatinSquare(GroupValidationError):
    """Some row or column of the table is not a permutation of the elements."""

    def __init__(self, axis: str, index: int) -> None:
        self.axis = axis
        self.index = index
        super().__init__(f"{axis} {index} of the table is not a permutation")


class MissingInverse(GroupValidationError):
    """An element has no two-sided inverse."""

    def __init__(self, element: int) -> None:
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(GroupValidationError):
    """Associativity fails; carries one witness triple."""

    def __init__(self, a: int, b: int, c: int) -> None:
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")


class MalformedCycle(GroupCoversError):
    """A permutation given in cycle notation could not be parsed."""


class InvalidParameters(GroupCoversError):
    """Arguments to a group constructor are out of range or inconsistent."""


class OrderBoundExceeded(GroupCoversError):
    """Closing a generating set passed the hard order limit."""

    def __init__(self, bound: int) -> None:
        self.bound = bound
        super().__init__(f"generated group exceeds the order bound {bound}")


# ---------------------------------------------------------------------------
# Subgroup-level preconditions


class NotSubgroup(GroupCoversError):
    """A provided element set is not closed under the group operation."""


class NotNormal(GroupCoversError):
    """A subgroup required to be normal is not."""


class NotProperSubgroup(GroupCoversError):
    """A cover member must be a proper subgroup; this one is the whole group."""


class PrimeDoesNotDivideOrder(GroupCoversError):
    """Asked for a Sylow p-subgroup with p not dividing the group order."""


# ---------------------------------------------------------------------------
# Cover computations


class GroupIsCyclic(GroupCoversError):
    """Cover-theoretic quantities are undefined for cyclic groups."""


class NotSolvable(GroupCoversError):
    """The chief-factor formula for the covering number needs solvability."""


class NoFactorWithMultipleComplements(GroupCoversError):
    """No chief factor has two or more complements, so the formula yields nothing."""


class EnumerationBoundExceeded(GroupCoversError):
    """Exhaustive cover enumeration refused: the group is above the size cap."""

    def __init__(self, order: int, bound: int) -> None:
        self.order = order
        self.bound = bound
        super().__init__(
            f"cover enumeration caps at order {bound}; group has order {order}"
        )


class PreconditionViolation(GroupCoversError):
    """A named hypothesis of a construction fails for the given input."""


class InvariantViolation(GroupCoversError):
    """Two routes to the same value disagreed; indicates an internal bug."""


# ---------------------------------------------------------------------------
# Catalog files


class CatalogError(GroupCoversError):
    """Base class for errors in group catalog files."""


class ParseError(CatalogError):
    """Syntax error in a catalog file; carries the 1-based line number."""

    def __init__(self, message: str, line: int) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateName(CatalogError):
    """Two catalog entries share a name."""


class OrderMismatch(CatalogError):
    """A built group's order disagrees with the catalog's declared order."""

    def __init__(self, name: str, expected: int, actual: int) -> None:
        self.name = name
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"group {name!r}: declared order {expected}, built order {actual}"
        )
