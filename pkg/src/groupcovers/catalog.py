"""Catalog files: a line-based text format for naming a corpus of groups.

Records are separated by blank lines.  A record is:

    group <name>
    perm <degree>; <cycles>; <cycles>; ...     (or)
    preset <kind> <args...>
    order <m>                                  (optional assertion)

Preset kinds: cyclic n | dihedral n | quaternion k | sym n | alt n |
product <name> <name> | cpcn p n l.  Products refer to earlier entries
by name.  '#' starts a comment anywhere on a line.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import DuplicateName, OrderMismatch, ParseError
from .groups import (
    Group,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_permutation_generators,
    generalized_quaternion,
    semidirect_cp_cn,
    symmetric,
)


@dataclass(frozen=True)
class PermSource:
    degree: int
    generators: tuple[str, ...]


@dataclass(frozen=True)
class PresetSource:
    kind: str
    args: tuple[str, ...]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    source: PermSource | PresetSource
    expected_order: int | None
    line: int  # 1-based line of the `group` header, for diagnostics


_PRESET_ARITY = {
    "cyclic": 1,
    "dihedral": 1,
    "quaternion": 1,
    "sym": 1,
    "alt": 1,
    "product": 2,
    "cpcn": 3,
}


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


def _parse_record(lines: list[tuple[int, str]]) -> CatalogEntry:
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "group":
        raise ParseError(f"expected 'group <name>', got {header!r}", lineno)
    name = parts[1]
    if len(lines) < 2:
        raise ParseError(f"group {name!r} has no construction line", lineno)

    src_lineno, src_line = lines[1]
    source: PermSource | PresetSource
    if src_line.startswith("perm"):
        chunks = [c.strip() for c in src_line.split(";")]
        head = chunks[0].split()
        if len(head) != 2 or head[0] != "perm":
            raise ParseError("expected 'perm <degree>; ...'", src_lineno)
        degree = _parse_int(head[1], "degree", src_lineno)
        if degree < 1:
            raise ParseError("degree must be positive", src_lineno)
        gens = tuple(c for c in chunks[1:] if c)
        source = PermSource(degree, gens)
    elif src_line.startswith("preset"):
        tokens = src_line.split()
        if len(tokens) < 2:
            raise ParseError("expected 'preset <kind> <args>'", src_lineno)
        kind = tokens[1]
        arity = _PRESET_ARITY.get(kind)
        if arity is None:
            raise ParseError(f"unknown preset kind {kind!r}", src_lineno)
        args = tuple(tokens[2:])
        if len(args) != arity:
            raise ParseError(
                f"preset {kind} takes {arity} argument(s), got {len(args)}",
                src_lineno,
            )
        source = PresetSource(kind, args)
    else:
        raise ParseError(
            f"expected 'perm' or 'preset' line, got {src_line!r}", src_lineno
        )

    expected_order: int | None = None
    for extra_lineno, extra in lines[2:]:
        tokens = extra.split()
        if tokens[0] == "order" and len(tokens) == 2:
            if expected_order is not None:
                raise ParseError("duplicate order line", extra_lineno)
            expected_order = _parse_int(tokens[1], "order", extra_lineno)
            if expected_order < 1:
                raise ParseError("order must be positive", extra_lineno)
        else:
            raise ParseError(f"unexpected line {extra!r}", extra_lineno)
    return CatalogEntry(name, source, expected_order, lineno)


def parse_catalog(text: str) -> tuple[CatalogEntry, ...]:
    """Parse catalog text into entries, in file order."""
    record: list[tuple[int, str]] = []
    entries: list[CatalogEntry] = []
    seen: set[str] = set()

    def flush() -> None:
        if not record:
            return
        entry = _parse_record(record)
        if entry.name in seen:
            raise DuplicateName(f"group {entry.name!r} defined twice")
        seen.add(entry.name)
        entries.append(entry)
        record.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush()
            continue
        record.append((lineno, line))
    flush()
    return tuple(entries)


def build_entry(entry: CatalogEntry, built: dict[str, Group]) -> Group:
    """Construct the group for one entry; products resolve against built."""
    src = entry.source
    if isinstance(src, PermSource):
        group = from_permutation_generators(src.degree, src.generators, entry.name)
    else:
        kind, args = src.kind, src.args
        if kind == "product":
            missing = [a for a in args if a not in built]
            if missing:
                raise ParseError(
                    f"product refers to unknown group {missing[0]!r}", entry.line
                )
            group = direct_product(built[args[0]], built[args[1]], entry.name)
        else:
            nums = [_parse_int(a, "preset argument", entry.line) for a in args]
            maker = {
                "cyclic": cyclic,
                "dihedral": dihedral,
                "quaternion": generalized_quaternion,
                "sym": symmetric,
                "alt": alternating,
                "cpcn": semidirect_cp_cn,
            }[kind]
            group = maker(*nums, name=entry.name)
    if entry.expected_order is not None and group.order != entry.expected_order:
        raise OrderMismatch(entry.name, entry.expected_order, group.order)
    return group


def build_catalog(entries: tuple[CatalogEntry, ...]) -> dict[str, Group]:
    """Build every entry, in order, returning name -> Group."""
    built: dict[str, Group] = {}
    for entry in entries:
        built[entry.name] = build_entry(entry, built)
    return built


def bundled_catalog_text() -> str:
    return (
        resources.files("groupcovers")
        .joinpath("data/small_groups.cat")
        .read_text(encoding="utf-8")
    )
