"""Command-line interface.

Subcommands operate on a catalog file (bundled corpus when omitted):

    analyze [catalog] [--group NAME]     full per-group reports
    sigma / lambda / classify            single quantities
    covers --enumerate [--cap K]         irredundant-cover statistics
    verify-corpus [catalog]              corpus run, nonzero exit on
                                         any classification disagreement
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from . import covers
from .catalog import build_catalog, bundled_catalog_text, parse_catalog
from .classify import classify
from .covers import DEFAULT_ENUM_BOUND
from .errors import GroupCoversError, GroupIsCyclic, InvalidParameters
from .groups import Group
from .reports import (
    CHECK_IDS,
    DEFAULT_MAX_ORDER,
    AnalyzeOptions,
    outcome_json,
    run_analyze,
    run_verify_corpus,
    serialize_envelope,
    serialize_report,
)


def _add_common(p: argparse.ArgumentParser, *, root: bool) -> None:
    # On subparsers the defaults are suppressed so `tool --json analyze`
    # and `tool analyze --json` both work without the later parse
    # clobbering the earlier value.
    d = (lambda v: v) if root else (lambda v: argparse.SUPPRESS)
    p.add_argument(
        "--json", action="store_true", default=d(False), help="emit JSON output"
    )
    p.add_argument(
        "--max-order",
        type=int,
        metavar="N",
        default=d(DEFAULT_MAX_ORDER),
        help=f"skip groups larger than N (default {DEFAULT_MAX_ORDER})",
    )
    p.add_argument(
        "--enum-bound",
        type=int,
        metavar="N",
        default=d(DEFAULT_ENUM_BOUND),
        help=f"enumerate covers only for groups of order at most N "
        f"(default {DEFAULT_ENUM_BOUND})",
    )
    p.add_argument(
        "--checks",
        metavar="IDS",
        default=d(",".join(CHECK_IDS)),
        help="comma-separated cross-checks to run (default: all)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcovers",
        description="Minimum covers of finite groups by proper subgroups.",
    )
    _add_common(parser, root=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, group_flag: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "catalog", nargs="?", default=None, help="catalog file (default: bundled)"
        )
        if group_flag:
            p.add_argument("--group", metavar="NAME", help="restrict to one group")
        _add_common(p, root=False)
        p.set_defaults(func=handler)
        return p

    command("analyze", _cmd_analyze, "full verification report per group")
    command("sigma", _cmd_sigma, "minimum size of a proper-subgroup cover")
    command("lambda", _cmd_lambda, "number of maximal cyclic subgroups")
    p = command("covers", _cmd_covers, "irredundant cover statistics")
    p.add_argument(
        "--enumerate", action="store_true", help="walk all irredundant covers"
    )
    p.add_argument(
        "--cap", type=int, metavar="K", default=None, help="only covers of size <= K"
    )
    command("classify", _cmd_classify, "structural one-sized classification")
    command("verify-corpus", _cmd_verify, "analyze a whole catalog", group_flag=False)
    return parser


def _options(args: argparse.Namespace) -> AnalyzeOptions:
    checks = tuple(c for c in args.checks.split(",") if c)
    return AnalyzeOptions(
        max_order=args.max_order, enum_bound=args.enum_bound, checks=checks
    )


def _load_entries(path: str | None):
    text = Path(path).read_text(encoding="utf-8") if path else bundled_catalog_text()
    return parse_catalog(text)


def _select(args: argparse.Namespace) -> list[Group]:
    groups = build_catalog(_load_entries(args.catalog))
    if getattr(args, "group", None) is not None:
        if args.group not in groups:
            raise InvalidParameters(f"no group named {args.group!r} in the catalog")
        return [groups[args.group]]
    return list(groups.values())


def _emit(args: argparse.Namespace, rows: list[dict[str, Any]], text: list[str]) -> int:
    if args.json:
        print(json.dumps(rows, sort_keys=True, indent=2))
    else:
        for line in text:
            print(line)
    return 0


def _skip(group: Group, args: argparse.Namespace) -> bool:
    return group.order > args.max_order


_SKIP_NOTE = "skipped (order {} exceeds --max-order {})"


def _cmd_analyze(args: argparse.Namespace) -> int:
    opts = _options(args)
    reports = [run_analyze(g, opts) for g in _select(args)]
    if args.json:
        if len(reports) == 1:
            sys.stdout.write(serialize_report(reports[0]))
        else:
            print(
                json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2)
            )
        return 0
    for r in reports:
        for line in _render_report(r):
            print(line)
    return 0


def _family_text(fam: dict[str, Any] | None) -> str:
    if fam is None:
        return "none"
    if fam["p"] is None:
        return fam["kind"]
    return f"{fam['kind']}(p={fam['p']},n={fam['n']})"


def _render_report(r) -> list[str]:
    lines = [f"{r.group_name}: order={r.order} cyclic={_yn(r.is_cyclic)}"]
    if r.is_cyclic:
        lines.append(f"  sigma={r.sigma_exact} (no cover by proper subgroups)")
    elif r.is_cyclic is False:
        lines.append(
            f"  solvable={_yn(r.is_solvable)} nilpotent={_yn(r.is_nilpotent)}"
            f" supersolvable={_yn(r.is_supersolvable)}"
        )
        sizes = "-" if r.irredundant_sizes is None else list(r.irredundant_sizes)
        lines.append(
            f"  lambda={r.lambda_value} sigma={r.sigma_exact}"
            f" tomkinson={r.sigma_tomkinson} sizes={sizes}"
        )
        out = r.classify_outcome
        if out is not None:
            lines.append(
                f"  oneSized={_yn(out['oneSized'])} family={_family_text(out['family'])}"
                f" bruteforce={_yn(r.one_sized_bruteforce)}"
                f" agreement={_yn(r.agreement)}"
            )
        if r.lemma_checks:
            checks = " ".join(f"{c['id']}={c['status']}" for c in r.lemma_checks)
            lines.append(f"  checks: {checks}")
    for err in r.errors:
        lines.append(f"  ! {err}")
    return lines


def _yn(v: bool | None) -> str:
    return "-" if v is None else ("yes" if v else "no")


def _sigma_json_value(group: Group) -> int | str:
    value = covers.sigma_exact(group)
    return "Infinite" if value.is_infinite else value.value


def _cmd_sigma(args: argparse.Namespace) -> int:
    rows, text = [], []
    for g in _select(args):
        if _skip(g, args):
            rows.append({"groupName": g.name, "order": g.order, "skipped": True})
            text.append(f"{g.name}: " + _SKIP_NOTE.format(g.order, args.max_order))
            continue
        s = _sigma_json_value(g)
        rows.append({"groupName": g.name, "order": g.order, "sigma": s})
        text.append(f"{g.name}: sigma={s}")
    return _emit(args, rows, text)


def _cmd_lambda(args: argparse.Namespace) -> int:
    rows, text = [], []
    for g in _select(args):
        if _skip(g, args):
            rows.append({"groupName": g.name, "order": g.order, "skipped": True})
            text.append(f"{g.name}: " + _SKIP_NOTE.format(g.order, args.max_order))
            continue
        if g.is_cyclic:
            rows.append({"groupName": g.name, "order": g.order, "lambda": None})
            text.append(f"{g.name}: cyclic, no cover by proper subgroups")
        else:
            lam = covers.lambda_(g)
            rows.append({"groupName": g.name, "order": g.order, "lambda": lam})
            text.append(f"{g.name}: lambda={lam}")
    return _emit(args, rows, text)


def _cmd_covers(args: argparse.Namespace) -> int:
    rows, text = [], []
    for g in _select(args):
        if _skip(g, args):
            rows.append({"groupName": g.name, "order": g.order, "skipped": True})
            text.append(f"{g.name}: " + _SKIP_NOTE.format(g.order, args.max_order))
            continue
        row: dict[str, Any] = {"groupName": g.name, "order": g.order}
        if g.is_cyclic:
            row["lambda"] = None
            rows.append(row)
            text.append(f"{g.name}: cyclic, no cover by proper subgroups")
            continue
        family = covers.maximal_cyclic_family(g)
        orders = [m.order for m in family.members]
        row["lambda"] = len(family)
        row["memberOrders"] = orders
        line = f"{g.name}: lambda={len(family)} maximal cyclic orders={orders}"
        if args.enumerate:
            stats = covers.cover_enumeration_stats(
                g, args.cap, enum_bound=args.enum_bound
            )
            row["enumeration"] = {
                "coverCount": stats.cover_count,
                "sizeCounts": [list(p) for p in stats.size_counts],
                "multiTraceSizes": list(stats.multi_trace_sizes),
            }
            pairs = " ".join(f"{s}:{c}" for s, c in stats.size_counts)
            cap_note = "" if args.cap is None else f" (cap {args.cap})"
            line += f"\n  covers={stats.cover_count}{cap_note} by size: {pairs}"
        rows.append(row)
        text.append(line)
    return _emit(args, rows, text)


def _cmd_classify(args: argparse.Namespace) -> int:
    rows, text = [], []
    for g in _select(args):
        if _skip(g, args):
            rows.append({"groupName": g.name, "order": g.order, "skipped": True})
            text.append(f"{g.name}: " + _SKIP_NOTE.format(g.order, args.max_order))
            continue
        row: dict[str, Any] = {"groupName": g.name, "order": g.order}
        try:
            out = outcome_json(classify(g))
        except GroupIsCyclic:
            row["classifyOutcome"] = None
            rows.append(row)
            text.append(f"{g.name}: cyclic, not applicable")
            continue
        row["classifyOutcome"] = out
        text.append(
            f"{g.name}: oneSized={_yn(out['oneSized'])}"
            f" family={_family_text(out['family'])}"
        )
        rows.append(row)
    return _emit(args, rows, text)


def _cmd_verify(args: argparse.Namespace) -> int:
    envelope = run_verify_corpus(_load_entries(args.catalog), _options(args))
    summary = envelope["summary"]
    if args.json:
        sys.stdout.write(serialize_envelope(envelope))
    else:
        for r in envelope["reports"]:
            status = "agree" if r["agreement"] else (
                "cyclic" if r["isCyclic"] else
                "DISAGREE" if r["agreement"] is False else "-"
            )
            extra = f" ! {'; '.join(r['errors'])}" if r["errors"] else ""
            print(
                f"{r['groupName']}: order={r['order']}"
                f" sigma={r['sigmaExact']} {status}{extra}"
            )
        print(
            "summary: groups={groups} nonCyclic={nonCyclic}"
            " agreements={agreements} disagreements={disagreements}"
            " errors={errors}".format(**summary)
        )
    return 1 if summary["disagreements"] else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupCoversError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
