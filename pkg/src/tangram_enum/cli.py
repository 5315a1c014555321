"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 internal or data-integrity error. Relative output paths are resolved
against $TANGRAM_ENUM_OUT_DIR when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import canon, catalog, strips
from .catalog import CensusError, NumberingError, ShapeEntry
from .documents import DocumentError, build_document
from .render import RenderStyle, render_shape_catalog, render_sheet_svg, render_solution_svg
from .solver import MODES, AreaMismatch, enumerate_partitions

EXPECTED_COUNTS = (34, 38, 43, 61, 19, 72, 3, 21, 23, 21, 16, 4, 32, 24, 60, 60)
OUT_DIR_ENV = "TANGRAM_ENUM_OUT_DIR"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def out_path(p: str | Path) -> Path:
    p = Path(p)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def resolve_shape(ref: str) -> ShapeEntry:
    if ref.isdigit():
        n = int(ref)
        if not 1 <= n <= 16:
            raise UsageError(f"shape number must be 1..16, got {n}")
        return catalog.shape_by_number(n)
    try:
        return catalog.shape_by_key(ref)
    except KeyError:
        raise UsageError(f"unknown shape {ref!r}: give 1..16 or a census region key") from None


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# Commands

def cmd_solve(args) -> int:
    entry = resolve_shape(args.shape)
    doc = build_document(entry, args.set, args.mode)
    if args.out:
        _write(out_path(args.out), doc.dumps())
    if args.svg:
        region = entry.region
        if doc.solutions:
            _write(out_path(args.svg),
                   render_sheet_svg(doc.solutions, region, args.columns,
                                    RenderStyle(colored=args.mode == "colored")))
    print(f"{entry.label} {args.set} {args.mode}: {doc.counts[args.mode]}")
    return EXIT_OK


def cmd_count(args) -> int:
    entry = resolve_shape(args.shape)
    doc = build_document(entry, args.set, args.mode)
    print(doc.counts[args.mode])
    return EXIT_OK


def _shape_count(n: int) -> dict:
    entry = catalog.shape_by_number(n)
    sols = enumerate_partitions(entry.region, catalog.tan_set("japanese"))
    actual = len(canon.dedupe(sols, entry.region))
    expected = EXPECTED_COUNTS[n - 1]
    return {"shape": n, "key": entry.key, "expected": expected, "actual": actual,
            "ok": actual == expected}


def census_report() -> dict:
    entries = catalog.enumerate_convex_shapes()
    rows = []
    for e in entries:
        rows.append({
            "key": e.key,
            "number": e.number,
            "descriptor": list(e.descriptor),
            "symmetries": len(e.region.symmetries),
            "japanese": catalog.classify_coverability(e, "japanese"),
            "chinese": catalog.classify_coverability(e, "chinese"),
        })
    nj = sum(r["japanese"] for r in rows)
    nc = sum(r["chinese"] for r in rows)
    numbered_ok = all(r["japanese"] == (r["number"] is not None) for r in rows)
    strips_ok = all(not r["chinese"] for r in rows if r["number"] in (14, 15, 16))
    return {
        "shapes": len(rows),
        "japanese_coverable": nj,
        "chinese_coverable": nc,
        "numbered_shapes_are_the_japanese_coverable_ones": numbered_ok,
        "passed": len(rows) == 20 and nj == 16 and nc == 13 and numbered_ok and strips_ok,
        "entries": rows,
    }


def verify_report(jobs: int = 1) -> dict:
    catalog.load_numbering()  # refuse to run on a broken numbering file
    numbers = range(1, 17)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_shape_count, numbers))
    else:
        rows = [_shape_count(n) for n in numbers]
    rows.sort(key=lambda r: r["shape"])
    total = sum(r["actual"] for r in rows)
    counts = {
        "shapes": rows,
        "matches": sum(r["ok"] for r in rows),
        "total_expected": sum(EXPECTED_COUNTS),
        "total_actual": total,
        "passed": all(r["ok"] for r in rows),
    }
    strip = strips.verify_strip_theorem().to_dict()
    census = census_report()
    return {
        "counts": counts,
        "strips": strip,
        "census": census,
        "passed": counts["passed"] and strip["passed"] and census["passed"],
    }


def cmd_verify(args) -> int:
    report = verify_report(args.jobs)
    text = json.dumps(report, indent=1) + "\n"
    if args.json:
        _write(out_path(args.json), text)
    sys.stdout.write(text)
    if not report["passed"]:
        for r in report["counts"]["shapes"]:
            if not r["ok"]:
                print(f"mismatch: shape {r['shape']} expected {r['expected']} actual {r['actual']}",
                      file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_census(args) -> int:
    report = census_report()
    if args.svg:
        cov = {r["key"]: {"japanese": r["japanese"], "chinese": r["chinese"]}
               for r in report["entries"]}
        _write(out_path(args.svg), render_shape_catalog(catalog.enumerate_convex_shapes(), cov))
    if args.json:
        print(json.dumps(report, indent=1))
    else:
        for r in report["entries"]:
            num = f"J{r['number']:02d}" if r["number"] else "---"
            print(f"{num}  {r['key']:<30} J={int(r['japanese'])} C={int(r['chinese'])}")
        print(f"{report['shapes']} shapes, {report['japanese_coverable']} japanese-coverable, "
              f"{report['chinese_coverable']} chinese-coverable")
    return EXIT_OK if report["passed"] else EXIT_MISMATCH


def cmd_render(args) -> int:
    entry = resolve_shape(args.shape)
    doc = build_document(entry, args.set, args.mode)
    style = RenderStyle(colored=args.mode == "colored", grid=args.grid)
    label = f"J{entry.number:02d}" if entry.number else "shape"
    out_dir = Path(args.out_dir)
    written = []
    if not doc.solutions:
        print(f"{entry.label}: no partitions with the {args.set} set, nothing rendered")
        return EXIT_OK
    if args.sheet:
        p = out_path(out_dir / f"{label}_sheet.svg")
        _write(p, render_sheet_svg(doc.solutions, entry.region, args.columns, style))
        written.append(p)
    else:
        for i, sol in enumerate(doc.solutions, 1):
            p = out_path(out_dir / f"{label}_{args.mode}_{i}.svg")
            _write(p, render_solution_svg(sol, entry.region, style))
            written.append(p)
    for p in written:
        print(p)
    return EXIT_OK


def cmd_strips(args) -> int:
    rep = strips.verify_strip_theorem()
    if args.json:
        print(json.dumps(rep.to_dict(), indent=1))
    else:
        print(rep.to_text())
    if args.verify and not rep.passed:
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tangram-enum",
                                 description="Enumerate tangram partitions of convex shapes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def shape_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("shape", help="shape number 1..16 or census region key")
        p.add_argument("--set", choices=("japanese", "chinese"), default="japanese")
        p.add_argument("--mode", choices=MODES, default="canonical")
        return p

    p = shape_cmd("solve", "enumerate partitions of one shape")
    p.add_argument("--out", help="write the JSON solution document here")
    p.add_argument("--svg", help="also write an SVG sheet here")
    p.add_argument("--columns", type=int, default=4)
    p.set_defaults(func=cmd_solve)

    p = shape_cmd("count", "print the number of partitions of one shape")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check all 16 shapes, the strip theorem and the census")
    p.add_argument("--json", help="also write the report to this file")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the shape counts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="list the 20 convex shapes and their coverability")
    p.add_argument("--svg", nargs="?", const="census.svg", help="write the audit sheet")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = shape_cmd("render", "draw partitions of one shape as SVG")
    p.add_argument("--sheet", action="store_true", help="one sheet instead of one file per partition")
    p.add_argument("--columns", type=int, default=4)
    p.add_argument("--grid", action="store_true")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("strips", help="twin and cut-and-paste analysis of the strips")
    p.add_argument("--verify", action="store_true", help="exit 1 unless the analysis checks out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_strips)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AreaMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (NumberingError, CensusError, DocumentError, strips.StripError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
