"""JSON solution documents.

A document lists the partitions of one census shape::

    {
      "schema": "tangram-enum/solutions",
      "version": 1,
      "shape": {"number": 7, "key": "4x4:..."},
      "tan_set": "japanese",
      "mode": "canonical",
      "counts": {"labeled": 24, "canonical": 3, "colored": 6},
      "solutions": [
        {"key": "...", "placements": [
          {"tan": "Ts", "instance": 1, "cells": [[x, y, "N"], ...]}, ...]}
      ]
    }

Cells are given in the census coordinates of the shape, sorted by (y, x,
quadrant). ``key`` is the solution key from :mod:`canon` (the colored key in
colored mode). Loading validates every solution as an exact cover, and
dumping a loaded document reproduces the input bytes.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from . import canon
from .canon import Placement, Solution
from .catalog import ShapeEntry, shape_by_key, tan_set
from .solver import MODES, enumerate_partitions
from .trigrid import Quadrant, TriCell

SCHEMA = "tangram-enum/solutions"
VERSION = 1


class DocumentError(ValueError):
    pass


@dataclass
class SolutionDocument:
    shape_number: int | None
    shape_key: str
    tan_set: str
    mode: str
    counts: dict[str, int]
    keys: list[str]
    solutions: list[Solution]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "version": VERSION,
            "shape": {"number": self.shape_number, "key": self.shape_key},
            "tan_set": self.tan_set,
            "mode": self.mode,
            "counts": {m: self.counts[m] for m in MODES if m in self.counts},
            "solutions": [
                {"key": k, "placements": [_placement_dict(p) for p in s.placements]}
                for k, s in zip(self.keys, self.solutions)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"


def _placement_dict(p: Placement) -> dict:
    cells = sorted(p.cells, key=lambda c: (c.y, c.x, c.q))
    return {"tan": p.name, "instance": p.instance,
            "cells": [[c.x, c.y, c.q.name] for c in cells]}


def build_document(entry: ShapeEntry, kind: str, mode: str = "canonical") -> SolutionDocument:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    region = entry.region
    labeled = enumerate_partitions(region, tan_set(kind))
    canonicals = canon.dedupe(labeled, region)
    colored = colored_solutions(canonicals, region)
    counts = {"labeled": len(labeled), "canonical": len(canonicals), "colored": len(colored)}
    if mode == "labeled":
        keys = [canon.serialize(s, region.bounds, colored=True) for s in labeled]
        sols = labeled
    elif mode == "canonical":
        keys = [c.key for c in canonicals]
        sols = [c.representative for c in canonicals]
    else:
        keys = sorted(colored)
        sols = [colored[k] for k in keys]
    return SolutionDocument(entry.number, entry.key, kind, mode, counts, keys, sols)


def colored_solutions(canonicals, region) -> dict[str, Solution]:
    """Distinct colored partitions, keyed by colored solution key."""
    out: dict[str, Solution] = {}
    for c in canonicals:
        variants = [c.representative]
        for name, k in sorted(c.representative.names().items()):
            if k == 2:
                variants += [v.swapped(name) for v in variants]
        for v in variants:
            out.setdefault(canon.solution_key(v, region, colored=True), v)
    return out


def _parse_solution(raw: dict) -> Solution:
    placements = []
    for p in raw["placements"]:
        cells = frozenset(TriCell(int(x), int(y), Quadrant[q]) for x, y, q in p["cells"])
        placements.append(Placement(p["tan"], cells, int(p["instance"])))
    return Solution(tuple(placements))


def loads(text: str) -> SolutionDocument:
    try:
        raw = json.loads(text)
        if raw.get("schema") != SCHEMA or raw.get("version") != VERSION:
            raise DocumentError(f"unsupported document schema {raw.get('schema')!r} v{raw.get('version')}")
        entry = shape_by_key(raw["shape"]["key"])
        tans = tan_set(raw["tan_set"])
        sols = [_parse_solution(s) for s in raw["solutions"]]
        keys = [s["key"] for s in raw["solutions"]]
        doc = SolutionDocument(raw["shape"]["number"], raw["shape"]["key"], raw["tan_set"],
                               raw["mode"], dict(raw["counts"]), keys, sols)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"malformed solution document: {exc}") from None
    for i, s in enumerate(sols):
        try:
            canon.validate(s, entry.region, Counter(tans.multiset()))
        except canon.InvalidSolution as exc:
            raise DocumentError(f"solution {i + 1}: {exc}") from None
    return doc
