"""Enumerate the essentially different tangram partitions of convex shapes."""

from .canon import CanonicalSolution, Placement, Solution, canonicalize, colored_count, dedupe
from .catalog import (
    TANS,
    ShapeEntry,
    Tan,
    TanSet,
    classify_coverability,
    enumerate_convex_shapes,
    shape_by_number,
    tan_set,
)
from .solver import count_partitions, enumerate_partitions, exists_partition
from .trigrid import Region, Transform, TriCell, cell

__all__ = [
    "CanonicalSolution", "Placement", "Region", "ShapeEntry", "Solution", "Tan", "TanSet",
    "TANS", "Transform", "TriCell", "canonicalize", "cell", "classify_coverability",
    "colored_count", "count_partitions", "dedupe", "enumerate_convex_shapes",
    "enumerate_partitions", "exists_partition", "shape_by_number", "tan_set",
]
