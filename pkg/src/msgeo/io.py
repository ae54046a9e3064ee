"""JSON readers and writers for spaces, point clouds, graphs and correspondences."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from . import errors
from .combinatorics import BipartiteGraph, SimpleGraph
from .gromov_hausdorff import Correspondence
from .metric_core import FiniteMetricSpace, from_matrix, from_points

SIGNIFICANT_DIGITS = 12


def load_json(path: str | Path) -> Any:
    path = Path(path)
    if not path.is_file():
        raise errors.FileNotFound(f"no such file: {path}", path=str(path))
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise errors.ParseError(f"{path}: {exc}", path=str(path)) from None


def _need(doc: Any, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(doc, dict) or any(k not in doc for k in keys):
        raise errors.ParseError(f"{what} needs keys {list(keys)}")


def space_from_json(doc: Any, tolerance: float | None = None) -> FiniteMetricSpace:
    """Either {"labels", "matrix"} or a point cloud {"metric", "points"}."""
    if isinstance(doc, dict) and "points" in doc:
        try:
            return from_points(doc["points"], doc.get("metric", "euclidean"),
                               doc.get("labels"), tolerance)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, errors.MetricGeometryError):
                raise
            raise errors.ParseError(f"bad point cloud: {exc}") from None
    _need(doc, ("matrix",), "space file")
    try:
        return from_matrix(doc["matrix"], doc.get("labels"), tolerance)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, errors.MetricGeometryError):
            raise
        raise errors.ParseError(f"bad matrix: {exc}") from None


def load_space(path: str | Path, tolerance: float | None = None) -> FiniteMetricSpace:
    return space_from_json(load_json(path), tolerance)


def _int_pairs(doc: dict, what: str) -> list[tuple[int, int]]:
    try:
        return [(int(a), int(b)) for a, b in doc["edges" if "edges" in doc else "pairs"]]
    except (TypeError, ValueError):
        raise errors.ParseError(f"{what}: pairs must be [int, int]") from None


def load_graph(path: str | Path) -> SimpleGraph:
    doc = load_json(path)
    _need(doc, ("n", "edges"), "graph file")
    return SimpleGraph(int(doc["n"]), _int_pairs(doc, "graph file"))


def load_bipartite(path: str | Path) -> BipartiteGraph:
    doc = load_json(path)
    _need(doc, ("p", "q", "edges"), "bipartite file")
    return BipartiteGraph(int(doc["p"]), int(doc["q"]), _int_pairs(doc, "bipartite file"))


def load_correspondence(path: str | Path, left_size: int, right_size: int) -> Correspondence:
    doc = load_json(path)
    _need(doc, ("pairs",), "correspondence file")
    return Correspondence(left_size, right_size, _int_pairs(doc, "correspondence file"))


def round_floats(obj: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """Round every float to ``digits`` significant digits; integral values stay floats."""
    if isinstance(obj, np.ndarray):
        return round_floats(obj.tolist(), digits)
    if isinstance(obj, np.generic):
        return round_floats(obj.item(), digits)
    if isinstance(obj, float):
        if math.isnan(obj):
            return None
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return float(f"{obj:.{digits}g}") + 0.0
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, digits) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(round_floats(obj), sort_keys=True, ensure_ascii=False)
