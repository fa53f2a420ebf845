"""Facet-list and vertex-map file parsing.

Two complex formats are accepted:

* JSON: {"vertices": <int>, "facets": [[<label>...], ...]}
* text: one facet per line, whitespace-separated labels, optional first
  line "k=<int>"; blank lines and "#" comments ignored.

Labels may be arbitrary non-negative integers (inputs mix 0- and 1-based
conventions); they are normalized to contiguous 0-based indices in ascending
label order, and the label list is returned for reporting.  A declared vertex
count larger than the number of distinct labels keeps the extras as
ambient-only vertices, labeled past the largest used label.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import SimplicialComplex, VertexMap, from_facets
from .errors import InputFormatError


def _normalize(declared: int | None, raw_facets: list[list[int]]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    seen: set[int] = set()
    for f in raw_facets:
        for v in f:
            if v < 0:
                raise InputFormatError(f"negative vertex label {v}")
            seen.add(v)
    if not raw_facets:
        raise InputFormatError("no facets given")
    labels = sorted(seen)
    k = declared if declared is not None else len(labels)
    if k < len(labels):
        raise InputFormatError(
            f"declared vertex count {k} below the {len(labels)} distinct labels used"
        )
    index = {lab: i for i, lab in enumerate(labels)}
    next_label = (labels[-1] + 1) if labels else 0
    full_labels = list(labels)
    while len(full_labels) < k:
        full_labels.append(next_label)
        next_label += 1
    delta = from_facets(k, [[index[v] for v in f] for f in raw_facets])
    return delta, tuple(full_labels)


def parse_complex_json(text: str) -> tuple[SimplicialComplex, tuple[int, ...]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"invalid JSON facet list: {e}") from e
    if not isinstance(obj, dict) or "facets" not in obj:
        raise InputFormatError('JSON facet list must be {"vertices": ..., "facets": [...]}')
    declared = obj.get("vertices")
    if declared is not None and (not isinstance(declared, int) or declared < 1):
        raise InputFormatError('"vertices" must be a positive integer')
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InputFormatError('"facets" must be a list of label lists')
    try:
        raw = [[int(v) for v in f] for f in facets]
    except (TypeError, ValueError) as e:
        raise InputFormatError(f"facet labels must be integers: {e}") from e
    return _normalize(declared, raw)


def parse_complex_text(text: str) -> tuple[SimplicialComplex, tuple[int, ...]]:
    declared = None
    raw: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("k=") and declared is None and not raw:
            try:
                declared = int(line[2:])
            except ValueError as e:
                raise InputFormatError(f"line {lineno}: bad vertex count {line!r}") from e
            continue
        try:
            raw.append([int(tok) for tok in line.split()])
        except ValueError as e:
            raise InputFormatError(f"line {lineno}: bad facet {line!r}") from e
    return _normalize(declared, raw)


def load_complex_file(path) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Load a facet list, sniffing JSON versus plain text."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {p}: {e}") from e
    if text.lstrip().startswith("{"):
        return parse_complex_json(text)
    return parse_complex_text(text)


def parse_vertex_map(text: str, labels: tuple[int, ...]) -> VertexMap:
    """Parse 'src dst' label lines into a vertex map over the given labels."""
    index = {lab: i for i, lab in enumerate(labels)}
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise InputFormatError(f"line {lineno}: expected 'src dst', got {line!r}")
        try:
            src, dst = int(toks[0]), int(toks[1])
        except ValueError as e:
            raise InputFormatError(f"line {lineno}: labels must be integers") from e
        for lab in (src, dst):
            if lab not in index:
                raise InputFormatError(f"line {lineno}: unknown vertex label {lab}")
        pairs.append((index[src], index[dst]))
    return VertexMap.merging(len(labels), pairs)


def load_vertex_map(path, labels: tuple[int, ...]) -> VertexMap:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {p}: {e}") from e
    return parse_vertex_map(text, labels)
