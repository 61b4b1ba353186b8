"""JSON algebra documents: loading, canonical serialization, bundled corpus.

Document layout::

    {
      "name": "m2-cartan",
      "labels": [{"name": "z", "dim": 2}, ...],
      "zero_label": "z",                      # or null / omitted
      "bracket": [{"i": 2, "j": 3, "value": [{"index": 0, "num": 1, "den": 1}, ...]}],
      "aprod":   [... same shape ...]
    }

Indices are global 0-based basis positions.  An index may also be written as
``{"label": "p", "k": 0}`` (the ``k``-th basis vector of block ``p``).  Bracket
entries are given for ``i <= j`` only and antisymmetrized on load; ``aprod``
lists every nonzero ordered pair.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .algebra import GradedAlgebra, SpecError, Table


def _rational(entry: Any) -> Fraction:
    if not isinstance(entry, dict):
        raise SpecError(f"malformed rational {entry!r}")
    num, den = entry.get("num"), entry.get("den", 1)
    if type(num) is not int or type(den) is not int:
        raise SpecError(f"malformed rational {entry!r}")
    if den == 0:
        raise SpecError(f"zero denominator in {entry!r}")
    return Fraction(num, den)


def _index(ref: Any, offsets: dict[str, int], dims: dict[str, int], n: int) -> int:
    if type(ref) is int:
        idx = ref
    elif isinstance(ref, dict):
        label, k = ref.get("label"), ref.get("k", 0)
        if label not in offsets:
            raise SpecError(f"unknown label {label!r} in structure constant")
        if type(k) is not int or not 0 <= k < dims[label]:
            raise SpecError(f"index {k!r} outside block {label!r}")
        idx = offsets[label] + k
    else:
        raise SpecError(f"malformed index {ref!r}")
    if not 0 <= idx < n:
        raise SpecError(f"index {idx} out of range 0..{n - 1}")
    return idx


def _table(entries: Any, offsets, dims, n: int, antisymmetric: bool) -> Table:
    if not isinstance(entries, list):
        raise SpecError("structure constants must be a list")
    table: Table = {}
    seen: set[tuple[int, int]] = set()
    for entry in entries:
        if not isinstance(entry, dict) or "value" not in entry:
            raise SpecError(f"malformed structure constant {entry!r}")
        i = _index(entry.get("i"), offsets, dims, n)
        j = _index(entry.get("j"), offsets, dims, n)
        if antisymmetric and i > j:
            raise SpecError(f"bracket entries must have i <= j, got ({i}, {j})")
        if (i, j) in seen:
            raise SpecError(f"duplicate entry ({i}, {j})")
        seen.add((i, j))
        value: dict[int, Fraction] = {}
        for term in entry["value"]:
            k = _index(term.get("index") if isinstance(term, dict) else None, offsets, dims, n)
            c = _rational(term)
            if k in value:
                raise SpecError(f"duplicate coordinate {k} in entry ({i}, {j})")
            if c:
                value[k] = c
        if value:
            table[(i, j)] = value
            if antisymmetric and i != j:
                table[(j, i)] = {k: -c for k, c in value.items()}
    return table


def load_spec(doc: dict) -> GradedAlgebra:
    """Build a :class:`GradedAlgebra` from a parsed document (no axioms checked)."""
    if not isinstance(doc, dict):
        raise SpecError("document must be a JSON object")
    labels_raw = doc.get("labels")
    if not isinstance(labels_raw, list) or not labels_raw:
        raise SpecError("labels must be a non-empty list")
    labels: list[str] = []
    dims: dict[str, int] = {}
    for item in labels_raw:
        name, dim = (item.get("name"), item.get("dim")) if isinstance(item, dict) else (None, None)
        if not isinstance(name, str) or not name or name.endswith("~"):
            raise SpecError(f"bad label {item!r}")
        if type(dim) is not int or dim <= 0:
            raise SpecError(f"label {name!r} needs a positive integer dim")
        if name in dims:
            raise SpecError(f"duplicate label {name!r}")
        labels.append(name)
        dims[name] = dim
    zero = doc.get("zero_label")
    if zero is not None and zero not in dims:
        raise SpecError(f"unknown zero_label {zero!r}")
    offsets, pos = {}, 0
    for s in labels:
        offsets[s] = pos
        pos += dims[s]
    bracket = _table(doc.get("bracket", []), offsets, dims, pos, antisymmetric=True)
    aprod = _table(doc.get("aprod", []), offsets, dims, pos, antisymmetric=False)
    return GradedAlgebra(str(doc.get("name", "")), tuple(labels), dims, bracket, aprod, zero)


def load_path(path: str | Path) -> GradedAlgebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc})") from exc
    return load_spec(doc)


def rational_json(c: Fraction) -> dict[str, int]:
    return {"num": c.numerator, "den": c.denominator}


def _entries(table: Table, upper_only: bool) -> list[dict]:
    out = []
    for (i, j) in sorted(table):
        if upper_only and i > j:
            continue
        value = table[(i, j)]
        out.append(
            {
                "i": i,
                "j": j,
                "value": [{"index": k, **rational_json(value[k])} for k in sorted(value)],
            }
        )
    return out


def to_document(A: GradedAlgebra) -> dict:
    """Canonical document: global indices, sorted entries, reduced rationals."""
    return {
        "name": A.name,
        "labels": [{"name": s, "dim": A.dims[s]} for s in A.labels],
        "zero_label": A.zero_label,
        "bracket": _entries(A.bracket, upper_only=True),
        "aprod": _entries(A.aprod, upper_only=False),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


CORPUS = ("m2-cartan", "heis3", "m2-double", "sl2-lie", "aff2-lie", "shift3", "broken-jacobi", "broken-leibniz", "untight-z")


def corpus_dir():
    return resources.files("ncpoisson") / "corpus"


def corpus_paths() -> list[Path]:
    root = corpus_dir()
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".json"))


def load_corpus(name: str) -> GradedAlgebra:
    return load_path(Path(str(corpus_dir() / f"{name}.json")))
