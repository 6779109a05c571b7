"""Text formats for labelings: JSON documents, CSV and aligned grids."""

from __future__ import annotations

import json

from .graph import BundleSpec, Kind
from .labeling import Labeling


def rows(spec: BundleSpec, labeling: Labeling) -> list[list[int]]:
    """Labels as ``m`` rows (base index) of ``n`` columns (fibre index)."""
    n = spec.n
    return [list(labeling.labels[i * n:(i + 1) * n]) for i in range(spec.m)]


def to_grid(spec: BundleSpec, labeling: Labeling) -> str:
    width = len(str(max(labeling.labels, default=0)))
    return "".join(" ".join(str(x).rjust(width) for x in row) + "\n" for row in rows(spec, labeling))


def to_csv(spec: BundleSpec, labeling: Labeling) -> str:
    return "".join(",".join(map(str, row)) + "\n" for row in rows(spec, labeling))


def from_csv(text: str, d: int) -> Labeling:
    labels = [int(x) for line in text.splitlines() if line.strip() for x in line.split(",")]
    return Labeling(labels, d)


def to_json(spec: BundleSpec, labeling: Labeling) -> str:
    doc = {
        "kind": spec.kind.value,
        "m": spec.m,
        "n": spec.n,
        "ell": spec.ell,
        "d": labeling.d,
        "labels": list(labeling.labels),
    }
    return json.dumps(doc) + "\n"


def from_json(text: str) -> tuple[BundleSpec, Labeling]:
    """Parse a labeling document; raises ``ValueError`` on malformed input."""
    try:
        doc = json.loads(text)
        spec = BundleSpec(Kind(doc["kind"]), int(doc["m"]), int(doc["n"]), int(doc["ell"]))
        labeling = Labeling(doc["labels"], int(doc["d"]))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed labeling document: {exc}") from exc
    return spec, labeling
