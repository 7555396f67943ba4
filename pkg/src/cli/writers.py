#!/usr/bin/env python3
"""
CSV and JSON serialization of screens, curves and convergence tables.

CSV files start with '#'-prefixed metadata lines followed by a pandas table.
JSON documents are validated against SCREEN_SCHEMA before writing. Floats are
written in shortest round-trip form and keys in a fixed order, so identical
inputs give byte-identical files.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import jsonschema
import numpy as np
import pandas as pd

from src.geometry.caustics import CurveSample, ScreenParams
from src.geometry.classify import classify_point
from src.recurrence.screen import Screen

logger = logging.getLogger(__name__)

SCREEN_COLUMNS = ["j12", "j23", "J12", "J23", "value", "region", "quadrilateral"]
CURVE_COLUMNS = ["kind", "branch", "x", "y", "V2_residual"]

_NUMBER = {"type": "number"}
_POINT = {"type": "array", "items": _NUMBER, "minItems": 2, "maxItems": 2}

SCREEN_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["params", "domain", "defect", "values", "curves"],
    "properties": {
        "params": {"type": "array", "items": {"type": "string"}, "minItems": 4, "maxItems": 4},
        "domain": {
            "type": "object",
            "required": ["j12_min", "j12_max", "j23_min", "j23_max", "size"],
            "properties": {
                "j12_min": {"type": "string"},
                "j12_max": {"type": "string"},
                "j23_min": {"type": "string"},
                "j23_max": {"type": "string"},
                "size": {"type": "integer", "minimum": 1},
            },
        },
        "defect": {
            "type": "object",
            "required": ["rows", "columns"],
            "properties": {"rows": _NUMBER, "columns": _NUMBER},
        },
        "values": {"type": "array", "items": {"type": "array", "items": _NUMBER}},
        "curves": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "closed", "points"],
                "properties": {
                    "kind": {"type": "string"},
                    "closed": {"type": "boolean"},
                    "flags": {"type": "array", "items": {"type": "string"}},
                    "points": {"type": "array", "items": _POINT},
                },
            },
        },
        "regions": {"type": "object", "additionalProperties": _NUMBER},
    },
}


def header_lines(meta: Dict[str, Any], stamp: bool = False) -> List[str]:
    """'# key: value' lines in insertion order; a UTC timestamp only when stamp is set."""
    lines = [f"# {key}: {value}" for key, value in meta.items()]
    if stamp:
        lines.append(f"# created: {datetime.now(timezone.utc).isoformat(timespec='seconds')}")
    return lines


def write_table(frame: pd.DataFrame, meta: Dict[str, Any], out: Optional[Path] = None,
                stamp: bool = False) -> None:
    """
    Write a metadata header and a CSV table.

    Args:
        frame: Table to write
        meta: Header metadata
        out: Output file; stdout when None
        stamp: Add a creation timestamp
    """
    text = "\n".join(header_lines(meta, stamp)) + "\n" + frame.to_csv(index=False, lineterminator="\n")
    if out is None:
        sys.stdout.write(text)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    logger.info(f"Wrote {len(frame)} rows to {out}")


def screen_meta(screen: Screen) -> Dict[str, Any]:
    d = screen.domain
    return {
        "params": " ".join(str(v) for v in screen.params),
        "domain": f"j12 [{d.j12_min}, {d.j12_max}] j23 [{d.j23_min}, {d.j23_max}] size {d.size}",
        "method": screen.method,
        "row_defect": repr(screen.row_defect),
        "column_defect": repr(screen.column_defect),
    }


def screen_frame(screen: Screen, caustic_rel: float = 1e-9) -> pd.DataFrame:
    """
    One row per grid point, ordered by j23 then j12.

    Region and quadrilateral type are evaluated at the continuous point
    (j12 + 1/2, j23 + 1/2).
    """
    params = ScreenParams.from_labels(*screen.params)
    j12s = list(screen.domain.j12_values())
    j23s = list(screen.domain.j23_values())
    records = []
    for k23, j23 in enumerate(j23s):
        y = float(j23.edge)
        for k12, j12 in enumerate(j12s):
            x = float(j12.edge)
            cls = classify_point(x, y, params, caustic_rel)
            records.append((str(j12), str(j23), x, y, float(screen.values[k12, k23]),
                            cls.region, cls.quadrilateral))
    return pd.DataFrame.from_records(records, columns=SCREEN_COLUMNS)


def curves_frame(curves: Sequence[CurveSample]) -> pd.DataFrame:
    """Long-format table of curve points."""
    frames = [
        pd.DataFrame({
            "kind": curve.kind,
            "branch": list(curve.branches),
            "x": curve.points[:, 0],
            "y": curve.points[:, 1],
            "V2_residual": curve.residuals,
        })
        for curve in curves
    ]
    if not frames:
        return pd.DataFrame(columns=CURVE_COLUMNS)
    return pd.concat(frames, ignore_index=True)[CURVE_COLUMNS]


def curves_meta(params: Sequence[Any], curves: Sequence[CurveSample]) -> Dict[str, Any]:
    flags = sorted(set().union(*(c.flags for c in curves))) if curves else []
    corners = {flag: (x, y) for c in curves for flag, x, y in c.corners}
    return {
        "params": " ".join(str(v) for v in params),
        "flags": ",".join(flags) or "none",
        "corners": "; ".join(f"{f} ({x!r}, {y!r})" for f, (x, y) in sorted(corners.items())) or "none",
        "gaps": sum(c.gaps for c in curves),
    }


def _curve_entry(curve: CurveSample) -> Dict[str, Any]:
    return {
        "kind": curve.kind,
        "closed": curve.closed,
        "flags": sorted(curve.flags),
        "points": [[float(x), float(y)] for x, y in curve.points],
    }


def screen_document(screen: Screen, curves: Sequence[CurveSample] = (),
                    regions: Optional[Dict[str, float]] = None) -> Dict[str, Any]:
    """
    JSON document for a screen, values row-major with rows indexed by j12.

    Raises:
        jsonschema.ValidationError: If the document does not match SCREEN_SCHEMA
    """
    d = screen.domain
    doc: Dict[str, Any] = {
        "params": [str(v) for v in screen.params],
        "domain": {
            "j12_min": str(d.j12_min), "j12_max": str(d.j12_max),
            "j23_min": str(d.j23_min), "j23_max": str(d.j23_max),
            "size": d.size,
        },
        "defect": {"rows": screen.row_defect, "columns": screen.column_defect},
        "values": np.asarray(screen.values, dtype=float).tolist(),
        "curves": [_curve_entry(c) for c in curves],
    }
    if regions is not None:
        doc["regions"] = {k: float(v) for k, v in regions.items()}
    jsonschema.validate(doc, SCREEN_SCHEMA)
    return doc


def write_json(doc: Dict[str, Any], out: Optional[Path] = None) -> None:
    """Write a document; json uses repr for floats, so values round-trip exactly."""
    text = json.dumps(doc, allow_nan=False) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    logger.info(f"Wrote JSON document to {out}")
