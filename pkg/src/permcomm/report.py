"""Report documents and their byte-stable JSON and CSV encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import IoFailure
from .groups import GroupHandle
from .perm import Permutation

TOOL_NAME = "permcomm"


def to_jsonable(obj):
    """Plain JSON data: rationals as ``{num, den}`` strings, groups as generator lists."""
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, Permutation):
        return str(obj)
    if isinstance(obj, GroupHandle):
        return obj.describe()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def decode_ratio(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def describe_group(G: GroupHandle) -> dict:
    return {"label": G.label, "degree": G.degree, "order": G.order,
            "generators": [str(g) for g in G.generators]}


@dataclass
class ReportDocument:
    tool_version: str
    config: dict
    groups: list = field(default_factory=list)
    entries: list = field(default_factory=list)

    def add_group(self, G: GroupHandle):
        d = describe_group(G)
        if d not in self.groups:
            self.groups.append(d)

    def add(self, kind: str, payload, timing_ms: Optional[float] = None):
        entry = {"kind": kind, "payload": to_jsonable(payload)}
        if timing_ms is not None:
            # milliseconds as a string keeps floats out of the document
            entry["timingMs"] = f"{timing_ms:.1f}"
        self.entries.append(entry)

    def to_json(self) -> dict:
        return {"tool": TOOL_NAME, "toolVersion": self.tool_version, "config": self.config,
                "groups": self.groups, "entries": self.entries}

    @classmethod
    def from_json(cls, d: dict) -> "ReportDocument":
        return cls(tool_version=d["toolVersion"], config=d["config"],
                   groups=d["groups"], entries=d["entries"])


def serialize_json(doc: ReportDocument) -> str:
    return json.dumps(doc.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> ReportDocument:
    return ReportDocument.from_json(json.loads(text))


def _is_ratio(v) -> bool:
    return isinstance(v, dict) and set(v) == {"num", "den"}


def _flatten(prefix, value, out):
    if _is_ratio(value):
        out.append((prefix, f"{value['num']}/{value['den']}"))
    elif isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list):
        if all(isinstance(v, str) for v in value):
            out.append((prefix, " ".join(value)))
        else:
            for i, v in enumerate(value):
                _flatten(f"{prefix}[{i}]", v, out)
    elif value is None:
        out.append((prefix, ""))
    elif isinstance(value, bool):
        out.append((prefix, "true" if value else "false"))
    else:
        out.append((prefix, str(value)))


def serialize_csv(doc: ReportDocument) -> str:
    """One row per (entry, group, metric); nested keys are joined with dots."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["entry", "kind", "group", "metric", "value"])
    for i, e in enumerate(doc.entries):
        payload = e["payload"]
        group = payload.get("group", "") if isinstance(payload, dict) else ""
        rows = []
        _flatten("", payload, rows)
        for metric, value in rows:
            w.writerow([i, e["kind"], group, metric, value])
    return buf.getvalue()


def emit_report(doc: ReportDocument, path, fmt: str = "json"):
    if fmt == "json":
        text = serialize_json(doc)
    elif fmt == "csv":
        text = serialize_csv(doc)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write report {path}: {exc}") from exc
