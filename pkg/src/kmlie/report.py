"""Claims, reports and their deterministic serialization."""
from __future__ import annotations

import enum
import json
from importlib import resources
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from .scalars import GaussQ, format_scalar


@dataclass
class Claim:
    description: str
    anchor: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        return {"description": self.description, "paper_anchor": self.anchor,
                "pass": bool(self.passed), "witness": jsonable(self.witness)}


@dataclass
class Report:
    scenario: str = ""
    claims: List[Claim] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        out: dict = {"claims": [c.to_json() for c in self.claims]}
        if self.scenario:
            out["scenario"] = self.scenario
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def jsonable(x: Any) -> Any:
    """Exact scalars become ``p/q`` strings; containers are converted recursively."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, GaussQ)):
        return format_scalar(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    to_json = getattr(x, "to_json", None)
    if to_json is not None:
        return jsonable(to_json())
    return str(x)


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def emit_report(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(report.to_json())
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    if report.scenario:
        lines.append(f"scenario: {report.scenario}")
    width = max((len(c.description) for c in report.claims), default=0)
    for c in report.claims:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.description.ljust(width)}  [{c.anchor}]")
    for n in report.notes:
        lines.append(f"note: {n}")
    total = len(report.claims)
    ok = sum(1 for c in report.claims if c.passed)
    lines.append(f"{ok}/{total} claims pass")
    return "\n".join(lines)


GOLDEN_VERSION = "v1"


def load_golden(name: str) -> Dict[str, Any]:
    """Expected values shipped under ``data/golden/<version>/<name>.json``, keyed by check name."""
    path = resources.files("kmlie") / "data" / "golden" / GOLDEN_VERSION / f"{name}.json"
    return {k: v["value"] for k, v in json.loads(path.read_text()).items()}
