"""File formats: frameworks, polytopes, certificates, analysis reports.

All rationals are written in the canonical text form "p" or "p/q" (q > 0,
gcd-reduced); decimals are rejected on input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .deduction import STEP_KINDS, Step
from .errors import InputError
from .exact import parse_rat, rat_str
from .framework import Framework, framework
from .polytope import PolytopeV, polytope

CERT_FORMAT = "edge-dependency-certificate/1"


def framework_to_obj(fw: Framework) -> dict:
    return {
        "dim": fw.dim,
        "vertices": [
            {"id": v, "coords": [rat_str(x) for x in fw.point(v)]} for v in fw.vertex_ids
        ],
        "edges": [[u, v] for u, v in fw.edges],
    }


def framework_from_obj(obj: dict) -> Framework:
    try:
        dim = obj["dim"]
        pts = {row["id"]: [parse_rat(c) for c in row["coords"]] for row in obj["vertices"]}
        edges = [(u, v) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed framework file: {exc}")
    for coords in pts.values():
        if len(coords) != dim:
            raise InputError("coordinate length does not match dim")
    return framework(pts, edges)


def polytope_to_obj(p: PolytopeV) -> dict:
    return {
        "dim": p.dim,
        "vertices": [
            {"id": v, "coords": [rat_str(x) for x in p.point(v)]} for v in p.vertex_ids
        ],
    }


def polytope_from_obj(obj: dict, check: bool = True) -> PolytopeV:
    try:
        dim = obj["dim"]
        pts = {row["id"]: [parse_rat(c) for c in row["coords"]] for row in obj["vertices"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed polytope file: {exc}")
    for coords in pts.values():
        if len(coords) != dim:
            raise InputError("coordinate length does not match dim")
    return polytope(pts, check=check)


def load_geometry(path: str):
    """Read a framework or polytope file; the edge list decides which."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict):
        raise InputError("top-level JSON object expected")
    if "edges" in obj:
        return framework_from_obj(obj)
    return polytope_from_obj(obj)


def save_obj(obj: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def certificate_to_obj(steps, conclusion: dict | None = None) -> dict:
    return {
        "format": CERT_FORMAT,
        "steps": [{"kind": s.kind, "payload": s.payload} for s in steps],
        "conclusion": conclusion,
    }


def certificate_from_obj(obj: dict) -> list[Step]:
    if obj.get("format") != CERT_FORMAT:
        raise InputError("unknown certificate format")
    steps = []
    for row in obj["steps"]:
        kind = row.get("kind")
        if kind not in STEP_KINDS:
            raise InputError(f"unknown step kind {kind!r}")
        steps.append(Step(kind, row["payload"]))
    return steps


@dataclass
class AnalysisReport:
    descriptor: str
    n_vertices: int
    n_edges: int
    dim: int
    connected: bool
    dc_dimension: int
    indecomposable: bool
    blocks: list[list[list[str]]] = field(default_factory=list)
    rays: list[list[str]] | None = None
    certificate: str | None = None
    seconds: float = 0.0

    def to_obj(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "dim": self.dim,
            "connected": self.connected,
            "dc_dimension": self.dc_dimension,
            "indecomposable": self.indecomposable,
            "blocks": self.blocks,
            "rays": self.rays,
            "certificate": self.certificate,
            "seconds": self.seconds,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "AnalysisReport":
        return cls(**obj)

    def same_verdicts(self, other: "AnalysisReport") -> bool:
        return (
            self.dc_dimension == other.dc_dimension
            and self.indecomposable == other.indecomposable
            and self.blocks == other.blocks
            and self.rays == other.rays
        )
