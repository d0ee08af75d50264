"""Report assembly: input parsing, pipeline execution, cross-validation,
and deterministic serialization.

Inputs are JSON ({"vertices": [...], "edges": [[a, b], ...],
"character": {...}}) or a small DOT subset (vertex statements carrying an
integer attribute n, undirected edges with --).  The JSON report schema
is {"degrees": {"<m>": {"free_rank": int, "torsion": {"<d>": [...]}}},
"method": ..., "agreement": ...} plus formula profiles and provenance;
serialization is key-sorted so identical inputs give identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .flagcomplex import build_flag_complex
from .formulas import TorsionProfile, formula_decomposition
from .graphs import (
    Character,
    CharacterClass,
    InputError,
    SimplicialGraph,
    classify_character,
)
from .homology import ModuleDecomposition, full_decomposition, torsion_candidates


class ParseError(InputError):
    """Malformed input file."""


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def parse_json_input(data: bytes) -> tuple[SimplicialGraph, Character]:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"not valid UTF-8 JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for key in ("vertices", "edges", "character"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of strings")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of pairs")
    char = doc["character"]
    if not isinstance(char, dict):
        raise ParseError("'character' must be an object")
    graph = SimplicialGraph(vertices, edges)
    missing = [v for v in vertices if v not in char]
    if missing:
        raise ParseError(f"character value missing for vertices {missing}")
    extra = [v for v in char if v not in set(vertices)]
    if extra:
        raise ParseError(f"character defined on unknown vertices {extra}")
    values = {}
    for v, n in char.items():
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError(f"character value for {v!r} must be an integer")
        values[v] = n
    return graph, Character(values)


_DOT_VERTEX = re.compile(r'^"?([\w.+-]+)"?\s*\[\s*n\s*=\s*(-?\d+)\s*\]$')
_DOT_EDGE = re.compile(r'^"?([\w.+-]+)"?\s*--\s*"?([\w.+-]+)"?$')


def parse_dot_input(data: bytes) -> tuple[SimplicialGraph, Character]:
    """Parse the DOT subset: graph { a [n=18]; a -- b; ... }.

    Vertex declaration order is the order of the vertex statements; every
    vertex must carry an integer attribute n.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}") from exc
    body = text
    open_idx = body.find("{")
    close_idx = body.rfind("}")
    if open_idx < 0 or close_idx < 0 or close_idx < open_idx:
        raise ParseError("missing graph braces")
    head = body[:open_idx].strip()
    if not head.split() or head.split()[0] not in ("graph", "strict"):
        raise ParseError("only undirected 'graph' inputs are supported")
    vertices: list[str] = []
    values: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(body[open_idx + 1 : close_idx].splitlines(), start=1):
        for stmt in raw.split(";"):
            stmt = stmt.strip()
            if not stmt or stmt.startswith("//") or stmt.startswith("#"):
                continue
            m = _DOT_VERTEX.match(stmt)
            if m:
                name, label = m.group(1), int(m.group(2))
                if name in values:
                    raise ParseError(f"line {lineno}: vertex {name!r} declared twice")
                vertices.append(name)
                values[name] = label
                continue
            m = _DOT_EDGE.match(stmt)
            if m:
                edges.append((m.group(1), m.group(2)))
                continue
            raise ParseError(f"line {lineno}: cannot parse statement {stmt!r}")
    graph = SimplicialGraph(vertices, edges)
    return graph, Character(values)


def canonical_input_json(graph: SimplicialGraph, chi: Character) -> bytes:
    """Serialize a parsed input back to canonical JSON; parsing the result
    reproduces the same graph and character."""
    doc = {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "character": {v: chi[v] for v in graph.vertices},
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def parse_input(data: bytes, filename: str = "") -> tuple[SimplicialGraph, Character]:
    stripped = data.lstrip()
    if stripped.startswith(b"{"):
        return parse_json_input(data)
    if filename.endswith(".dot") or stripped.startswith((b"graph", b"strict")):
        return parse_dot_input(data)
    return parse_json_input(data)


# ---------------------------------------------------------------------------
# job + report model
# ---------------------------------------------------------------------------


@dataclass
class JobSpec:
    data: bytes
    method: str = "both"  # direct | formulas | both
    max_degree: Optional[int] = None
    d_filter: Optional[Sequence[int]] = None
    allow_resonant: bool = False
    fmt: str = "json"  # text | json


@dataclass
class Report:
    method: str
    degrees: dict[int, ModuleDecomposition]
    profiles: dict[int, dict[int, TorsionProfile]] = field(default_factory=dict)
    formula_degrees: dict[int, dict] = field(default_factory=dict)
    agreement: Optional[str] = None
    mismatches: list[str] = field(default_factory=list)
    provenance: dict = field(default_factory=dict)


def _decomposition_json(dec: ModuleDecomposition) -> dict:
    return {
        "free_rank": dec.free_rank,
        "torsion": {str(d): list(vec) for d, vec in sorted(dec.torsion.items())},
        **(
            {"remainder_factors": [str(p) for p in dec.remainder_factors]}
            if dec.remainder_factors
            else {}
        ),
    }


def _formula_degree_json(entry: dict) -> dict:
    return {
        "free_rank": entry["free_rank"],
        "torsion": {str(d): list(vec) for d, vec in sorted(entry["torsion"].items())},
    }


def _profile_json(profile: TorsionProfile) -> dict:
    return {
        "summand_count": profile.summand_count,
        "weighted_sum": profile.weighted_sum,
        "top_count": profile.top_count,
        "max_exponent": profile.max_exponent,
        "exponents": list(profile.exponents) if profile.exponents is not None else None,
    }


def compare_pipelines(
    degrees: dict[int, ModuleDecomposition],
    formula: dict[int, dict],
    orders: Sequence[int],
) -> list[str]:
    """Every comparable statistic between the two pipelines; returns the
    list of mismatch descriptions (empty means agreement)."""
    issues = []
    for m, entry in formula.items():
        direct = degrees.get(m)
        if direct is None:
            continue
        if direct.free_rank != entry["free_rank"]:
            issues.append(
                f"H_{m}: free rank {direct.free_rank} (direct) vs {entry['free_rank']} (formulas)"
            )
        d1_direct = direct.exponent_vector(1)
        d1_formula = entry["torsion"].get(1, ())
        if tuple(d1_direct) != tuple(d1_formula):
            issues.append(f"H_{m}: order-1 part {d1_direct} vs {d1_formula}")
        if m == 0:
            continue
        k = m - 1
        for d in orders:
            profile: TorsionProfile = entry["profiles"].get(d)
            if profile is None:
                continue
            stats = [
                ("weighted sum", direct.weighted_sum(d), profile.weighted_sum),
                ("summand count", direct.summand_count(d), profile.summand_count),
                ("top count", direct.top_count(d, k), profile.top_count),
                ("max exponent", direct.max_exponent(d), profile.max_exponent),
            ]
            for name, got_direct, got_formula in stats:
                if got_direct != got_formula:
                    issues.append(
                        f"H_{m} d={d}: {name} {got_direct} (direct) vs {got_formula} (formulas)"
                    )
            if profile.exponents is not None:
                if tuple(profile.exponents) != direct.exponent_vector(d):
                    issues.append(
                        f"H_{m} d={d}: exponents {direct.exponent_vector(d)} (direct) "
                        f"vs {profile.exponents} (formulas)"
                    )
    return issues


def run(job: JobSpec) -> tuple[Report, int]:
    """Execute a job; returns the report and the process exit code
    (0 success, 1 input error, 2 cross-validation mismatch)."""
    graph, chi = parse_input(job.data)
    cls = classify_character(graph, chi)
    if job.method in ("formulas", "both") and cls is not CharacterClass.NON_RESONANT_SURJECTIVE:
        raise InputError(
            f"{cls.value} character unsupported by the formula pipeline; "
            "use --method direct (with --allow-resonant for degenerate labels)"
        )
    f = build_flag_complex(graph)
    orders = torsion_candidates(chi)
    if job.d_filter is not None:
        wanted = set(job.d_filter)
        orders = [d for d in orders if d in wanted]

    report = Report(method=job.method, degrees={}, provenance=_provenance(job.data, graph))
    if job.method in ("direct", "both"):
        report.degrees = full_decomposition(
            f, chi, max_degree=job.max_degree, allow_degenerate=job.allow_resonant
        )
    if job.method in ("formulas", "both"):
        report.formula_degrees = formula_decomposition(f, chi, orders, max_degree=job.max_degree)
        report.profiles = {
            m: dict(entry["profiles"]) for m, entry in report.formula_degrees.items()
        }
    code = 0
    if job.method == "both":
        report.mismatches = compare_pipelines(report.degrees, report.formula_degrees, orders)
        report.agreement = "agree" if not report.mismatches else "mismatch"
        if report.mismatches:
            code = 2
    return report, code


def _provenance(data: bytes, graph: SimplicialGraph) -> dict:
    return {
        "input_sha256": hashlib.sha256(data).hexdigest(),
        "vertices": list(graph.vertices),
    }


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def report_to_json_obj(report: Report) -> dict:
    degrees_src = report.degrees or {}
    obj: dict = {
        "method": report.method,
        "agreement": report.agreement,
        "provenance": report.provenance,
    }
    if degrees_src:
        obj["degrees"] = {str(m): _decomposition_json(dec) for m, dec in sorted(degrees_src.items())}
    else:
        obj["degrees"] = {
            str(m): _formula_degree_json(entry)
            for m, entry in sorted(report.formula_degrees.items())
        }
    if report.profiles:
        obj["profiles"] = {
            str(m): {str(d): _profile_json(p) for d, p in sorted(per.items())}
            for m, per in sorted(report.profiles.items())
        }
    if report.mismatches:
        obj["mismatches"] = list(report.mismatches)
    return obj


def _module_text(free_rank: int, torsion: dict[int, Sequence[int]]) -> str:
    parts = []
    if free_rank == 1:
        parts.append("K[t±1]")
    elif free_rank > 1:
        parts.append(f"K[t±1]^{free_rank}")
    for d, vec in sorted(torsion.items()):
        for j, r in enumerate(vec, start=1):
            if r == 0:
                continue
            base = f"K[t±1]/Φ{d}" if j == 1 else f"K[t±1]/Φ{d}^{j}"
            parts.append(f"({base})^{r}" if r > 1 else base)
    return " ⊕ ".join(parts) if parts else "0"


def emit_report(report: Report, fmt: str = "json") -> bytes:
    """Deterministic serialization; identical reports give identical bytes."""
    if fmt == "json":
        text = json.dumps(report_to_json_obj(report), sort_keys=True, indent=2)
        return (text + "\n").encode("utf-8")
    if fmt != "text":
        raise InputError(f"unknown output format {fmt!r}")
    lines = []
    degrees = report.degrees or {}
    if degrees:
        for m, dec in sorted(degrees.items()):
            lines.append(f"H_{m} = {_module_text(dec.free_rank, dec.torsion)}")
            if dec.remainder_factors:
                rems = ", ".join(str(p) for p in dec.remainder_factors)
                lines.append(f"    non-cyclotomic content: {rems}")
    else:
        for m, entry in sorted(report.formula_degrees.items()):
            lines.append(f"H_{m} = {_module_text(entry['free_rank'], entry['torsion'])}")
    for m, per in sorted(report.profiles.items()):
        for d, p in sorted(per.items()):
            vec = list(p.exponents) if p.exponents is not None else "undetermined"
            lines.append(
                f"  degree {m}, order {d}: summands={p.summand_count} "
                f"dim_per_factor={p.weighted_sum} top={p.top_count} "
                f"max_exp={p.max_exponent} exponents={vec}"
            )
    if report.agreement is not None:
        lines.append(f"cross-validation: {report.agreement}")
        lines.extend(f"  {msg}" for msg in report.mismatches)
    return ("\n".join(lines) + "\n").encode("utf-8")
