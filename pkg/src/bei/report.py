"""Per-graph invariant reports and their JSON form.

Big integers and rationals are serialized as decimal strings ({num, den} for
rationals): factorial denominators overflow doubles long before the size cap,
and the whole point of the engine is exactness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from bei import invariants as inv
from bei.connectivity import (
    ToughnessValue,
    toughness,
    vertex_connectivity,
)
from bei.graphs import Graph, is_complete, is_connected


def _rational_json(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _vertices_json(vs) -> list[int]:
    return [v + 1 for v in sorted(vs)]  # 1-based in all textual output


def _toughness_json(tv: ToughnessValue) -> dict[str, Any]:
    if tv.is_infinite:
        return {"type": "infinite"}
    return {
        "type": "finite",
        "num": str(tv.value.numerator),
        "den": str(tv.value.denominator),
        "witness": _vertices_json(tv.witness),
    }


def build_report(G: Graph) -> dict[str, Any]:
    """JSON-ready invariant record; every field reproducible by re-running
    the corresponding operation."""
    connected = is_connected(G)
    complete = is_complete(G)
    verdict = inv.cm_screen(G)
    mult = inv.multiplicities(G)
    primes = inv.minimal_primes(G)

    kappa: Optional[int] = vertex_connectivity(G) if connected else None
    tough = _toughness_json(toughness(G)) if connected else None
    if connected and not complete:
        depth_ub: Optional[int] = inv.depth_upper_bound(G)
        pd_lb: Optional[int] = inv.pd_lower_bound(G)
    else:
        depth_ub = None
        pd_lb = None

    return {
        "n": G.n,
        "edge_count": G.edge_count(),
        "connected": connected,
        "complete": complete,
        "kappa": kappa,
        "toughness": tough,
        "max_cut_surplus": mult.max_cut_surplus,
        "krull_dimension": G.n + mult.max_cut_surplus,
        "equidimensional": verdict.equidimensional,
        "minimal_primes": [
            {
                "separator": _vertices_json(p.separator),
                "blocks": [_vertices_json(b) for b in p.blocks],
                "dimension": p.dimension,
            }
            for p in primes
        ],
        "hilbert_samuel": str(mult.hilbert_samuel),
        "hilbert_kunz": _rational_json(mult.hilbert_kunz),
        "depth_upper_bound": depth_ub,
        "pd_lower_bound": pd_lb,
        "screen": {
            "status": verdict.status,
            "certifications": [
                {"rule": r.value, "citation": inv.RULE_CITATIONS[r]}
                for r in verdict.certifications
            ],
            "violations": [
                {"rule": r.value, "citation": inv.RULE_CITATIONS[r]}
                for r in verdict.violations
            ],
        },
    }


def _fmt_vertexset(vs: list[int]) -> str:
    return "{" + ",".join(str(v) for v in vs) + "}" if vs else "{}"


def render_report(report: dict[str, Any]) -> str:
    """Human-readable rendering of a report dict."""
    lines = []
    push = lines.append
    push(f"vertices            {report['n']}")
    push(f"edges               {report['edge_count']}")
    push(f"connected           {'yes' if report['connected'] else 'no'}")
    push(f"complete            {'yes' if report['complete'] else 'no'}")
    if report["kappa"] is None:
        push("vertex connectivity n/a (disconnected)")
    else:
        push(f"vertex connectivity {report['kappa']}")
    t = report["toughness"]
    if t is None:
        push("toughness           n/a (disconnected)")
    elif t["type"] == "infinite":
        push("toughness           infinite (complete graph)")
    else:
        push(
            f"toughness           {t['num']}/{t['den']}"
            f"  witness {_fmt_vertexset(t['witness'])}"
        )
    push(f"max cut surplus     {report['max_cut_surplus']}")
    push(f"krull dimension     {report['krull_dimension']}")
    push(f"equidimensional     {'yes' if report['equidimensional'] else 'no'}")
    push(f"hilbert-samuel      {report['hilbert_samuel']}")
    hk = report["hilbert_kunz"]
    push(f"hilbert-kunz        {hk['num']}/{hk['den']}  (positive-characteristic invariant)")
    if report["depth_upper_bound"] is not None:
        push(f"depth upper bound   {report['depth_upper_bound']}")
        push(f"pd lower bound      {report['pd_lower_bound']}")
    push(f"minimal primes      {len(report['minimal_primes'])}")
    for p in report["minimal_primes"]:
        blocks = " ".join(_fmt_vertexset(b) for b in p["blocks"])
        push(f"  S={_fmt_vertexset(p['separator'])}  dim={p['dimension']}  blocks: {blocks}")
    s = report["screen"]
    push(f"screen verdict      {s['status']}")
    for c in s["certifications"]:
        push(f"  + {c['rule']}: {c['citation']}")
    for v in s["violations"]:
        push(f"  - {v['rule']}: {v['citation']}")
    return "\n".join(lines)
