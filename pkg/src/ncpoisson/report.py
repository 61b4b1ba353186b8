"""JSON-ready report fragments and the exit-code rule derived from them."""

from __future__ import annotations

from typing import Any

from .algebra import GradedAlgebra, validate
from .analysis import (
    HypothesisError,
    SimplicityResult,
    Verdict,
    check_direct_sum_theorem,
    decompose,
    fine_decomposition_check,
    gr_simple_criterion,
    gr_simple_direct,
    structure_flags,
)
from .document import rational_json
from .ideals import block_graded, ideal_closure
from .support import connection_classes, replay_connection


def algebra_fragment(A: GradedAlgebra) -> dict[str, Any]:
    return {
        "name": A.name,
        "labels": list(A.labels),
        "dims": [A.dims[s] for s in A.labels],
        "zero_label": A.zero_label,
        "total_dim": A.total_dim,
    }


def axioms_fragment(A: GradedAlgebra) -> dict[str, Any]:
    checks = {r.name: {"ok": r.ok, "violations": [list(v) for v in r.violations]} for r in validate(A)}
    return {"ok": all(c["ok"] for c in checks.values()), "checks": checks}


def support_fragment(A: GradedAlgebra) -> dict[str, Any]:
    plain = A.star_table.plain
    return {"star": [{"s": s, "t": t, "value": plain[(s, t)]} for s in A.labels for t in A.labels]}


def classes_fragment(A: GradedAlgebra, witness: bool = False) -> dict[str, Any]:
    part = connection_classes(A)
    out: dict[str, Any] = {"classes": [list(c) for c in part.classes]}
    if witness:
        rows = []
        for (lam, mu), fam in sorted(part.witness.items(), key=lambda kv: (A.labels.index(kv[0][0]), A.labels.index(kv[0][1]))):
            rows.append(
                {
                    "from": lam,
                    "to": mu,
                    "family": [str(x) for x in fam],
                    "replays": replay_connection(A, fam, lam, mu),
                }
            )
        out["witnesses"] = rows
        out["ok"] = all(r["replays"] for r in rows)
    return out


def decomposition_fragment(A: GradedAlgebra) -> dict[str, Any]:
    d = decompose(A)
    theorem = check_direct_sum_theorem(A)
    applicable = "hypotheses not met" not in theorem.name
    return {
        "U_dim": d.U.rank,
        "summands": [{"class": list(c), "dim": S.dim, "block_dims": S.dims()} for c, S in d.summands],
        "direct": d.direct,
        "covers": d.covers,
        "direct_sum_theorem": {
            "applicable": applicable,
            "ok": theorem.ok,
            "violations": [list(v) for v in theorem.violations],
        },
        "ok": d.covers and theorem.ok,
    }


def flags_fragment(A: GradedAlgebra) -> dict[str, Any]:
    f = structure_flags(A)
    return {
        "centerless": f.centerless,
        "tight_zero": f.tight_zero,
        "maximal_length": f.maximal_length,
        "multiplicative": f.multiplicative,
        "center_dim": f.center.rank,
        "center_basis": [[rational_json(c) for c in row] for row in f.center.basis],
    }


def _verdict_json(r: SimplicityResult) -> dict[str, Any]:
    out: dict[str, Any] = {"verdict": r.verdict.value, "reasons": list(r.reasons)}
    if r.witness is not None:
        out["witness_dim"] = r.witness.dim
        out["witness_block_dims"] = r.witness.dims()
    return out


def simplicity_fragment(A: GradedAlgebra) -> dict[str, Any]:
    crit, direct = gr_simple_criterion(A), gr_simple_direct(A)
    both = Verdict.INAPPLICABLE not in (crit.verdict, direct.verdict)
    agree = crit.verdict == direct.verdict if both else None
    # informal: dimensions of the ideals generated by each nonzero block
    probes = {lam: ideal_closure(A, block_graded(A, [lam])).dim for lam in A.nonzero_labels}
    return {
        "criterion": _verdict_json(crit),
        "direct": _verdict_json(direct),
        "agree": agree,
        "ideals": "graded",
        "block_closure_dims": probes,
        "ok": agree is not False,
    }


def fine_fragment(A: GradedAlgebra) -> dict[str, Any]:
    try:
        report, parts = fine_decomposition_check(A)
    except HypothesisError as exc:
        return {"applicable": False, "reason": str(exc), "ok": True}
    return {
        "applicable": True,
        "ok": report.ok,
        "summands": [
            {
                "class": list(p.cls),
                "labels": list(p.restriction.labels),
                "dims": [p.restriction.dims[s] for s in p.restriction.labels],
                "axioms_ok": p.axioms_ok,
                "direct": _verdict_json(p.simple),
            }
            for p in parts
        ],
    }


def full_report(A: GradedAlgebra, witness: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {"algebra": algebra_fragment(A), "axioms": axioms_fragment(A)}
    if not out["axioms"]["ok"]:
        return out
    out.update(
        support=support_fragment(A),
        classes=classes_fragment(A, witness),
        decomposition=decomposition_fragment(A),
        flags=flags_fragment(A),
        simplicity=simplicity_fragment(A),
        fine_decomposition=fine_fragment(A),
    )
    return out


def exit_code(report: dict[str, Any]) -> int:
    """0 when every fragment with an ``ok`` field passed, else 1."""
    if "error" in report:
        return 2
    for value in report.values():
        if isinstance(value, dict) and value.get("ok") is False:
            return 1
    return 0
