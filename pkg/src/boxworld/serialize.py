"""Bit-exact JSON forms for tensors, tables, transforms, and reports.

All probabilities travel as exact fraction strings ("3/4", "-1/2", "1");
omitted table entries mean zero.  Dumps are canonical: keys sorted, entries
sorted, two-space indent, trailing newline.  Equal objects serialize to equal
bytes.
"""

from __future__ import annotations

import json

from .dyadic import ZERO, dy
from .errors import BoxworldError
from .tables import BoxTable, all_bitstrings
from .tensors import GptTensor, Role
from .transforms import ReversibleTransform, SingleSiteTransform
from .discrimination import TwoOutcomePovm
from .purification import PurificationReport
from .commitment import AuditReport, CheatParams, SweepSummary, Transcript


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def tensor_to_dict(t: GptTensor) -> dict:
    return {
        "n_parties": t.n_parties,
        "role": t.role.value,
        "entries": [str(v) for v in t.entries],
    }


def tensor_from_dict(d: dict) -> GptTensor:
    try:
        role = Role(d["role"])
        entries = tuple(dy(v) for v in d["entries"])
        n = int(d["n_parties"])
    except (KeyError, ValueError, TypeError) as exc:
        raise BoxworldError(f"malformed tensor JSON: {exc}") from exc
    return GptTensor(n, entries, role)


def table_to_dict(t: BoxTable) -> dict:
    entries = []
    for x in all_bitstrings(t.n_parties):
        for a in all_bitstrings(t.n_parties):
            p = t.prob(x, a)
            if p != ZERO:
                entries.append({
                    "x": "".join(map(str, x)),
                    "a": "".join(map(str, a)),
                    "p": str(p),
                })
    return {"n_parties": t.n_parties, "entries": entries}


def table_from_dict(d: dict) -> BoxTable:
    try:
        n = int(d["n_parties"])
        probs = {}
        for row in d["entries"]:
            x = tuple(int(c) for c in row["x"])
            a = tuple(int(c) for c in row["a"])
            probs[(x, a)] = dy(row["p"])
    except (KeyError, ValueError, TypeError) as exc:
        raise BoxworldError(f"malformed table JSON: {exc}") from exc
    return BoxTable(n, probs)


def transform_to_dict(t: ReversibleTransform) -> dict:
    return {
        "perm": [p + 1 for p in t.perm],
        "sites": [{"k": u.k, "s": "+" if u.s == 1 else "-"} for u in t.sites],
    }


def transform_from_dict(d: dict) -> ReversibleTransform:
    sites = tuple(
        SingleSiteTransform(int(s["k"]), 1 if s["s"] == "+" else -1) for s in d["sites"]
    )
    perm = tuple(int(p) - 1 for p in d["perm"])
    return ReversibleTransform(sites, perm)


def povm_to_dict(p: TwoOutcomePovm) -> dict:
    return {
        "convention": p.convention_id,
        "separating_input": "".join(map(str, p.separating_input)),
        "parity": p.parity,
        "terms": [{"sites": list(term)} for term in p.terms],
    }


def cheat_to_dict(c: CheatParams) -> dict:
    return {"alpha": c.alpha, "beta": c.beta, "gamma": c.gamma}


def transcript_to_dict(t: Transcript) -> dict:
    return {
        "protocol": t.protocol,
        "mode": t.mode,
        "committed": t.committed,
        "revealed": t.revealed,
        "seed": t.seed,
        "alice_message": t.alice_message,
        "verdict": t.verdict,
        "cheat": cheat_to_dict(t.cheat) if t.cheat else None,
        "records": [
            {
                "x": r.x, "a": r.a, "y": r.y, "b": r.b,
                "x_revealed": r.x_revealed, "a_revealed": r.a_revealed,
            }
            for r in t.records
        ],
    }


def purification_report_to_dict(r: PurificationReport) -> dict:
    return {
        "target": tensor_to_dict(r.target),
        "target_internal": r.target_internal,
        "purifications": [
            {"label": e.label, "kept_sites": list(e.kept)} for e in r.purifications
        ],
        "unique_up_to_local": r.unique_up_to_local,
        "witnesses": [
            {"from": i, "to": j, "transform": transform_to_dict(t)}
            for i, j, t in r.witnesses
        ],
        "failing_pair": list(r.failing_pair) if r.failing_pair else None,
    }


def audit_report_to_dict(r: AuditReport) -> dict:
    return {
        "alice_sites": list(r.alice_sites),
        "correct": r.correct,
        "concealing": r.concealing,
        "concealing_bob_marginal": r.concealing_bob_marginal,
        "binding": r.binding,
        "binding_scope": "reversible transforms only",
        "witness": transform_to_dict(r.witness) if r.witness else None,
        "perfect": r.perfect,
    }


def sweep_to_dict(s: SweepSummary) -> dict:
    return {
        "alice_sites": list(s.alice_sites),
        "n_pairs": s.n_pairs,
        "combo_counts": [
            {"correct": c, "concealing": z, "binding": b, "count": n}
            for (c, z, b), n in s.combo_counts
        ],
        "concealing_pairs": [list(p) for p in s.concealing_pairs],
        "bob_marginal_equal_pairs": s.bob_marginal_equal_pairs,
        "perfect_pairs": [list(p) for p in s.perfect_pairs],
    }


def sweep_to_csv(s: SweepSummary) -> str:
    lines = ["correct,concealing,binding,count"]
    for (c, z, b), n in s.combo_counts:
        lines.append(f"{int(c)},{int(z)},{int(b)},{n}")
    return "\n".join(lines) + "\n"
