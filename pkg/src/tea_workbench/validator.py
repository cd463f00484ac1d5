"""Structural well-formedness rules for assurance cases.

Rule table:
  W1 error    exactly one goal claim and it is the root
  W2 error    claim graph is a tree (defensive re-check after JSON decode)
  W3 error    every leaf claim carries at least one evidence reference
  W4 warning  every declared evidence is referenced by at least one claim
  W5 error    every evidence reference resolves to a declared evidence
  W6 error    node ids are unique within their namespace
  W7 error    stage tags are known stage ids; considers tags exist in the
              active considerations map
  W8 warning  a claim statement is duplicated verbatim elsewhere

Findings come back sorted by (severity, code, node); an empty list means
the case is well-formed. ``validate`` never raises on case content.
"""

from __future__ import annotations

from pathlib import Path

from .case_model import AssuranceCase, GOAL
from .diagnostics import ERROR, WARNING, Diagnostic, sort_key
from .errors import NotFoundError
from .fairness_map import BUILTIN_MAP_ID, consideration_ids
from .lifecycle import is_stage_id


def _check_tree(case: AssuranceCase, out: list[Diagnostic]):
    parents: dict[str, list[str]] = {}
    broken = False
    for cid, claim in case.claims.items():
        for child in claim.children:
            if child not in case.claims:
                out.append(
                    Diagnostic("W2", ERROR, f"claim {cid} references unknown child {child}", cid)
                )
                broken = True
                continue
            parents.setdefault(child, []).append(cid)
    for child, ps in sorted(parents.items()):
        if len(ps) > 1:
            out.append(
                Diagnostic(
                    "W2", ERROR, f"claim {child} has multiple parents: {', '.join(sorted(ps))}", child
                )
            )
            broken = True
    if case.root_id in parents:
        out.append(Diagnostic("W2", ERROR, f"root claim {case.root_id} appears as a child", case.root_id))
        broken = True
    if case.root_id not in case.claims:
        out.append(Diagnostic("W2", ERROR, f"root claim {case.root_id} is not declared", case.root_id))
        return
    if broken:
        return
    reachable = set(case.preorder())
    for cid in sorted(set(case.claims) - reachable):
        out.append(Diagnostic("W2", ERROR, f"claim {cid} is not reachable from the root", cid))


def validate(case: AssuranceCase, map_id: str = BUILTIN_MAP_ID,
             map_dirs: tuple[Path, ...] = ()) -> list[Diagnostic]:
    out: list[Diagnostic] = []

    # W1: goal placement
    goals = sorted(cid for cid, c in case.claims.items() if c.kind == GOAL)
    if case.root_id in case.claims and case.claims[case.root_id].kind != GOAL:
        out.append(Diagnostic("W1", ERROR, f"root claim {case.root_id} is not a goal", case.root_id))
    for cid in goals:
        if cid != case.root_id:
            out.append(Diagnostic("W1", ERROR, f"claim {cid} is a goal but not the root", cid))
    if not goals:
        out.append(Diagnostic("W1", ERROR, "case has no goal claim", None))

    # W2: tree shape
    _check_tree(case, out)

    # W3: leaves must be grounded
    for cid, claim in case.claims.items():
        if claim.is_leaf and not claim.evidence_refs:
            out.append(Diagnostic("W3", ERROR, f"leaf claim {cid} has no supporting evidence", cid))

    # W4: dangling evidence declarations
    referenced: set[str] = set()
    for claim in case.claims.values():
        referenced |= claim.evidence_refs
    for eid in case.evidence:
        if eid not in referenced:
            out.append(Diagnostic("W4", WARNING, f"evidence {eid} is not referenced by any claim", eid))

    # W5: references must resolve
    for cid, claim in sorted(case.claims.items()):
        for eid in sorted(claim.evidence_refs):
            if eid not in case.evidence:
                out.append(
                    Diagnostic("W5", ERROR, f"claim {cid} references undeclared evidence {eid}", cid)
                )

    # W6: map keys must match node ids, one node per id
    seen_claim_ids: set[str] = set()
    for key, claim in case.claims.items():
        if key != claim.id:
            out.append(Diagnostic("W6", ERROR, f"claim keyed {key} carries id {claim.id}", claim.id))
        if claim.id in seen_claim_ids:
            out.append(Diagnostic("W6", ERROR, f"duplicate claim id {claim.id}", claim.id))
        seen_claim_ids.add(claim.id)
    seen_evidence_ids: set[str] = set()
    for key, ev in case.evidence.items():
        if key != ev.id:
            out.append(Diagnostic("W6", ERROR, f"evidence keyed {key} carries id {ev.id}", ev.id))
        if ev.id in seen_evidence_ids:
            out.append(Diagnostic("W6", ERROR, f"duplicate evidence id {ev.id}", ev.id))
        seen_evidence_ids.add(ev.id)

    # W7: registry membership of tags
    try:
        known_tags = consideration_ids(map_id, map_dirs)
    except NotFoundError:
        known_tags = None
        out.append(Diagnostic("W7", ERROR, f"active considerations map {map_id!r} not found", None))
    for cid, claim in sorted(case.claims.items()):
        if claim.stage is not None and not is_stage_id(claim.stage):
            out.append(Diagnostic("W7", ERROR, f"claim {cid} names unknown stage {claim.stage!r}", cid))
        if known_tags is not None:
            for tag in sorted(claim.considers):
                if tag not in known_tags:
                    out.append(
                        Diagnostic("W7", ERROR, f"claim {cid} names unknown consideration {tag!r}", cid)
                    )

    # W8: verbatim duplicate statements (copy-paste smell); the first
    # occurrence in document order is treated as the original
    first_seen: dict[str, str] = {}
    order = case.preorder() + sorted(set(case.claims) - set(case.preorder()))
    for cid in order:
        stmt = case.claims[cid].statement
        if stmt in first_seen:
            out.append(
                Diagnostic(
                    "W8", WARNING, f"claim {cid} repeats the statement of {first_seen[stmt]}", cid
                )
            )
        else:
            first_seen[stmt] = cid

    return sorted(out, key=sort_key)
