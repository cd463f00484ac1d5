"""In-memory assurance-case graph and its canonical JSON serialization.

A case is one goal claim decomposed into a tree of intermediate claims,
grounded by a pool of evidence nodes that claims reference by id. Claims
and evidence occupy separate id namespaces. Case values are immutable;
every edit operation returns a new value and bumps ``revision``.

Canonical JSON (schema ``tea-case/1``) is byte-deterministic: fixed key
order, claims in pre-order, evidence in declaration order, sorted tag and
reference arrays, numbers without exponent notation.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from datetime import date as _date
from decimal import Decimal
from math import isfinite

from .errors import (
    ConstructionError,
    DecodeError,
    DuplicateIdError,
    ForbiddenError,
    NotFoundError,
)

SCHEMA_ID = "tea-case/1"

GOAL = "goal"
INTERMEDIATE = "intermediate"

DOCUMENT = "document"
METRIC = "metric"
RECORD = "record"

COMPARATORS = ("lte", "gte")

METRIC_IDS = (
    "statistical_parity_difference",
    "conditional_statistical_parity_difference",
    "fpr_difference",
    "fnr_difference",
    "ppv_difference",
    "accuracy_difference",
    "overall_accuracy",
    "cohens_kappa",
)

_NODE_ID_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*\Z")
_SHA256_RE = re.compile(r"[0-9a-f]{64}\Z")


def check_node_id(value: str) -> str:
    if not isinstance(value, str) or not _NODE_ID_RE.match(value):
        raise ConstructionError(f"invalid node id {value!r}")
    return value


# ---------------------------------------------------------------------------
# Node types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    kind: str = INTERMEDIATE
    stage: str | None = None
    considers: frozenset[str] = frozenset()
    children: tuple[str, ...] = ()
    evidence_refs: frozenset[str] = frozenset()

    def __post_init__(self):
        check_node_id(self.id)
        if not self.statement:
            raise ConstructionError(f"claim {self.id}: statement must be non-empty")
        if self.kind not in (GOAL, INTERMEDIATE):
            raise ConstructionError(f"claim {self.id}: unknown kind {self.kind!r}")

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class DocumentPayload:
    uri: str
    sha256: str | None = None
    description: str = ""

    def __post_init__(self):
        if not self.uri:
            raise ConstructionError("document evidence: uri must be non-empty")
        if self.sha256 is not None and not _SHA256_RE.match(self.sha256):
            raise ConstructionError(
                "document evidence: sha256 must be 64 lowercase hex characters"
            )


@dataclass(frozen=True)
class MetricPayload:
    dataset_ref: str
    metric_id: str
    group_column: str
    comparator: str
    threshold: float
    condition_column: str | None = None

    def __post_init__(self):
        if not self.dataset_ref:
            raise ConstructionError("metric evidence: dataset reference must be non-empty")
        if self.metric_id not in METRIC_IDS:
            raise ConstructionError(f"metric evidence: unknown metric {self.metric_id!r}")
        if not self.group_column:
            raise ConstructionError("metric evidence: group column must be non-empty")
        if self.comparator not in COMPARATORS:
            raise ConstructionError(f"metric evidence: comparator must be one of {COMPARATORS}")
        if not isinstance(self.threshold, (int, float)) or not isfinite(self.threshold):
            raise ConstructionError("metric evidence: threshold must be finite")


@dataclass(frozen=True)
class RecordPayload:
    description: str
    date: _date
    participants: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.date, _date):
            raise ConstructionError("record evidence: date must be a date")


@dataclass(frozen=True)
class Evidence:
    id: str
    title: str
    kind: str
    payload: DocumentPayload | MetricPayload | RecordPayload

    def __post_init__(self):
        check_node_id(self.id)
        if not self.title:
            raise ConstructionError(f"evidence {self.id}: title must be non-empty")
        expected = {
            DOCUMENT: DocumentPayload,
            METRIC: MetricPayload,
            RECORD: RecordPayload,
        }.get(self.kind)
        if expected is None:
            raise ConstructionError(f"evidence {self.id}: unknown kind {self.kind!r}")
        if not isinstance(self.payload, expected):
            raise ConstructionError(f"evidence {self.id}: payload does not match kind {self.kind}")


@dataclass(frozen=True)
class Waiver:
    consideration_id: str
    rationale: str

    def __post_init__(self):
        if not self.consideration_id:
            raise ConstructionError("waiver: consideration id must be non-empty")
        if not self.rationale:
            raise ConstructionError(f"waiver {self.consideration_id}: rationale is mandatory")


@dataclass(frozen=True, eq=True)
class AssuranceCase:
    """The argument graph. Treat as immutable; edits go through the
    module-level operations, which return new values.

    Equality is structural: ``revision`` is concurrency metadata (the
    authoring text format does not carry it) and is excluded."""

    title: str
    root_id: str
    claims: dict[str, Claim] = field(default_factory=dict)
    evidence: dict[str, Evidence] = field(default_factory=dict)
    waivers: tuple[Waiver, ...] = ()
    revision: int = field(default=0, compare=False)

    def claim(self, claim_id: str) -> Claim:
        try:
            return self.claims[claim_id]
        except KeyError:
            raise NotFoundError(f"unknown claim {claim_id!r}") from None

    def preorder(self) -> list[str]:
        """Claim ids root-first in document order. Tolerates broken child
        references (the validator reports those)."""
        order: list[str] = []
        seen: set[str] = set()

        def walk(cid: str):
            if cid in seen or cid not in self.claims:
                return
            seen.add(cid)
            order.append(cid)
            for child in self.claims[cid].children:
                walk(child)

        walk(self.root_id)
        return order


# ---------------------------------------------------------------------------
# Construction and edit operations (pure: input case is never mutated)
# ---------------------------------------------------------------------------


def new_case(title: str, root_statement: str, root_id: str = "G1") -> AssuranceCase:
    if not title:
        raise ConstructionError("case title must be non-empty")
    root = Claim(id=root_id, statement=root_statement, kind=GOAL)
    return AssuranceCase(title=title, root_id=root.id, claims={root.id: root})


def add_claim(
    case: AssuranceCase,
    parent_id: str,
    claim_id: str,
    statement: str,
    stage: str | None = None,
    considers=(),
) -> AssuranceCase:
    parent = case.claim(parent_id)
    check_node_id(claim_id)
    if claim_id in case.claims:
        raise DuplicateIdError(f"claim id {claim_id!r} already in use")
    child = Claim(
        id=claim_id,
        statement=statement,
        kind=INTERMEDIATE,
        stage=stage,
        considers=frozenset(considers),
    )
    claims = dict(case.claims)
    claims[claim_id] = child
    claims[parent_id] = replace(parent, children=parent.children + (claim_id,))
    return replace(case, claims=claims, revision=case.revision + 1)


def add_evidence(case: AssuranceCase, evidence: Evidence) -> AssuranceCase:
    if evidence.id in case.evidence:
        raise DuplicateIdError(f"evidence id {evidence.id!r} already in use")
    pool = dict(case.evidence)
    pool[evidence.id] = evidence
    return replace(case, evidence=pool, revision=case.revision + 1)


def link_evidence(case: AssuranceCase, claim_id: str, evidence_id: str) -> AssuranceCase:
    claim = case.claim(claim_id)
    if evidence_id not in case.evidence:
        raise NotFoundError(f"unknown evidence {evidence_id!r}")
    if evidence_id in claim.evidence_refs:
        return case  # idempotent: no change, revision untouched
    claims = dict(case.claims)
    claims[claim_id] = replace(claim, evidence_refs=claim.evidence_refs | {evidence_id})
    return replace(case, claims=claims, revision=case.revision + 1)


def add_waiver(case: AssuranceCase, consideration_id: str, rationale: str) -> AssuranceCase:
    if any(w.consideration_id == consideration_id for w in case.waivers):
        raise DuplicateIdError(f"consideration {consideration_id!r} already waived")
    waiver = Waiver(consideration_id=consideration_id, rationale=rationale)
    return replace(case, waivers=case.waivers + (waiver,), revision=case.revision + 1)


def remove_subtree(case: AssuranceCase, claim_id: str) -> AssuranceCase:
    """Remove a claim and all its descendants. Evidence declarations are
    kept (possibly now dangling; the validator flags that as W4)."""
    if claim_id == case.root_id:
        raise ForbiddenError("cannot remove the root goal claim")
    case.claim(claim_id)

    doomed: set[str] = set()

    def collect(cid: str):
        if cid in doomed or cid not in case.claims:
            return
        doomed.add(cid)
        for child in case.claims[cid].children:
            collect(child)

    collect(claim_id)
    claims = {}
    for cid, claim in case.claims.items():
        if cid in doomed:
            continue
        if claim_id in claim.children:
            claim = replace(
                claim, children=tuple(c for c in claim.children if c != claim_id)
            )
        claims[cid] = claim
    return replace(case, claims=claims, revision=case.revision + 1)


# ---------------------------------------------------------------------------
# Canonical JSON
# ---------------------------------------------------------------------------


def _format_number(value) -> str:
    """Serialize without exponent notation; integers stay integral."""
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, int):
        return str(value)
    if not isfinite(value):
        raise ValueError("non-finite number in canonical JSON")
    text = repr(float(value))
    if "e" in text or "E" in text:
        text = format(Decimal(text), "f")
    return text


def _emit(value, indent: int, out: list[str]):
    pad = "  " * indent
    if value is None:
        out.append("null")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, (int, float)):
        out.append(_format_number(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, list):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append(pad + "  ")
            _emit(item, indent + 1, out)
            out.append(",\n" if i + 1 < len(value) else "\n")
        out.append(pad + "]")
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        items = list(value.items())
        for i, (key, item) in enumerate(items):
            out.append(pad + "  " + json.dumps(key, ensure_ascii=False) + ": ")
            _emit(item, indent + 1, out)
            out.append(",\n" if i + 1 < len(items) else "\n")
        out.append(pad + "}")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _payload_obj(ev: Evidence) -> dict:
    p = ev.payload
    if ev.kind == DOCUMENT:
        return {"uri": p.uri, "sha256": p.sha256, "description": p.description}
    if ev.kind == METRIC:
        return {
            "dataset": p.dataset_ref,
            "metric": p.metric_id,
            "group": p.group_column,
            "condition": p.condition_column,
            "comparator": p.comparator,
            "threshold": p.threshold,
        }
    return {
        "description": p.description,
        "date": p.date.isoformat(),
        "participants": list(p.participants),
    }


def case_to_obj(case: AssuranceCase) -> dict:
    """Plain-dict form of the canonical document (fixed key order)."""
    claims = []
    for cid in case.preorder():
        claim = case.claims[cid]
        claims.append(
            {
                "id": claim.id,
                "statement": claim.statement,
                "kind": claim.kind,
                "stage": claim.stage,
                "considers": sorted(claim.considers),
                "children": list(claim.children),
                "evidence": sorted(claim.evidence_refs),
            }
        )
    evidence = [
        {"id": ev.id, "title": ev.title, "kind": ev.kind, "payload": _payload_obj(ev)}
        for ev in case.evidence.values()
    ]
    waivers = [
        {"consideration": w.consideration_id, "rationale": w.rationale}
        for w in case.waivers
    ]
    return {
        "schema": SCHEMA_ID,
        "title": case.title,
        "revision": case.revision,
        "root": case.root_id,
        "claims": claims,
        "evidence": evidence,
        "waivers": waivers,
    }


def to_canonical_json(case: AssuranceCase) -> bytes:
    out: list[str] = []
    _emit(case_to_obj(case), 0, out)
    out.append("\n")
    return "".join(out).encode("utf-8")


# -- decoding ---------------------------------------------------------------


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise DecodeError(path, message)


def _get(obj: dict, key: str, path: str):
    _expect(key in obj, f"{path}.{key}", "missing key")
    return obj[key]


def _req_str(obj: dict, key: str, path: str, allow_empty: bool = False) -> str:
    value = _get(obj, key, path)
    _expect(isinstance(value, str), f"{path}.{key}", "expected string")
    if not allow_empty:
        _expect(bool(value), f"{path}.{key}", "must be non-empty")
    return value


def _node_id(value, path: str) -> str:
    _expect(isinstance(value, str) and bool(_NODE_ID_RE.match(value)), path, "invalid node id")
    return value


_CLAIM_KEYS = {"id", "statement", "kind", "stage", "considers", "children", "evidence"}
_EVIDENCE_KEYS = {"id", "title", "kind", "payload"}
_TOP_KEYS = {"schema", "title", "revision", "root", "claims", "evidence", "waivers"}


def _decode_claim(obj, path: str) -> Claim:
    _expect(isinstance(obj, dict), path, "expected object")
    extra = set(obj) - _CLAIM_KEYS
    _expect(not extra, path, f"unknown keys {sorted(extra)}")
    cid = _node_id(_get(obj, "id", path), f"{path}.id")
    kind = _req_str(obj, "kind", path)
    _expect(kind in (GOAL, INTERMEDIATE), f"{path}.kind", "expected 'goal' or 'intermediate'")
    stage = _get(obj, "stage", path)
    _expect(stage is None or isinstance(stage, str), f"{path}.stage", "expected string or null")
    considers = _get(obj, "considers", path)
    _expect(isinstance(considers, list), f"{path}.considers", "expected array")
    for i, tag in enumerate(considers):
        _expect(isinstance(tag, str), f"{path}.considers[{i}]", "expected string")
    children = _get(obj, "children", path)
    _expect(isinstance(children, list), f"{path}.children", "expected array")
    children = [_node_id(c, f"{path}.children[{i}]") for i, c in enumerate(children)]
    refs = _get(obj, "evidence", path)
    _expect(isinstance(refs, list), f"{path}.evidence", "expected array")
    refs = [_node_id(r, f"{path}.evidence[{i}]") for i, r in enumerate(refs)]
    try:
        return Claim(
            id=cid,
            statement=_req_str(obj, "statement", path),
            kind=kind,
            stage=stage,
            considers=frozenset(considers),
            children=tuple(children),
            evidence_refs=frozenset(refs),
        )
    except ConstructionError as exc:
        raise DecodeError(path, str(exc)) from None


def _decode_payload(kind: str, obj, path: str):
    _expect(isinstance(obj, dict), path, "expected object")
    try:
        if kind == DOCUMENT:
            extra = set(obj) - {"uri", "sha256", "description"}
            _expect(not extra, path, f"unknown keys {sorted(extra)}")
            sha = _get(obj, "sha256", path)
            _expect(sha is None or isinstance(sha, str), f"{path}.sha256", "expected string or null")
            return DocumentPayload(
                uri=_req_str(obj, "uri", path),
                sha256=sha,
                description=_req_str(obj, "description", path, allow_empty=True),
            )
        if kind == METRIC:
            extra = set(obj) - {"dataset", "metric", "group", "condition", "comparator", "threshold"}
            _expect(not extra, path, f"unknown keys {sorted(extra)}")
            cond = _get(obj, "condition", path)
            _expect(cond is None or isinstance(cond, str), f"{path}.condition", "expected string or null")
            threshold = _get(obj, "threshold", path)
            _expect(
                isinstance(threshold, (int, float)) and not isinstance(threshold, bool),
                f"{path}.threshold",
                "expected number",
            )
            return MetricPayload(
                dataset_ref=_req_str(obj, "dataset", path),
                metric_id=_req_str(obj, "metric", path),
                group_column=_req_str(obj, "group", path),
                condition_column=cond,
                comparator=_req_str(obj, "comparator", path),
                threshold=float(threshold),
            )
        extra = set(obj) - {"description", "date", "participants"}
        _expect(not extra, path, f"unknown keys {sorted(extra)}")
        raw_date = _req_str(obj, "date", path)
        try:
            parsed = _date.fromisoformat(raw_date)
        except ValueError:
            raise DecodeError(f"{path}.date", "expected ISO-8601 date") from None
        people = _get(obj, "participants", path)
        _expect(isinstance(people, list), f"{path}.participants", "expected array")
        for i, person in enumerate(people):
            _expect(isinstance(person, str), f"{path}.participants[{i}]", "expected string")
        return RecordPayload(
            description=_req_str(obj, "description", path, allow_empty=True),
            date=parsed,
            participants=tuple(people),
        )
    except ConstructionError as exc:
        raise DecodeError(path, str(exc)) from None


def _check_tree(root_id: str, claims: dict[str, Claim]):
    parent: dict[str, str] = {}
    for cid, claim in claims.items():
        for child in claim.children:
            if child not in claims:
                raise DecodeError(
                    "$.claims", f"claim {cid!r} references unknown child {child!r}"
                )
            if child in parent or child == root_id:
                raise DecodeError("$.claims", "claims must form a tree")
            parent[child] = cid
    reached = set()
    stack = [root_id]
    while stack:
        cid = stack.pop()
        if cid in reached:
            raise DecodeError("$.claims", "claims must form a tree")
        reached.add(cid)
        stack.extend(claims[cid].children)
    if reached != set(claims):
        raise DecodeError("$.claims", "claims must form a tree")


def from_canonical_json(data: bytes) -> AssuranceCase:
    try:
        text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
        obj = json.loads(text)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DecodeError("$", f"invalid JSON: {exc}") from None
    _expect(isinstance(obj, dict), "$", "expected object")
    extra = set(obj) - _TOP_KEYS
    _expect(not extra, "$", f"unknown keys {sorted(extra)}")
    _expect(_get(obj, "schema", "$") == SCHEMA_ID, "$.schema", f"expected {SCHEMA_ID!r}")
    title = _req_str(obj, "title", "$")
    revision = _get(obj, "revision", "$")
    _expect(
        isinstance(revision, int) and not isinstance(revision, bool) and revision >= 0,
        "$.revision",
        "expected non-negative integer",
    )
    root_id = _node_id(_get(obj, "root", "$"), "$.root")

    raw_claims = _get(obj, "claims", "$")
    _expect(isinstance(raw_claims, list) and raw_claims, "$.claims", "expected non-empty array")
    claims: dict[str, Claim] = {}
    for i, raw in enumerate(raw_claims):
        claim = _decode_claim(raw, f"$.claims[{i}]")
        _expect(claim.id not in claims, f"$.claims[{i}].id", f"duplicate claim id {claim.id!r}")
        claims[claim.id] = claim
    _expect(root_id in claims, "$.root", f"root claim {root_id!r} not declared")
    _check_tree(root_id, claims)

    raw_evidence = _get(obj, "evidence", "$")
    _expect(isinstance(raw_evidence, list), "$.evidence", "expected array")
    evidence: dict[str, Evidence] = {}
    for i, raw in enumerate(raw_evidence):
        path = f"$.evidence[{i}]"
        _expect(isinstance(raw, dict), path, "expected object")
        extra = set(raw) - _EVIDENCE_KEYS
        _expect(not extra, path, f"unknown keys {sorted(extra)}")
        eid = _node_id(_get(raw, "id", path), f"{path}.id")
        _expect(eid not in evidence, f"{path}.id", f"duplicate evidence id {eid!r}")
        kind = _req_str(raw, "kind", path)
        _expect(kind in (DOCUMENT, METRIC, RECORD), f"{path}.kind", "unknown evidence kind")
        payload = _decode_payload(kind, _get(raw, "payload", path), f"{path}.payload")
        try:
            evidence[eid] = Evidence(
                id=eid, title=_req_str(raw, "title", path), kind=kind, payload=payload
            )
        except ConstructionError as exc:
            raise DecodeError(path, str(exc)) from None

    raw_waivers = _get(obj, "waivers", "$")
    _expect(isinstance(raw_waivers, list), "$.waivers", "expected array")
    waivers = []
    seen_waived: set[str] = set()
    for i, raw in enumerate(raw_waivers):
        path = f"$.waivers[{i}]"
        _expect(isinstance(raw, dict), path, "expected object")
        extra = set(raw) - {"consideration", "rationale"}
        _expect(not extra, path, f"unknown keys {sorted(extra)}")
        consideration = _req_str(raw, "consideration", path)
        _expect(consideration not in seen_waived, path, f"duplicate waiver for {consideration!r}")
        seen_waived.add(consideration)
        try:
            waivers.append(
                Waiver(consideration_id=consideration, rationale=_req_str(raw, "rationale", path))
            )
        except ConstructionError as exc:
            raise DecodeError(path, str(exc)) from None

    # Re-key claim insertion to pre-order so serialization is stable even
    # if the input listed claims in another order.
    case = AssuranceCase(
        title=title,
        root_id=root_id,
        claims=claims,
        evidence=evidence,
        waivers=tuple(waivers),
        revision=revision,
    )
    ordered = {cid: claims[cid] for cid in case.preorder()}
    return replace(case, claims=ordered)
