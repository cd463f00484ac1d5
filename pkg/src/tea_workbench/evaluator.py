"""Evidence verdicts and conjunctive claim-status propagation.

Every evidence node gets a verdict (pass / fail / indeterminate), then
statuses flow bottom-up through the claim tree: a claim's inputs are its
children's statuses plus the verdicts of its directly attached evidence.
Any failing input makes the claim unsupported; otherwise any open input
makes it undetermined; otherwise it is supported. Failure dominates
missing data, so a known violation always surfaces.

Record evidence always passes but is flagged *attested* (the engine
cannot audit a meeting log), and documents without a digest pass as
*unverified*. A supported claim whose entire subtree passed only on such
evidence carries ``attested_only`` so human-vouched support stays
visible in reports.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

from .case_model import DOCUMENT, METRIC, AssuranceCase, Evidence
from .errors import PreconditionError
from .metrics import FAIL, INDETERMINATE, PASS, MetricResult, evaluate_metric_evidence
from .validator import validate

SUPPORTED = "supported"
UNSUPPORTED = "unsupported"
UNDETERMINED = "undetermined"

_RANK = {SUPPORTED: 0, UNDETERMINED: 1, UNSUPPORTED: 2}


@dataclass(frozen=True)
class EvidenceVerdict:
    verdict: str  # pass | fail | indeterminate
    attested: bool = False
    unverified: bool = False
    notes: tuple[str, ...] = ()
    result: MetricResult | None = None

    @property
    def attested_only(self) -> bool:
        return self.verdict == PASS and (self.attested or self.unverified)


@dataclass(frozen=True)
class ClaimStatus:
    status: str  # supported | unsupported | undetermined
    attested_only: bool = False


@dataclass(frozen=True)
class EvaluationResult:
    evidence_verdicts: dict[str, EvidenceVerdict]
    claim_statuses: dict[str, ClaimStatus]
    root_status: ClaimStatus


@dataclass(frozen=True)
class EvidenceStores:
    """Read-only resolution roots for documents and datasets.

    Documents resolve relative to ``evidence_dir``; datasets live at
    ``datasets_dir/{ref}.csv``. Either root may be absent, in which case
    the corresponding evidence comes back indeterminate.
    """

    evidence_dir: Path | None = None
    datasets_dir: Path | None = None

    def load_dataset(self, ref: str) -> bytes | None:
        if self.datasets_dir is None or "/" in ref or "\\" in ref or ref in (".", ".."):
            return None
        path = self.datasets_dir / f"{ref}.csv"
        if not path.is_file():
            return None
        return path.read_bytes()

    def resolve_document(self, uri: str) -> Path | None:
        if self.evidence_dir is None:
            return None
        root = self.evidence_dir.resolve()
        path = (root / uri).resolve()
        # keep lookups inside the evidence root
        if root not in path.parents and path != root:
            return None
        return path if path.is_file() else None


def evaluate_evidence(ev: Evidence, stores: EvidenceStores | None) -> EvidenceVerdict:
    if ev.kind == METRIC:
        evaluation = evaluate_metric_evidence(ev, stores)
        return EvidenceVerdict(
            verdict=evaluation.verdict,
            notes=evaluation.result.notes,
            result=evaluation.result,
        )
    if ev.kind == DOCUMENT:
        path = stores.resolve_document(ev.payload.uri) if stores else None
        if path is None:
            return EvidenceVerdict(
                verdict=INDETERMINATE, notes=(f"document not found: {ev.payload.uri}",)
            )
        if ev.payload.sha256 is None:
            return EvidenceVerdict(
                verdict=PASS, unverified=True, notes=("document present, no digest to verify",)
            )
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        if digest == ev.payload.sha256:
            return EvidenceVerdict(verdict=PASS)
        return EvidenceVerdict(
            verdict=FAIL, notes=(f"digest mismatch for {ev.payload.uri}: got {digest}",)
        )
    # record: human-attested, engine takes it at its word but flags it
    return EvidenceVerdict(verdict=PASS, attested=True)


def propagate(case: AssuranceCase, verdicts: dict[str, EvidenceVerdict]) -> EvaluationResult:
    """Fold verdicts up the claim tree (pure; exposed for property tests
    and any caller that computes verdicts elsewhere)."""
    statuses: dict[str, ClaimStatus] = {}

    def status_of(claim_id: str) -> ClaimStatus:
        if claim_id in statuses:
            return statuses[claim_id]
        claim = case.claims[claim_id]
        worst = SUPPORTED
        attested_only = True
        for child in claim.children:
            child_status = status_of(child)
            if _RANK[child_status.status] > _RANK[worst]:
                worst = child_status.status
            attested_only = attested_only and child_status.attested_only
        for eid in sorted(claim.evidence_refs):
            verdict = verdicts[eid]
            v_status = {PASS: SUPPORTED, FAIL: UNSUPPORTED, INDETERMINATE: UNDETERMINED}[
                verdict.verdict
            ]
            if _RANK[v_status] > _RANK[worst]:
                worst = v_status
            attested_only = attested_only and verdict.attested_only
        result = ClaimStatus(
            status=worst, attested_only=attested_only if worst == SUPPORTED else False
        )
        statuses[claim_id] = result
        return result

    for cid in case.preorder():
        status_of(cid)
    return EvaluationResult(
        evidence_verdicts=verdicts,
        claim_statuses=statuses,
        root_status=statuses[case.root_id],
    )


def evaluate_case(case: AssuranceCase, stores: EvidenceStores | None) -> EvaluationResult:
    """Verdict every evidence node, then propagate claim statuses.

    The case must be structurally clean first: any error-severity finding
    blocks evaluation (warnings do not).
    """
    blocking = [d for d in validate(case) if d.is_error]
    if blocking:
        raise PreconditionError(
            f"case fails structural validation with {len(blocking)} error(s)", blocking
        )
    verdicts = {eid: evaluate_evidence(ev, stores) for eid, ev in case.evidence.items()}
    return propagate(case, verdicts)
