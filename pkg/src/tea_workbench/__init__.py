"""tea-workbench: author, validate, and evaluate structured assurance
cases for AI-enabled systems, with machine-checkable fairness evidence.
"""

from .case_model import (
    AssuranceCase,
    Claim,
    DocumentPayload,
    Evidence,
    MetricPayload,
    RecordPayload,
    Waiver,
    add_claim,
    add_evidence,
    add_waiver,
    from_canonical_json,
    link_evidence,
    new_case,
    remove_subtree,
    to_canonical_json,
)
from .diagnostics import Diagnostic, SourceSpan
from .dsl import ParseOutcome, format_case, format_file, parse, parse_file
from .errors import (
    ConflictError,
    ConstructionError,
    DecodeError,
    DuplicateIdError,
    EmptyTableError,
    FileError,
    ForbiddenError,
    NotFoundError,
    PreconditionError,
    SchemaError,
    TeaError,
)
from .evaluator import (
    ClaimStatus,
    EvaluationResult,
    EvidenceStores,
    EvidenceVerdict,
    evaluate_case,
    evaluate_evidence,
    propagate,
)
from .fairness_map import Consideration, MapCoverage, consideration_registry, map_coverage
from .lifecycle import Stage, StageCoverage, stage_coverage, stage_registry
from .metrics import (
    GroupConfusion,
    MetricResult,
    PredictionTable,
    cohens_kappa,
    conditional_group_rate_difference,
    confusion_by_group,
    evaluate_metric_evidence,
    group_rate_difference,
    ingest_table,
    overall_accuracy,
)
from .reports import export_dot, render_report
from .validator import validate

__version__ = "0.1.0"

__all__ = [
    "AssuranceCase",
    "Claim",
    "ClaimStatus",
    "ConflictError",
    "Consideration",
    "ConstructionError",
    "DecodeError",
    "Diagnostic",
    "DocumentPayload",
    "DuplicateIdError",
    "EmptyTableError",
    "EvaluationResult",
    "Evidence",
    "EvidenceStores",
    "EvidenceVerdict",
    "FileError",
    "ForbiddenError",
    "GroupConfusion",
    "MapCoverage",
    "MetricPayload",
    "MetricResult",
    "NotFoundError",
    "ParseOutcome",
    "PreconditionError",
    "PredictionTable",
    "RecordPayload",
    "SchemaError",
    "SourceSpan",
    "Stage",
    "StageCoverage",
    "TeaError",
    "Waiver",
    "add_claim",
    "add_evidence",
    "add_waiver",
    "cohens_kappa",
    "conditional_group_rate_difference",
    "confusion_by_group",
    "consideration_registry",
    "evaluate_case",
    "evaluate_evidence",
    "evaluate_metric_evidence",
    "export_dot",
    "format_case",
    "format_file",
    "from_canonical_json",
    "group_rate_difference",
    "ingest_table",
    "link_evidence",
    "map_coverage",
    "new_case",
    "overall_accuracy",
    "parse",
    "parse_file",
    "propagate",
    "remove_subtree",
    "render_report",
    "stage_coverage",
    "stage_registry",
    "to_canonical_json",
    "validate",
]
