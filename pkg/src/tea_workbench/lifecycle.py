"""Fixed 12-stage lifecycle registry and per-stage claim coverage.

Three phases (project design, model development, system deployment),
four stages each. The registry is immutable; coverage is a report, not
a validation rule — the CLI's ``--strict`` flag is what turns gaps into
failures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .case_model import AssuranceCase

PROJECT_DESIGN = "project_design"
MODEL_DEVELOPMENT = "model_development"
SYSTEM_DEPLOYMENT = "system_deployment"


@dataclass(frozen=True)
class Stage:
    id: str
    name: str
    phase: str
    ordinal: int  # 1..4 within the phase


_STAGES = (
    Stage("project_planning", "Project Planning", PROJECT_DESIGN, 1),
    Stage("problem_formulation", "Problem Formulation", PROJECT_DESIGN, 2),
    Stage("data_extraction_procurement", "Data Extraction or Procurement", PROJECT_DESIGN, 3),
    Stage("data_analysis", "Data Analysis", PROJECT_DESIGN, 4),
    Stage(
        "preprocessing_feature_engineering",
        "Preprocessing and Feature Engineering",
        MODEL_DEVELOPMENT,
        1,
    ),
    Stage("model_selection_training", "Model Selection and Training", MODEL_DEVELOPMENT, 2),
    Stage("model_testing_validation", "Model Testing and Validation", MODEL_DEVELOPMENT, 3),
    Stage("model_documentation", "Model Documentation", MODEL_DEVELOPMENT, 4),
    Stage("system_implementation", "System Implementation", SYSTEM_DEPLOYMENT, 1),
    Stage("user_training", "User Training", SYSTEM_DEPLOYMENT, 2),
    Stage("system_use_monitoring", "System Use and Monitoring", SYSTEM_DEPLOYMENT, 3),
    Stage(
        "model_updating_deprovisioning",
        "Model Updating or Deprovisioning",
        SYSTEM_DEPLOYMENT,
        4,
    ),
)

STAGE_IDS = tuple(s.id for s in _STAGES)


def stage_registry() -> list[Stage]:
    """The 12 stages in phase order, ordinals 1-4 within each phase."""
    return list(_STAGES)


def is_stage_id(token: str) -> bool:
    return token in STAGE_IDS


@dataclass(frozen=True)
class StageCoverage:
    per_stage: dict[str, int]
    uncovered: tuple[str, ...]


def stage_coverage(case: AssuranceCase) -> StageCoverage:
    """Count stage-tagged claims per stage; untagged claims do not count."""
    counts = {sid: 0 for sid in STAGE_IDS}
    for claim in case.claims.values():
        if claim.stage in counts:
            counts[claim.stage] += 1
    uncovered = tuple(sid for sid in STAGE_IDS if counts[sid] == 0)
    return StageCoverage(per_stage=counts, uncovered=uncovered)
