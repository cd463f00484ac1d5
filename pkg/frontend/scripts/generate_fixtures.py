"""Record real engine responses as TypeScript fixtures for the UI tests.

Keeps the stubbed API in frontend/tests aligned with the actual wire
format: every body below is produced by the same code paths the service
serves. Re-run after engine changes:

    python3 frontend/scripts/generate_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from tea_workbench import (
    EvidenceStores,
    evaluate_case,
    format_case,
    map_coverage,
    parse_file,
    stage_coverage,
    stage_registry,
    validate,
)
from tea_workbench.fairness_map import consideration_registry
from tea_workbench.case_model import case_to_obj
from tea_workbench.dsl import parse
from tea_workbench.reports import (
    considerations_to_json,
    coverage_to_json,
    diagnostics_to_json,
    evaluation_to_json,
    stages_to_json,
)

ROOT = Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "tests" / "fixtures"
OUT = ROOT / "frontend" / "tests" / "fixtures.ts"


def ts_const(name: str, value) -> str:
    return f"export const {name} = {json.dumps(value, indent=2, ensure_ascii=False)} as const;\n"


def main():
    outcome = parse_file(FIXTURES / "fig1.tea")
    assert outcome.case is not None, outcome.diagnostics
    case = outcome.case
    stores = EvidenceStores(
        evidence_dir=FIXTURES / "ev", datasets_dir=FIXTURES / "ev" / "datasets"
    )

    # the same case with one more considers tag (C3 -> FC-PD-01), as the
    # document the UI would PUT and the coverage it would then fetch
    tagged_text = format_case(case).replace(
        'claim C3 "Chosen statistical fairness measures are satisfied"',
        'claim C3 "Chosen statistical fairness measures are satisfied" considers(FC-PD-01)',
    )
    tagged = parse(tagged_text).case
    assert tagged is not None

    parts = [
        "// GENERATED by frontend/scripts/generate_fixtures.py — do not edit.\n",
        "// Bodies are verbatim engine outputs for the bundled example case.\n\n",
        ts_const("fig1Doc", case_to_obj(case)),
        ts_const("validateBody", diagnostics_to_json(validate(case))),
        ts_const(
            "coverageBody", coverage_to_json(stage_coverage(case), map_coverage(case))
        ),
        ts_const(
            "coverageAfterTagBody",
            coverage_to_json(stage_coverage(tagged), map_coverage(tagged)),
        ),
        ts_const("evaluateBody", evaluation_to_json(case, evaluate_case(case, stores))),
        ts_const("stagesBody", stages_to_json(stage_registry())),
        ts_const("considerationsBody", considerations_to_json(consideration_registry())),
        ts_const("dslText", format_case(case)),
    ]
    OUT.write_text("".join(parts), encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
