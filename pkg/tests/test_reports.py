"""DOT export, markdown report, and the shared JSON renderings."""

import json

from tea_workbench import (
    EvidenceStores,
    add_claim,
    add_waiver,
    evaluate_case,
    export_dot,
    map_coverage,
    new_case,
    stage_coverage,
    validate,
)
from tea_workbench.fairness_map import consideration_registry
from tea_workbench.reports import (
    coverage_to_json,
    diagnostics_to_json,
    evaluation_to_json,
    render_report,
)


class TestDot:
    def test_fig1_counts(self, fig1_case):
        dot = export_dot(fig1_case)
        assert dot.count("shape=box") == 7
        assert dot.count("shape=ellipse") == 4
        assert dot.count('[label="decomposes"]') == 6
        assert dot.count('[label="by"]') == 4

    def test_single_goal_case(self):
        dot = export_dot(new_case("t", "s"))
        assert dot.count("shape=box") == 1
        assert "->" not in dot

    def test_deterministic(self, fig1_case):
        assert export_dot(fig1_case) == export_dot(fig1_case)

    def test_status_classes(self, fig1_case, ev_dir):
        stores = EvidenceStores(evidence_dir=ev_dir, datasets_dir=ev_dir / "datasets")
        evaluation = evaluate_case(fig1_case, stores)
        dot = export_dot(fig1_case, evaluation)
        assert dot.count('class="supported"') == 7
        assert 'class="pass"' in dot

    def test_escaping(self):
        case = new_case("t", 'say "hi"\nthen leave')
        dot = export_dot(case)
        assert '\\"hi\\"' in dot
        assert "\\n" in dot


def full_report(case, ev_dir=None):
    diagnostics = validate(case)
    evaluation = None
    if not any(d.is_error for d in diagnostics):
        stores = EvidenceStores(
            evidence_dir=ev_dir, datasets_dir=(ev_dir / "datasets") if ev_dir else None
        )
        evaluation = evaluate_case(case, stores)
    return render_report(
        case,
        diagnostics,
        stage_coverage(case),
        map_coverage(case),
        evaluation,
        consideration_registry(),
    )


class TestMarkdown:
    def test_sections_in_order(self, fig1_case, ev_dir):
        text = full_report(fig1_case, ev_dir)
        positions = [
            text.index("## Summary"),
            text.index("## Diagnostics"),
            text.index("## Lifecycle Coverage"),
            text.index("## Considerations"),
            text.index("## Evidence Verdicts"),
        ]
        assert positions == sorted(positions)

    def test_fully_covered_all_pass(self, ev_dir):
        from tea_workbench.lifecycle import STAGE_IDS

        case = new_case("t", "s", root_id="C0")
        for i, sid in enumerate(STAGE_IDS):
            case = add_claim(case, "C0", f"C{i + 1}", f"claim {i}", stage=sid)
        # ground every leaf with a record so evaluation passes
        import datetime

        from tea_workbench import Evidence, RecordPayload, add_evidence, link_evidence

        case = add_evidence(
            case,
            Evidence(
                id="E1",
                title="log",
                kind="record",
                payload=RecordPayload(description="", date=datetime.date(2024, 1, 1)),
            ),
        )
        for i in range(12):
            case = link_evidence(case, f"C{i + 1}", "E1")
        text = full_report(case)
        assert "Uncovered stages: none" in text
        assert "**supported** (attested evidence only)" in text

    def test_waived_row_shows_rationale(self, fig1_case):
        case = add_waiver(fig1_case, "FC-SD-14", "supplier owns the update process")
        text = full_report(case)
        row = next(line for line in text.splitlines() if line.startswith("| FC-SD-14"))
        assert "waived" in row
        assert "supplier owns the update process" in row

    def test_failing_metric_named(self, fig1_case, ev_dir, tmp_path):
        # point the metric evidence at a dataset that violates its threshold
        import shutil

        datasets = tmp_path / "datasets"
        datasets.mkdir()
        rows = ["group,y_true,y_pred"] + ["A,1,1"] * 9 + ["A,0,0"] + ["B,1,0"] * 10
        (datasets / "outcomes.csv").write_text("\n".join(rows) + "\n")
        shutil.copytree(ev_dir / "reports", tmp_path / "reports")
        stores = EvidenceStores(evidence_dir=tmp_path, datasets_dir=datasets)
        evaluation = evaluate_case(fig1_case, stores)
        text = render_report(
            fig1_case,
            validate(fig1_case),
            stage_coverage(fig1_case),
            map_coverage(fig1_case),
            evaluation,
            consideration_registry(),
        )
        assert "**unsupported**" in text
        assert "| E3 | metric | fail |" in text


class TestJsonShapes:
    def test_diagnostics_shape(self, fig1_case):
        case = add_claim(fig1_case, "C1", "CX", "leafless")
        body = diagnostics_to_json(validate(case))
        assert body and set(body[0]) == {"code", "severity", "message", "node", "line", "column"}

    def test_coverage_shape(self, fig1_case):
        body = coverage_to_json(stage_coverage(fig1_case), map_coverage(fig1_case))
        assert set(body) == {"stages", "considerations"}
        assert len(body["stages"]["perStage"]) == 12
        assert len(body["considerations"]["perConsideration"]) == 14
        json.dumps(body)  # serializable

    def test_evaluation_shape(self, fig1_case, ev_dir):
        stores = EvidenceStores(evidence_dir=ev_dir, datasets_dir=ev_dir / "datasets")
        body = evaluation_to_json(fig1_case, evaluate_case(fig1_case, stores))
        assert body["root"] == "supported"
        assert [c["id"] for c in body["claims"]] == ["C1", "C2", "C5", "C6", "C3", "C7", "C4"]
        assert {e["id"] for e in body["evidence"]} == {"E1", "E2", "E3", "E4"}
        e3 = next(e for e in body["evidence"] if e["id"] == "E3")
        assert e3["value"] is not None
        json.dumps(body)
