"""Rule table W1-W8: fixtures per rule plus a brute-force soundness check."""

from dataclasses import replace

import pytest
from hypothesis import given, settings

from strategies import cases
from tea_workbench import add_claim, add_evidence, link_evidence, new_case, validate
from tea_workbench.case_model import AssuranceCase, Claim
from tea_workbench.diagnostics import ERROR


def codes(diags):
    return [d.code for d in diags]


def errors(diags):
    return [d for d in diags if d.severity == ERROR]


def doc(eid):
    from tea_workbench import DocumentPayload, Evidence

    return Evidence(
        id=eid, title=f"doc {eid}", kind="document", payload=DocumentPayload(uri=f"{eid}.md")
    )


class TestRules:
    def test_fig1_is_clean(self, fig1_case):
        assert validate(fig1_case) == []

    def test_unlinked_evidence_w3_w4(self, fig1_case):
        c4 = fig1_case.claims["C4"]
        claims = dict(fig1_case.claims)
        claims["C4"] = replace(c4, evidence_refs=frozenset())
        broken = replace(fig1_case, claims=claims)
        diags = validate(broken)
        assert [(d.code, d.severity, d.node_ref) for d in diags] == [
            ("W3", "error", "C4"),
            ("W4", "warning", "E4"),
        ]

    def test_unknown_stage_w7(self):
        case = new_case("t", "s", root_id="C1")
        case = add_claim(case, "C1", "C2", "a", stage="banana")
        diags = [d for d in validate(case) if d.code == "W7"]
        assert len(diags) == 1
        assert diags[0].node_ref == "C2"

    def test_unknown_consideration_w7(self):
        case = new_case("t", "s", root_id="C1")
        case = add_claim(case, "C1", "C2", "a", considers=["FC-XX-99"])
        assert any(d.code == "W7" and d.node_ref == "C2" for d in validate(case))

    def test_goal_not_root_w1(self):
        case = new_case("t", "s", root_id="C1")
        case = add_claim(case, "C1", "C2", "a")
        claims = dict(case.claims)
        claims["C2"] = replace(claims["C2"], kind="goal")
        assert "W1" in codes(validate(replace(case, claims=claims)))

    def test_root_not_goal_w1(self):
        case = new_case("t", "s", root_id="C1")
        claims = {"C1": replace(case.claims["C1"], kind="intermediate")}
        assert "W1" in codes(validate(replace(case, claims=claims)))

    def test_multi_parent_w2(self):
        case = new_case("t", "s", root_id="C1")
        case = add_claim(case, "C1", "C2", "a")
        case = add_claim(case, "C1", "C3", "b")
        claims = dict(case.claims)
        claims["C3"] = replace(claims["C3"], children=("C2",))
        assert "W2" in codes(validate(replace(case, claims=claims)))

    def test_unknown_child_w2(self):
        case = new_case("t", "s", root_id="C1")
        claims = {"C1": replace(case.claims["C1"], children=("ZZ",))}
        assert "W2" in codes(validate(replace(case, claims=claims)))

    def test_unreachable_claim_w2(self):
        case = new_case("t", "s", root_id="C1")
        orphan = Claim(id="CX", statement="floating")
        claims = dict(case.claims)
        claims["CX"] = orphan
        diags = validate(replace(case, claims=claims))
        assert any(d.code == "W2" and d.node_ref == "CX" for d in diags)

    def test_dangling_reference_w5(self):
        case = new_case("t", "s", root_id="C1")
        claims = {"C1": replace(case.claims["C1"], evidence_refs=frozenset({"E9"}))}
        diags = validate(replace(case, claims=claims))
        assert any(d.code == "W5" for d in diags)
        assert not any(d.code == "W3" for d in diags)  # the leaf does carry a ref

    def test_key_id_mismatch_w6(self):
        case = new_case("t", "s", root_id="C1")
        claims = dict(case.claims)
        claims["CX"] = Claim(id="CY", statement="mislabeled")
        diags = validate(replace(case, claims=claims))
        assert any(d.code == "W6" for d in diags)

    def test_duplicate_statement_w8(self):
        case = new_case("t", "same words", root_id="C1")
        case = add_claim(case, "C1", "C2", "same words")
        diags = validate(case)
        w8 = [d for d in diags if d.code == "W8"]
        assert len(w8) == 1
        assert w8[0].node_ref == "C2"  # later claim flagged, first kept
        assert w8[0].severity == "warning"

    def test_intermediate_with_direct_evidence_allowed(self, fig1_case):
        case = add_evidence(fig1_case, doc("EX"))
        case = link_evidence(case, "C2", "EX")  # C2 has children AND evidence
        assert errors(validate(case)) == []


class TestBehaviour:
    def test_sorted_output(self, fig1_case):
        c4 = fig1_case.claims["C4"]
        claims = dict(fig1_case.claims)
        claims["C4"] = replace(c4, evidence_refs=frozenset())
        claims["C7"] = replace(claims["C7"], stage="banana")
        broken = replace(fig1_case, claims=claims)
        diags = validate(broken)
        keys = [(d.severity, d.code, d.node_ref or "") for d in diags]
        assert keys == sorted(keys)

    def test_deterministic(self, fig1_case):
        assert validate(fig1_case) == validate(fig1_case)

    def test_linking_evidence_monotone(self):
        case = new_case("t", "s", root_id="C1")
        case = add_claim(case, "C1", "C2", "a")
        before = validate(case)
        assert any(d.code == "W3" for d in before)
        case = add_evidence(case, doc("E1"))
        case = link_evidence(case, "C2", "E1")
        after = validate(case)
        assert not any(d.code == "W3" for d in after)
        assert not errors(after)

    @given(cases())
    @settings(max_examples=60, deadline=None)
    def test_soundness_against_brute_rescan(self, case):
        diags = validate(case)
        if errors(diags):
            return
        # re-check every error rule by direct scans
        goals = [c for c in case.claims.values() if c.kind == "goal"]
        assert len(goals) == 1 and goals[0].id == case.root_id  # W1
        parents = {}
        for claim in case.claims.values():
            for child in claim.children:
                assert child in case.claims  # W2
                assert child not in parents
                parents[child] = claim.id
        assert set(parents) == set(case.claims) - {case.root_id}  # W2 connectivity
        for claim in case.claims.values():
            if not claim.children:
                assert claim.evidence_refs  # W3
            for eid in claim.evidence_refs:
                assert eid in case.evidence  # W5
        for key, claim in case.claims.items():
            assert key == claim.id  # W6
        for key, ev in case.evidence.items():
            assert key == ev.id  # W6
