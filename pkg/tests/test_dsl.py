"""Parser totality, diagnostics, and format/parse round-trips."""

import random

import pytest
from hypothesis import given, settings

from strategies import cases
from tea_workbench import FileError, format_case, format_file, new_case, parse, parse_file
from tea_workbench.dsl import ParseOutcome

SPEC_EXAMPLE = (
    'case "Fair CDSS" { goal C1 "The AI-enabled CDSS is fair" '
    '{ claim C2 "No patient discrimination" { by E1; } } '
    'evidence E1 "Validation report" kind(document) { uri = "reports/val.md"; } }'
)


def errors_of(outcome, code=None):
    return [
        d for d in outcome.diagnostics
        if d.severity == "error" and (code is None or d.code == code)
    ]


class TestParse:
    def test_inline_example(self):
        outcome = parse(SPEC_EXAMPLE)
        assert outcome.case is not None, outcome.diagnostics
        case = outcome.case
        assert case.root_id == "C1"
        assert case.claims["C1"].children == ("C2",)
        assert case.claims["C2"].evidence_refs == {"E1"}
        assert case.evidence["E1"].payload.uri == "reports/val.md"

    def test_empty_input(self):
        outcome = parse("")
        assert outcome.case is None
        assert len(outcome.diagnostics) == 1
        diag = outcome.diagnostics[0]
        assert diag.code == "P-001"
        assert "expected 'case'" in diag.message
        assert (diag.span.line, diag.span.column) == (1, 1)

    def test_unresolved_reference_span(self):
        text = 'case "t" {\n  goal G1 "s" {\n    by E9;\n  }\n}\n'
        outcome = parse(text)
        assert outcome.case is None
        p010 = errors_of(outcome, "P-010")
        assert len(p010) == 1
        span = p010[0].span
        assert (span.line, span.column, span.length) == (3, 8, 2)

    def test_k_unresolved_references_yield_k_diagnostics(self):
        text = (
            'case "t" {\n'
            '  goal G1 "s" {\n'
            '    claim C2 "a" { by E1; }\n'
            '    claim C3 "b" { by E2; }\n'
            '    claim C4 "c" { by E3; }\n'
            "  }\n"
            "}\n"
        )
        outcome = parse(text)
        assert len(errors_of(outcome, "P-010")) == 3

    def test_goal_without_block_is_legal_syntax(self):
        outcome = parse('case "t" { goal G1 "s"; }')
        assert outcome.case is not None  # W3 is the validator's business

    def test_case_present_iff_no_errors(self):
        good = parse('case "t" { goal G1 "s"; }')
        assert good.case is not None and not errors_of(good)
        bad = parse('case "t" { goal G1 "s" { by EX; } }')
        assert bad.case is None and errors_of(bad)

    @pytest.mark.parametrize(
        "source,code",
        [
            ('case "t" { goal G1 "s" banana; }', "P-008"),
            ('case "t" { goal G1 "s"; evidence E1 "e" kind(blob) { uri = "x"; } }', "P-009"),
            ('case "t" { goal G1 "s"; evidence E1 "e" kind(document) { link = "x"; } }', "P-021"),
            ('case "t" { goal G1 "s"; evidence E1 "e" kind(document) { uri = "x"; uri = "y"; } }', "P-013"),
            ('case "t" { goal G1 "s"; evidence E1 "e" kind(document) { } }', "P-011"),
            ('case "t" { goal G1 "s" { claim C2 "a"; claim C2 "b"; } }', "P-007"),
            ('case "t" { goal G1 ""; }', "P-012"),
            ('case "t" { goal G1 "s" stage(a) stage(b); }', "P-013"),
            ('case "t" { claim C2 "a"; goal G1 "s"; }', "P-004"),
            ('case "t" { goal G1 "s"; goal G2 "x"; }', "P-006"),
            ('case "t" { goal G1 "s" @; }', "P-002"),
            ('case "t" { goal G1 "s\n; }', "P-003"),
        ],
    )
    def test_diagnostic_codes(self, source, code):
        outcome = parse(source)
        assert outcome.case is None
        assert errors_of(outcome, code), outcome.diagnostics

    def test_metric_payload_parses(self):
        text = (
            'case "t" { goal G1 "s" { by E1; } '
            'evidence E1 "m" kind(metric) { dataset = "d"; metric = "cohens_kappa"; '
            'group = "g"; condition = "ward"; comparator = ">="; threshold = -0.5; } }'
        )
        outcome = parse(text)
        assert outcome.case is not None, outcome.diagnostics
        payload = outcome.case.evidence["E1"].payload
        assert payload.comparator == "gte"
        assert payload.threshold == -0.5
        assert payload.condition_column == "ward"

    @pytest.mark.parametrize(
        "body",
        [
            'dataset = "d"; metric = "nope"; group = "g"; comparator = ">="; threshold = 1;',
            'dataset = "d"; metric = "cohens_kappa"; group = "g"; comparator = "=="; threshold = 1;',
            'dataset = "d"; metric = "cohens_kappa"; group = "g"; comparator = ">="; threshold = "x";',
        ],
    )
    def test_bad_metric_payloads(self, body):
        outcome = parse(
            'case "t" { goal G1 "s" { by E1; } evidence E1 "m" kind(metric) { %s } }' % body
        )
        assert outcome.case is None
        assert errors_of(outcome, "P-011")

    def test_record_payload_with_participants(self):
        text = (
            'case "t" { goal G1 "s" { by E1; } '
            'evidence E1 "r" kind(record) { date = "2024-05-01"; '
            'participant = "a"; participant = "b"; } }'
        )
        outcome = parse(text)
        assert outcome.case is not None
        assert outcome.case.evidence["E1"].payload.participants == ("a", "b")

    def test_bad_record_date(self):
        outcome = parse(
            'case "t" { goal G1 "s" { by E1; } '
            'evidence E1 "r" kind(record) { date = "not-a-date"; } }'
        )
        assert errors_of(outcome, "P-011")

    def test_comments_and_whitespace(self):
        text = 'case "t" { // top\n  goal G1 "s"; // tail\n}\n'
        assert parse(text).case is not None

    def test_waiver_parses(self):
        text = 'case "t" { goal G1 "s"; waive FC-SD-14 "third party handles updates"; }'
        outcome = parse(text)
        assert outcome.case.waivers[0].consideration_id == "FC-SD-14"

    def test_string_escapes(self):
        text = 'case "t" { goal G1 "line\\nbreak \\"quoted\\" back\\\\slash \\u00e9"; }'
        outcome = parse(text)
        assert outcome.case.claims["G1"].statement == 'line\nbreak "quoted" back\\slash é'

    def test_recovery_continues_after_bad_evidence(self):
        text = (
            'case "t" {\n  goal G1 "s" { by E1; }\n'
            '  evidence E0 "broken" kind(document) uri = "x"; }\n'
            '  evidence E1 "fine" kind(document) { uri = "x"; }\n}\n'
        )
        outcome = parse(text)
        # E1 was still declared, so no P-010 on top of the syntax error
        assert not errors_of(outcome, "P-010")
        assert errors_of(outcome, "P-004")


class TestFormat:
    def test_minimal_canonical_form(self):
        assert format_case(new_case("x", "y")) == 'case "x" {\n  goal G1 "y";\n}\n'

    def test_format_deterministic(self, fig1_case):
        assert format_case(fig1_case) == format_case(fig1_case)

    def test_fig1_round_trip_structural(self, fig1_case):
        outcome = parse(format_case(fig1_case))
        assert outcome.case == fig1_case

    def test_format_idempotent(self, fig1_case):
        once = format_case(fig1_case)
        again = format_case(parse(once).case)
        assert once == again

    def test_canonical_file_round_trips_byte_identical(self, fig1_path):
        original = fig1_path.read_text(encoding="utf-8")
        assert format_case(parse(original).case) == original

    @given(cases())
    @settings(max_examples=80, deadline=None)
    def test_round_trip_property(self, case):
        outcome = parse(format_case(case))
        assert outcome.case == case, outcome.diagnostics


class TestFiles:
    def test_missing_file(self, tmp_path):
        with pytest.raises(FileError):
            parse_file(tmp_path / "nope.tea")

    def test_bom_stripped(self, tmp_path, fig1_case):
        path = tmp_path / "bom.tea"
        path.write_bytes(b"\xef\xbb\xbf" + format_case(fig1_case).encode())
        assert parse_file(path).case == fig1_case

    def test_crlf_accepted(self, tmp_path, fig1_case):
        path = tmp_path / "crlf.tea"
        path.write_bytes(format_case(fig1_case).replace("\n", "\r\n").encode())
        assert parse_file(path).case == fig1_case

    def test_format_file_writes_lf(self, tmp_path, fig1_case):
        path = tmp_path / "out.tea"
        format_file(fig1_case, path)
        data = path.read_bytes()
        assert b"\r" not in data
        assert data.decode() == format_case(fig1_case)


class TestTotality:
    def test_fuzz_never_raises(self):
        rng = random.Random(1234)
        vocab = [
            "case", "goal", "claim", "by", "evidence", "waive", "kind", "stage",
            "considers", "{", "}", "(", ")", ";", ",", "=", '"', "\\", "//",
            "abc", "0.5", "-", "\n", " ", "\t", "é", "\x00", "﻿",
        ]
        for _ in range(500):
            text = "".join(rng.choice(vocab) for _ in range(rng.randint(0, 60)))
            outcome = parse(text)
            assert isinstance(outcome, ParseOutcome)
            assert (outcome.case is None) == any(d.is_error for d in outcome.diagnostics)

    def test_spans_within_bounds(self):
        rng = random.Random(99)
        for _ in range(200):
            text = "".join(
                rng.choice('case goal " { } ; ( ) x\n') for _ in range(rng.randint(0, 50))
            )
            outcome = parse(text)
            lines = text.split("\n")
            for diag in outcome.diagnostics:
                if diag.span is None:
                    continue
                assert 1 <= diag.span.line <= len(lines)
                assert diag.span.column <= len(lines[diag.span.line - 1]) + 1
