"""Parser and pretty-printer for the `.tea` authoring format.

Grammar (EBNF; `//` starts a line comment):

    file     := "case" STRING "{" goal evidence* waiver* "}"
    goal     := "goal" IDENT STRING attr* (block | ";")
    claim    := "claim" IDENT STRING attr* (block | ";")
    block    := "{" (claim | "by" IDENT ";")* "}"
    attr     := "stage" "(" IDENT ")"
              | "considers" "(" IDENT {"," IDENT} ")"
    evidence := "evidence" IDENT STRING "kind" "(" KIND ")"
                "{" {IDENT "=" (STRING | NUMBER) ";"} "}"
    waiver   := "waive" IDENT STRING ";"
    KIND     := "document" | "metric" | "record"
    IDENT    := letter (letter | digit | "_" | "-")*
    NUMBER   := ["-"] digits ["." digits]

Strings are double-quoted; escapes are \\" \\\\ plus \\n \\t \\r and
\\uXXXX so any text value survives a format/parse round trip. Input may
be LF or CRLF (LF is emitted) and a leading BOM is ignored.

Parsing is total: every input yields a ParseOutcome, recovery resumes at
the next top-level keyword, and all problems surface as P-xxx
diagnostics with source spans:

    P-001 expected 'case' at file start    P-008 unknown attribute
    P-002 unexpected character             P-009 unknown evidence kind
    P-003 malformed string literal         P-010 unresolved evidence reference
    P-004 unexpected token                 P-011 invalid evidence payload
    P-005 malformed number                 P-012 empty statement or title
    P-006 missing or duplicate goal        P-013 duplicate attribute or key
    P-007 duplicate node id                P-021 unknown payload key

Evidence payload keys by kind (unknown keys are rejected, not dropped,
so formatting loses nothing): document takes uri, sha256, description;
metric takes dataset, metric, group, condition, comparator ("<=" or
">="), threshold; record takes description, date, participant
(repeatable).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date as _date
from pathlib import Path

from .case_model import (
    DOCUMENT,
    GOAL,
    INTERMEDIATE,
    METRIC,
    METRIC_IDS,
    RECORD,
    AssuranceCase,
    Claim,
    ConstructionError,
    DocumentPayload,
    Evidence,
    MetricPayload,
    RecordPayload,
    Waiver,
    _format_number,
    check_node_id,
)
from .diagnostics import ERROR, Diagnostic, SourceSpan, has_errors
from .errors import FileError

EVIDENCE_KINDS = (DOCUMENT, METRIC, RECORD)

_COMPARATOR_TO_TOKEN = {"lte": "<=", "gte": ">="}
_TOKEN_TO_COMPARATOR = {"<=": "lte", ">=": "gte"}


@dataclass(frozen=True)
class ParseOutcome:
    case: AssuranceCase | None
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return self.case is not None


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

_IDENT = "ident"
_STRING = "string"
_NUMBER = "number"
_PUNCT = "punct"
_EOF = "eof"

_PUNCT_CHARS = "{}();,="


@dataclass(frozen=True)
class _Token:
    kind: str
    value: object  # ident text, decoded string, or float
    line: int
    column: int
    length: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line, self.column, self.length)


def _is_ident_start(ch: str) -> bool:
    return ch.isascii() and ch.isalpha()


def _is_ident_char(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch in "_-")


def _lex(text: str) -> tuple[list[_Token], list[Diagnostic]]:
    tokens: list[_Token] = []
    diags: list[Diagnostic] = []
    line, col = 1, 1
    i, n = 0, len(text)

    def step(count: int = 1):
        nonlocal i, line, col
        for _ in range(count):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\n":
            step()
            continue
        if ch == "/" and text[i : i + 2] == "//":
            while i < n and text[i] != "\n":
                step()
            continue
        start_line, start_col = line, col
        if ch in _PUNCT_CHARS:
            tokens.append(_Token(_PUNCT, ch, start_line, start_col, 1))
            step()
            continue
        if _is_ident_start(ch):
            start = i
            while i < n and _is_ident_char(text[i]):
                step()
            tokens.append(
                _Token(_IDENT, text[start:i], start_line, start_col, i - start)
            )
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            start = i
            if ch == "-":
                step()
            while i < n and text[i].isdigit():
                step()
            if i < n and text[i] == "." and i + 1 < n and text[i + 1].isdigit():
                step()
                while i < n and text[i].isdigit():
                    step()
            raw = text[start:i]
            tokens.append(_Token(_NUMBER, float(raw), start_line, start_col, len(raw)))
            continue
        if ch == '"':
            step()
            parts: list[str] = []
            closed = False
            while i < n:
                c = text[i]
                if c == '"':
                    step()
                    closed = True
                    break
                if c == "\n":
                    break
                if c == "\\":
                    esc = text[i + 1] if i + 1 < n else ""
                    if esc == '"' or esc == "\\":
                        parts.append(esc)
                        step(2)
                    elif esc in ("n", "t", "r"):
                        parts.append({"n": "\n", "t": "\t", "r": "\r"}[esc])
                        step(2)
                    elif esc == "u" and i + 5 < n:
                        hex_part = text[i + 2 : i + 6]
                        try:
                            parts.append(chr(int(hex_part, 16)))
                            step(6)
                        except ValueError:
                            diags.append(
                                Diagnostic(
                                    "P-003",
                                    ERROR,
                                    f"invalid unicode escape \\u{hex_part}",
                                    span=SourceSpan(line, col, 2),
                                )
                            )
                            step(2)
                    else:
                        diags.append(
                            Diagnostic(
                                "P-003",
                                ERROR,
                                f"invalid escape \\{esc}",
                                span=SourceSpan(line, col, 2),
                            )
                        )
                        step(2 if esc else 1)
                else:
                    parts.append(c)
                    step()
            if not closed:
                diags.append(
                    Diagnostic(
                        "P-003",
                        ERROR,
                        "unterminated string literal",
                        span=SourceSpan(start_line, start_col, max(1, col - start_col)),
                    )
                )
            tokens.append(
                _Token(
                    _STRING,
                    "".join(parts),
                    start_line,
                    start_col,
                    max(1, col - start_col),
                )
            )
            continue
        diags.append(
            Diagnostic(
                "P-002",
                ERROR,
                f"unexpected character {ch!r}",
                span=SourceSpan(start_line, start_col, 1),
            )
        )
        step()
    tokens.append(_Token(_EOF, None, line, col, 0))
    return tokens, diags


# ---------------------------------------------------------------------------
# Raw syntax tree
# ---------------------------------------------------------------------------


@dataclass
class _ClaimNode:
    kind: str
    id_tok: _Token
    stmt_tok: _Token
    stage_tok: _Token | None = None
    considers_toks: list[_Token] = field(default_factory=list)
    by_toks: list[_Token] = field(default_factory=list)
    children: list["_ClaimNode"] = field(default_factory=list)


@dataclass
class _EvidenceNode:
    id_tok: _Token
    title_tok: _Token
    kind_tok: _Token
    entries: list[tuple[_Token, _Token]] = field(default_factory=list)  # (key, value)


@dataclass
class _WaiverNode:
    id_tok: _Token
    rationale_tok: _Token


@dataclass
class _Document:
    title_tok: _Token
    goal: _ClaimNode | None = None
    evidence: list[_EvidenceNode] = field(default_factory=list)
    waivers: list[_WaiverNode] = field(default_factory=list)


class _Recover(Exception):
    """Internal signal: resynchronize at the next top-level keyword."""


_SYNC_KEYWORDS = {"goal", "claim", "by", "evidence", "waive"}


class _Parser:
    def __init__(self, tokens: list[_Token], diags: list[Diagnostic]):
        self.tokens = tokens
        self.pos = 0
        self.diags = diags

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != _EOF:
            self.pos += 1
        return tok

    def at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == _IDENT and tok.value == word

    def at_punct(self, ch: str) -> bool:
        tok = self.peek()
        return tok.kind == _PUNCT and tok.value == ch

    def error(self, code: str, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        self.diags.append(Diagnostic(code, ERROR, message, span=tok.span))

    def expect_punct(self, ch: str) -> _Token:
        if self.at_punct(ch):
            return self.advance()
        self.error("P-004", f"expected {ch!r}, found {self._describe(self.peek())}")
        raise _Recover

    def expect_string(self, what: str) -> _Token:
        tok = self.peek()
        if tok.kind == _STRING:
            return self.advance()
        self.error("P-004", f"expected {what} string, found {self._describe(tok)}")
        raise _Recover

    def expect_ident(self, what: str) -> _Token:
        tok = self.peek()
        if tok.kind == _IDENT:
            return self.advance()
        self.error("P-004", f"expected {what}, found {self._describe(tok)}")
        raise _Recover

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == _EOF:
            return "end of input"
        if tok.kind == _STRING:
            return "string"
        if tok.kind == _NUMBER:
            return "number"
        return repr(str(tok.value))

    def synchronize(self):
        while True:
            tok = self.peek()
            if tok.kind == _EOF:
                return
            if tok.kind == _IDENT and tok.value in _SYNC_KEYWORDS:
                return
            if tok.kind == _PUNCT and tok.value == "}":
                return
            self.advance()

    # -- grammar -----------------------------------------------------------

    def parse_file(self) -> _Document | None:
        if not self.at_keyword("case"):
            self.error("P-001", "expected 'case'")
            return None
        self.advance()
        try:
            title = self.expect_string("case title")
            self.expect_punct("{")
        except _Recover:
            return None
        doc = _Document(title_tok=title)
        while True:
            tok = self.peek()
            if tok.kind == _EOF:
                self.error("P-004", "expected '}' before end of input")
                break
            if self.at_punct("}"):
                self.advance()
                break
            try:
                if self.at_keyword("goal"):
                    node = self.parse_claim(GOAL)
                    if doc.goal is None:
                        doc.goal = node
                    else:
                        self.error("P-006", "duplicate goal block", node.id_tok)
                elif self.at_keyword("evidence"):
                    doc.evidence.append(self.parse_evidence())
                elif self.at_keyword("waive"):
                    doc.waivers.append(self.parse_waiver())
                elif self.at_keyword("claim"):
                    self.error("P-004", "claims must be nested inside the goal block")
                    self.parse_claim(INTERMEDIATE)  # parsed and dropped
                else:
                    self.error(
                        "P-004",
                        f"expected 'goal', 'evidence' or 'waive', found {self._describe(tok)}",
                    )
                    self.advance()
                    self.synchronize()
            except _Recover:
                self.synchronize()
        if doc.goal is None:
            self.error("P-006", "case has no goal block", self.peek())
        tok = self.peek()
        if tok.kind != _EOF:
            self.error("P-004", f"unexpected {self._describe(tok)} after case block")
        return doc

    def parse_claim(self, kind: str) -> _ClaimNode:
        self.advance()  # 'goal' | 'claim'
        id_tok = self.expect_ident("claim id")
        stmt_tok = self.expect_string("claim statement")
        node = _ClaimNode(kind=kind, id_tok=id_tok, stmt_tok=stmt_tok)
        self.parse_attrs(node)
        if self.at_punct(";"):
            self.advance()
            return node
        if self.at_punct("{"):
            self.advance()
            self.parse_block(node)
            return node
        tok = self.peek()
        if tok.kind == _IDENT and tok.value not in _SYNC_KEYWORDS:
            self.error("P-008", f"unknown attribute {tok.value!r}", tok)
        else:
            self.error("P-004", f"expected '{{' or ';', found {self._describe(tok)}")
        raise _Recover

    def parse_attrs(self, node: _ClaimNode):
        while True:
            if self.at_keyword("stage"):
                key = self.advance()
                self.expect_punct("(")
                stage = self.expect_ident("stage id")
                self.expect_punct(")")
                if node.stage_tok is not None:
                    self.error("P-013", "duplicate stage attribute", key)
                else:
                    node.stage_tok = stage
            elif self.at_keyword("considers"):
                self.advance()
                self.expect_punct("(")
                node.considers_toks.append(self.expect_ident("consideration id"))
                while self.at_punct(","):
                    self.advance()
                    node.considers_toks.append(self.expect_ident("consideration id"))
                self.expect_punct(")")
            else:
                return

    def parse_block(self, node: _ClaimNode):
        while True:
            tok = self.peek()
            if self.at_punct("}"):
                self.advance()
                return
            if tok.kind == _EOF:
                self.error("P-004", "expected '}' before end of input")
                raise _Recover
            try:
                if self.at_keyword("claim"):
                    node.children.append(self.parse_claim(INTERMEDIATE))
                elif self.at_keyword("by"):
                    self.advance()
                    node.by_toks.append(self.expect_ident("evidence id"))
                    self.expect_punct(";")
                else:
                    self.error(
                        "P-004", f"expected 'claim', 'by' or '}}', found {self._describe(tok)}"
                    )
                    self.advance()
                    self.synchronize()
                    if not (self.at_keyword("claim") or self.at_keyword("by")):
                        raise _Recover
            except _Recover:
                self.synchronize()
                if not (self.at_keyword("claim") or self.at_keyword("by")):
                    raise

    def parse_evidence(self) -> _EvidenceNode:
        self.advance()  # 'evidence'
        id_tok = self.expect_ident("evidence id")
        title_tok = self.expect_string("evidence title")
        if not self.at_keyword("kind"):
            self.error("P-004", f"expected 'kind', found {self._describe(self.peek())}")
            raise _Recover
        self.advance()
        self.expect_punct("(")
        kind_tok = self.expect_ident("evidence kind")
        self.expect_punct(")")
        node = _EvidenceNode(id_tok=id_tok, title_tok=title_tok, kind_tok=kind_tok)
        self.expect_punct("{")
        while True:
            tok = self.peek()
            if self.at_punct("}"):
                self.advance()
                return node
            if tok.kind == _EOF:
                self.error("P-004", "expected '}' before end of input")
                raise _Recover
            key = self.expect_ident("payload key")
            self.expect_punct("=")
            value = self.peek()
            if value.kind not in (_STRING, _NUMBER):
                self.error("P-004", f"expected string or number, found {self._describe(value)}")
                raise _Recover
            self.advance()
            self.expect_punct(";")
            node.entries.append((key, value))

    def parse_waiver(self) -> _WaiverNode:
        self.advance()  # 'waive'
        id_tok = self.expect_ident("consideration id")
        rationale_tok = self.expect_string("waiver rationale")
        self.expect_punct(";")
        return _WaiverNode(id_tok=id_tok, rationale_tok=rationale_tok)


# ---------------------------------------------------------------------------
# Assembly: syntax tree -> AssuranceCase
# ---------------------------------------------------------------------------

_PAYLOAD_KEYS = {
    DOCUMENT: {"uri": _STRING, "sha256": _STRING, "description": _STRING},
    METRIC: {
        "dataset": _STRING,
        "metric": _STRING,
        "group": _STRING,
        "condition": _STRING,
        "comparator": _STRING,
        "threshold": _NUMBER,
    },
    RECORD: {"description": _STRING, "date": _STRING, "participant": _STRING},
}

_REQUIRED_KEYS = {
    DOCUMENT: ("uri",),
    METRIC: ("dataset", "metric", "group", "comparator", "threshold"),
    RECORD: ("date",),
}


class _Assembler:
    def __init__(self, diags: list[Diagnostic]):
        self.diags = diags

    def error(self, code: str, message: str, tok: _Token, node_ref: str | None = None):
        self.diags.append(Diagnostic(code, ERROR, message, node_ref=node_ref, span=tok.span))

    def check_id(self, tok: _Token, taken: set[str], what: str) -> str | None:
        name = str(tok.value)
        try:
            check_node_id(name)
        except ConstructionError:
            self.error("P-004", f"invalid {what} id {name!r}", tok)
            return None
        if name in taken:
            self.error("P-007", f"duplicate {what} id {name!r}", tok, node_ref=name)
            return None
        taken.add(name)
        return name

    def nonempty(self, tok: _Token, what: str, node_ref: str | None = None) -> str:
        text = str(tok.value)
        if not text:
            self.error("P-012", f"{what} must be non-empty", tok, node_ref=node_ref)
        return text

    def build(self, doc: _Document) -> AssuranceCase | None:
        title = self.nonempty(doc.title_tok, "case title")
        claim_ids: set[str] = set()
        evidence_ids: set[str] = set()

        evidence_pool: dict[str, Evidence] = {}
        for node in doc.evidence:
            eid = self.check_id(node.id_tok, evidence_ids, "evidence")
            if eid is None:
                continue
            ev = self.build_evidence(eid, node)
            if ev is not None:
                evidence_pool[eid] = ev

        claims: dict[str, Claim] = {}
        pending_refs: list[tuple[str, _Token]] = []  # (claim id, evidence token)

        def walk(node: _ClaimNode) -> str | None:
            cid = self.check_id(node.id_tok, claim_ids, "claim")
            statement = self.nonempty(node.stmt_tok, "claim statement", cid)
            children = [c for c in (walk(child) for child in node.children) if c is not None]
            if cid is None:
                return None
            considers = {str(t.value) for t in node.considers_toks}
            refs = []
            for tok in node.by_toks:
                pending_refs.append((cid, tok))
                refs.append(str(tok.value))
            claims[cid] = Claim(
                id=cid,
                statement=statement or "?",
                kind=node.kind,
                stage=str(node.stage_tok.value) if node.stage_tok else None,
                considers=frozenset(considers),
                children=tuple(children),
                evidence_refs=frozenset(refs),
            )
            return cid

        assert doc.goal is not None
        root_id = walk(doc.goal)

        for cid, tok in pending_refs:
            if str(tok.value) not in evidence_pool:
                self.error(
                    "P-010",
                    f"reference to undeclared evidence {tok.value!r}",
                    tok,
                    node_ref=cid,
                )

        waivers: list[Waiver] = []
        waived: set[str] = set()
        for node in doc.waivers:
            wid = str(node.id_tok.value)
            rationale = self.nonempty(node.rationale_tok, "waiver rationale", wid)
            if wid in waived:
                self.error("P-007", f"duplicate waiver for {wid!r}", node.id_tok, node_ref=wid)
                continue
            waived.add(wid)
            if rationale:
                waivers.append(Waiver(consideration_id=wid, rationale=rationale))

        if has_errors(self.diags) or root_id is None:
            return None
        ordered = {}

        def reorder(cid: str):
            ordered[cid] = claims[cid]
            for child in claims[cid].children:
                reorder(child)

        reorder(root_id)
        return AssuranceCase(
            title=title,
            root_id=root_id,
            claims=ordered,
            evidence=evidence_pool,
            waivers=tuple(waivers),
        )

    def build_evidence(self, eid: str, node: _EvidenceNode) -> Evidence | None:
        kind = str(node.kind_tok.value)
        if kind not in EVIDENCE_KINDS:
            self.error("P-009", f"unknown evidence kind {kind!r}", node.kind_tok, node_ref=eid)
            return None
        title = self.nonempty(node.title_tok, "evidence title", eid)
        allowed = _PAYLOAD_KEYS[kind]
        values: dict[str, object] = {}
        participants: list[str] = []
        ok = True
        for key_tok, value_tok in node.entries:
            key = str(key_tok.value)
            if key not in allowed:
                self.error("P-021", f"unknown payload key {key!r} for kind {kind}", key_tok, eid)
                ok = False
                continue
            if value_tok.kind != allowed[key]:
                want = "number" if allowed[key] == _NUMBER else "string"
                self.error("P-011", f"payload key {key!r} expects a {want}", value_tok, eid)
                ok = False
                continue
            if kind == RECORD and key == "participant":
                participants.append(str(value_tok.value))
                continue
            if key in values:
                self.error("P-013", f"duplicate payload key {key!r}", key_tok, eid)
                ok = False
                continue
            values[key] = value_tok.value
        for key in _REQUIRED_KEYS[kind]:
            if key not in values:
                self.error(
                    "P-011", f"{kind} evidence requires payload key {key!r}", node.id_tok, eid
                )
                ok = False
        if not ok or not title:
            return None
        try:
            if kind == DOCUMENT:
                payload = DocumentPayload(
                    uri=str(values["uri"]),
                    sha256=str(values["sha256"]) if "sha256" in values else None,
                    description=str(values.get("description", "")),
                )
            elif kind == METRIC:
                comparator = _TOKEN_TO_COMPARATOR.get(str(values["comparator"]))
                if comparator is None:
                    self.error(
                        "P-011",
                        f"comparator must be \"<=\" or \">=\", got {values['comparator']!r}",
                        node.id_tok,
                        eid,
                    )
                    return None
                metric_id = str(values["metric"])
                if metric_id not in METRIC_IDS:
                    self.error("P-011", f"unknown metric {metric_id!r}", node.id_tok, eid)
                    return None
                payload = MetricPayload(
                    dataset_ref=str(values["dataset"]),
                    metric_id=metric_id,
                    group_column=str(values["group"]),
                    condition_column=str(values["condition"]) if "condition" in values else None,
                    comparator=comparator,
                    threshold=float(values["threshold"]),  # type: ignore[arg-type]
                )
            else:
                try:
                    parsed_date = _date.fromisoformat(str(values["date"]))
                except ValueError:
                    self.error(
                        "P-011",
                        f"date must be ISO-8601 (YYYY-MM-DD), got {values['date']!r}",
                        node.id_tok,
                        eid,
                    )
                    return None
                payload = RecordPayload(
                    description=str(values.get("description", "")),
                    date=parsed_date,
                    participants=tuple(participants),
                )
            return Evidence(id=eid, title=title, kind=kind, payload=payload)
        except ConstructionError as exc:
            self.error("P-011", str(exc), node.id_tok, eid)
            return None


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def parse(text: str) -> ParseOutcome:
    """Parse `.tea` source. Total: never raises on input content."""
    normalized = text.lstrip("﻿").replace("\r\n", "\n").replace("\r", "\n")
    tokens, diags = _lex(normalized)
    doc = _Parser(tokens, diags).parse_file()
    case = None
    if doc is not None and doc.goal is not None and not has_errors(diags):
        case = _Assembler(diags).build(doc)
    if has_errors(diags):
        case = None
    return ParseOutcome(case=case, diagnostics=diags)


def parse_file(path) -> ParseOutcome:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise FileError(str(path), f"cannot read: {exc}") from None
    return parse(raw.decode("utf-8", errors="replace"))


def _quote(text: str) -> str:
    out = ['"']
    for ch in text:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\r":
            out.append("\\r")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _claim_lines(case: AssuranceCase, claim_id: str, depth: int) -> list[str]:
    claim = case.claims[claim_id]
    pad = "  " * depth
    keyword = "goal" if claim.kind == GOAL else "claim"
    head = f"{pad}{keyword} {claim.id} {_quote(claim.statement)}"
    if claim.stage:
        head += f" stage({claim.stage})"
    if claim.considers:
        head += f" considers({', '.join(sorted(claim.considers))})"
    if not claim.evidence_refs and not claim.children:
        return [head + ";"]
    lines = [head + " {"]
    inner = "  " * (depth + 1)
    for eid in sorted(claim.evidence_refs):
        lines.append(f"{inner}by {eid};")
    for child in claim.children:
        lines.extend(_claim_lines(case, child, depth + 1))
    lines.append(pad + "}")
    return lines


def _evidence_lines(ev: Evidence, depth: int) -> list[str]:
    pad = "  " * depth
    inner = "  " * (depth + 1)
    lines = [f"{pad}evidence {ev.id} {_quote(ev.title)} kind({ev.kind}) {{"]
    p = ev.payload
    if ev.kind == DOCUMENT:
        lines.append(f"{inner}uri = {_quote(p.uri)};")
        if p.sha256 is not None:
            lines.append(f"{inner}sha256 = {_quote(p.sha256)};")
        if p.description:
            lines.append(f"{inner}description = {_quote(p.description)};")
    elif ev.kind == METRIC:
        lines.append(f"{inner}dataset = {_quote(p.dataset_ref)};")
        lines.append(f"{inner}metric = {_quote(p.metric_id)};")
        lines.append(f"{inner}group = {_quote(p.group_column)};")
        if p.condition_column is not None:
            lines.append(f"{inner}condition = {_quote(p.condition_column)};")
        lines.append(f"{inner}comparator = {_quote(_COMPARATOR_TO_TOKEN[p.comparator])};")
        lines.append(f"{inner}threshold = {_format_number(p.threshold)};")
    else:
        if p.description:
            lines.append(f"{inner}description = {_quote(p.description)};")
        lines.append(f"{inner}date = {_quote(p.date.isoformat())};")
        for person in p.participants:
            lines.append(f"{inner}participant = {_quote(person)};")
    lines.append(pad + "}")
    return lines


def format_case(case: AssuranceCase) -> str:
    """Canonical `.tea` text: 2-space indent, goal block first, evidence
    in declaration order, waivers last. Deterministic and idempotent."""
    lines = [f"case {_quote(case.title)} {{"]
    lines.extend(_claim_lines(case, case.root_id, 1))
    for ev in case.evidence.values():
        lines.extend(_evidence_lines(ev, 1))
    for waiver in case.waivers:
        lines.append(f"  waive {waiver.consideration_id} {_quote(waiver.rationale)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_file(case: AssuranceCase, path) -> None:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(format_case(case))
    except OSError as exc:
        raise FileError(str(path), f"cannot write: {exc}") from None
