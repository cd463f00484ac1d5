"""Group-fairness and agreement metrics over binary prediction tables.

All metrics count in exact integer arithmetic and divide once at the
end, so small fixtures are exact to double precision. A metric value is
UNDEFINED (represented as ``None``) whenever a required denominator is
zero or the chance-agreement term degenerates; UNDEFINED never silently
becomes 0 or NaN, and it always carries an explanatory note.

Difference metrics are max minus min of the per-group rate, a single
scalar in [0, 1]. Per-group rates (positive = label 1):

    selection = (tp + fp) / n      fpr = fp / (fp + tn)
    fnr       = fn / (fn + tp)     ppv = tp / (tp + fp)
    accuracy  = (tp + tn) / n

Cohen's kappa normalizes observed agreement against the agreement
expected from the marginal label frequencies:

    kappa = (p_o - p_e) / (1 - p_e)
    p_e   = P(true=1) * P(pred=1) + P(true=0) * P(pred=0)
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .case_model import Evidence
from .errors import EmptyTableError, SchemaError

SELECTION = "selection"
FPR = "fpr"
FNR = "fnr"
PPV = "ppv"
ACCURACY = "accuracy"

RATE_KINDS = (SELECTION, FPR, FNR, PPV, ACCURACY)

RATE_METRIC_IDS = {
    SELECTION: "statistical_parity_difference",
    FPR: "fpr_difference",
    FNR: "fnr_difference",
    PPV: "ppv_difference",
    ACCURACY: "accuracy_difference",
}

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Row:
    group: str
    y_true: int
    y_pred: int
    score: float | None = None
    condition: str | None = None


@dataclass(frozen=True)
class PredictionTable:
    rows: tuple[Row, ...]

    def __post_init__(self):
        if not self.rows:
            raise EmptyTableError("prediction table has no rows")

    def groups(self) -> list[str]:
        return sorted({r.group for r in self.rows})


@dataclass(frozen=True)
class GroupConfusion:
    group: str
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricResult:
    metric_id: str
    value: float | None
    per_group: dict[str, float | None] = field(default_factory=dict)
    notes: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Ingestion
# ---------------------------------------------------------------------------


def _parse_binary(raw: str, column: str, row_no: int) -> int:
    if raw == "0" or raw == "1":
        return int(raw)
    raise ValueError(f"row {row_no}: {column} must be 0 or 1, got {raw!r}")


def ingest_table(
    csv_bytes: bytes,
    group_column: str = "group",
    condition_column: str = "condition",
) -> PredictionTable:
    """Parse a UTF-8 CSV with header ``group,y_true,y_pred`` (group and
    condition column names remappable) plus optional score/condition
    columns. Row numbers in errors are 1-based over data rows."""
    text = csv_bytes.decode("utf-8-sig") if isinstance(csv_bytes, (bytes, bytearray)) else csv_bytes
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyTableError("CSV input is empty") from None
    header = [h.strip() for h in header]
    for required in (group_column, "y_true", "y_pred"):
        if required not in header:
            raise SchemaError(f"missing required column {required!r}")
    idx = {name: header.index(name) for name in header}
    has_score = "score" in idx
    has_condition = condition_column in idx

    rows: list[Row] = []
    for row_no, record in enumerate(reader, start=1):
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != len(header):
            raise ValueError(f"row {row_no}: expected {len(header)} fields, got {len(record)}")
        group = record[idx[group_column]].strip()
        if not group:
            raise ValueError(f"row {row_no}: empty group label")
        score = None
        if has_score and record[idx["score"]].strip():
            score = float(record[idx["score"]])
            if not 0.0 <= score <= 1.0:
                raise ValueError(f"row {row_no}: score must be in [0, 1], got {score}")
        condition = None
        if has_condition and record[idx[condition_column]].strip():
            condition = record[idx[condition_column]].strip()
        rows.append(
            Row(
                group=group,
                y_true=_parse_binary(record[idx["y_true"]].strip(), "y_true", row_no),
                y_pred=_parse_binary(record[idx["y_pred"]].strip(), "y_pred", row_no),
                score=score,
                condition=condition,
            )
        )
    if not rows:
        raise EmptyTableError("CSV has a header but no data rows")
    return PredictionTable(rows=tuple(rows))


# ---------------------------------------------------------------------------
# Counting and rates
# ---------------------------------------------------------------------------


def confusion_by_group(table: PredictionTable) -> list[GroupConfusion]:
    """One confusion entry per distinct group, sorted by group label; the
    four counts partition the group's rows."""
    counts: dict[str, list[int]] = {}
    for row in table.rows:
        cell = counts.setdefault(row.group, [0, 0, 0, 0])  # tp, fp, fn, tn
        if row.y_true == 1 and row.y_pred == 1:
            cell[0] += 1
        elif row.y_true == 0 and row.y_pred == 1:
            cell[1] += 1
        elif row.y_true == 1 and row.y_pred == 0:
            cell[2] += 1
        else:
            cell[3] += 1
    return [
        GroupConfusion(group=g, tp=c[0], fp=c[1], fn=c[2], tn=c[3])
        for g, c in sorted(counts.items())
    ]


def _rate(conf: GroupConfusion, kind: str) -> tuple[float | None, str | None]:
    """Per-group rate, or (None, reason) when the denominator is zero."""
    if kind == SELECTION:
        return (conf.tp + conf.fp) / conf.total, None
    if kind == ACCURACY:
        return (conf.tp + conf.tn) / conf.total, None
    if kind == FPR:
        denom = conf.fp + conf.tn
        if denom == 0:
            return None, f"group {conf.group!r}: no actual negatives, fpr undefined"
        return conf.fp / denom, None
    if kind == FNR:
        denom = conf.fn + conf.tp
        if denom == 0:
            return None, f"group {conf.group!r}: no actual positives, fnr undefined"
        return conf.fn / denom, None
    if kind == PPV:
        denom = conf.tp + conf.fp
        if denom == 0:
            return None, f"group {conf.group!r}: no positive predictions, ppv undefined"
        return conf.tp / denom, None
    raise ValueError(f"unknown rate kind {kind!r}")


def group_rate_difference(table: PredictionTable, rate: str) -> MetricResult:
    """Max-minus-min of the per-group rate; UNDEFINED if any group's
    denominator is zero."""
    if rate not in RATE_KINDS:
        raise ValueError(f"unknown rate kind {rate!r}")
    per_group: dict[str, float | None] = {}
    notes: list[str] = []
    for conf in confusion_by_group(table):
        value, reason = _rate(conf, rate)
        per_group[conf.group] = value
        if reason:
            notes.append(reason)
    defined = [v for v in per_group.values() if v is not None]
    value = max(defined) - min(defined) if len(defined) == len(per_group) else None
    return MetricResult(
        metric_id=RATE_METRIC_IDS[rate],
        value=value,
        per_group=per_group,
        notes=tuple(notes),
    )


def conditional_group_rate_difference(table: PredictionTable, rate: str) -> MetricResult:
    """Worst-stratum rate difference: group_rate_difference within each
    condition stratum, then the max over strata. Per-group entries are
    keyed "stratum|group"."""
    missing = sum(1 for r in table.rows if r.condition is None)
    if missing:
        raise SchemaError(f"{missing} rows lack a condition value")
    strata = sorted({r.condition for r in table.rows})
    per_group: dict[str, float | None] = {}
    notes: list[str] = []
    stratum_values: list[float | None] = []
    for stratum in strata:
        sub = PredictionTable(rows=tuple(r for r in table.rows if r.condition == stratum))
        result = group_rate_difference(sub, rate)
        for group, value in result.per_group.items():
            per_group[f"{stratum}|{group}"] = value
        notes.extend(f"stratum {stratum!r}: {note}" for note in result.notes)
        stratum_values.append(result.value)
    value = max(stratum_values) if all(v is not None for v in stratum_values) else None
    metric_id = RATE_METRIC_IDS[rate]
    if rate == SELECTION:
        metric_id = "conditional_statistical_parity_difference"
    return MetricResult(metric_id=metric_id, value=value, per_group=per_group, notes=tuple(notes))


def overall_accuracy(table: PredictionTable) -> MetricResult:
    correct = sum(1 for r in table.rows if r.y_true == r.y_pred)
    return MetricResult(metric_id="overall_accuracy", value=correct / len(table.rows))


def cohens_kappa(table: PredictionTable) -> MetricResult:
    """Agreement normalized against chance agreement from the marginals.
    Degenerate marginals (chance agreement of exactly 1) are UNDEFINED."""
    n = len(table.rows)
    agree = sum(1 for r in table.rows if r.y_true == r.y_pred)
    true_pos = sum(r.y_true for r in table.rows)
    pred_pos = sum(r.y_pred for r in table.rows)
    # p_e == 1 is decided on integers to avoid float fuzz at the boundary
    chance_num = true_pos * pred_pos + (n - true_pos) * (n - pred_pos)
    if chance_num == n * n:
        return MetricResult(
            metric_id="cohens_kappa",
            value=None,
            notes=("degenerate marginals: chance agreement is 1, kappa undefined",),
        )
    p_o = agree / n
    p_e = chance_num / (n * n)
    return MetricResult(metric_id="cohens_kappa", value=(p_o - p_e) / (1.0 - p_e))


# ---------------------------------------------------------------------------
# Metric evidence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MetricEvaluation:
    result: MetricResult
    verdict: str  # pass | fail | indeterminate


def compute_metric(table: PredictionTable, metric_id: str) -> MetricResult:
    if metric_id == "overall_accuracy":
        return overall_accuracy(table)
    if metric_id == "cohens_kappa":
        return cohens_kappa(table)
    if metric_id == "conditional_statistical_parity_difference":
        return conditional_group_rate_difference(table, SELECTION)
    for rate, mid in RATE_METRIC_IDS.items():
        if mid == metric_id:
            return group_rate_difference(table, rate)
    raise ValueError(f"unknown metric {metric_id!r}")


def evaluate_metric_evidence(ev: Evidence, store) -> MetricEvaluation:
    """Compute a metric evidence node's value against its dataset and
    compare with the declared threshold (closed comparison).

    ``store`` resolves dataset references: ``store.load_dataset(ref)``
    returns CSV bytes or None. All failure modes yield an indeterminate
    verdict with a note; this never raises on bad data.
    """
    payload = ev.payload
    mid = payload.metric_id

    def indeterminate(note: str) -> MetricEvaluation:
        return MetricEvaluation(
            result=MetricResult(metric_id=mid, value=None, notes=(note,)),
            verdict=INDETERMINATE,
        )

    csv_bytes = store.load_dataset(payload.dataset_ref) if store is not None else None
    if csv_bytes is None:
        return indeterminate(f"dataset not found: {payload.dataset_ref}")
    try:
        table = ingest_table(
            csv_bytes,
            group_column=payload.group_column,
            condition_column=payload.condition_column or "condition",
        )
        result = compute_metric(table, mid)
    except (SchemaError, EmptyTableError, ValueError, UnicodeDecodeError) as exc:
        return indeterminate(f"dataset {payload.dataset_ref}: {exc}")
    if result.value is None:
        return MetricEvaluation(result=result, verdict=INDETERMINATE)
    if payload.comparator == "lte":
        ok = result.value <= payload.threshold
    else:
        ok = result.value >= payload.threshold
    return MetricEvaluation(result=result, verdict=PASS if ok else FAIL)
