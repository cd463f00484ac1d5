"""Fairness-considerations registry and per-consideration coverage.

The built-in map ``fairness-v1`` ships as package data so the entries can
be revised without code changes. A map directory named by the
``TEA_MAP_DIR`` environment variable (or passed by the caller) takes
precedence over the bundled file, which lets deployments pin their own
registries.

Coverage semantics: a consideration is *addressed* when at least one
claim carries its tag, otherwise *waived* when the case holds a waiver
for it, otherwise *unaddressed*. Tagging wins over waiving.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .case_model import AssuranceCase
from .errors import NotFoundError
from .lifecycle import is_stage_id

BUILTIN_MAP_ID = "fairness-v1"

ADDRESSED = "addressed"
WAIVED = "waived"
UNADDRESSED = "unaddressed"


@dataclass(frozen=True)
class Consideration:
    id: str
    stage: str
    summary: str
    prompt: str
    default_severity: str = "warning"


@dataclass(frozen=True)
class MapCoverage:
    per_consideration: dict[str, str]
    addressing_claims: dict[str, list[str]]


def _parse_entries(raw, source: str) -> list[Consideration]:
    if not isinstance(raw, list) or not raw:
        raise NotFoundError(f"map {source}: expected a non-empty JSON array")
    entries = []
    seen = set()
    for item in raw:
        entry = Consideration(
            id=item["id"],
            stage=item["stage"],
            summary=item["summary"],
            prompt=item["prompt"],
            default_severity=item.get("defaultSeverity", "warning"),
        )
        if entry.id in seen:
            raise NotFoundError(f"map {source}: duplicate consideration id {entry.id}")
        if not is_stage_id(entry.stage):
            raise NotFoundError(f"map {source}: {entry.id} names unknown stage {entry.stage!r}")
        seen.add(entry.id)
        entries.append(entry)
    return entries


def _load_from_file(path: Path, map_id: str) -> list[Consideration]:
    raw = json.loads(path.read_text(encoding="utf-8"))
    return _parse_entries(raw, map_id)


def consideration_registry(
    map_id: str = BUILTIN_MAP_ID, search_dirs: tuple[Path, ...] = ()
) -> list[Consideration]:
    """Resolve a considerations map by id.

    Lookup order: TEA_MAP_DIR, then ``search_dirs``, then the bundled map.
    Unknown ids raise NotFoundError.
    """
    dirs: list[Path] = []
    env_dir = os.environ.get("TEA_MAP_DIR")
    if env_dir:
        dirs.append(Path(env_dir))
    dirs.extend(Path(d) for d in search_dirs)
    for directory in dirs:
        candidate = directory / f"{map_id}.json"
        if candidate.is_file():
            return _load_from_file(candidate, map_id)
    if map_id == BUILTIN_MAP_ID:
        raw = json.loads(
            resources.files("tea_workbench").joinpath("maps/fairness-v1.json").read_text("utf-8")
        )
        return _parse_entries(raw, map_id)
    raise NotFoundError(f"unknown considerations map {map_id!r}")


def consideration_ids(
    map_id: str = BUILTIN_MAP_ID, search_dirs: tuple[Path, ...] = ()
) -> set[str]:
    return {c.id for c in consideration_registry(map_id, search_dirs)}


def map_coverage(
    case: AssuranceCase,
    map_id: str = BUILTIN_MAP_ID,
    search_dirs: tuple[Path, ...] = (),
) -> MapCoverage:
    registry = consideration_registry(map_id, search_dirs)
    waived_ids = {w.consideration_id for w in case.waivers}
    addressing: dict[str, list[str]] = {c.id: [] for c in registry}
    for cid in case.preorder():
        for tag in case.claims[cid].considers:
            if tag in addressing:
                addressing[tag].append(cid)
    statuses = {}
    for entry in registry:
        if addressing[entry.id]:
            statuses[entry.id] = ADDRESSED
        elif entry.id in waived_ids:
            statuses[entry.id] = WAIVED
        else:
            statuses[entry.id] = UNADDRESSED
    return MapCoverage(per_consideration=statuses, addressing_claims=addressing)
