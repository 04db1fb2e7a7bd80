"""JSON readers and writers for zone, resolution, mind-map and report files."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import ConfigInvalid
from .pipeline import RunResult

SCHEMA_DIR = resources.files("contentzone") / "schemas"


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def zones_to_json(result: RunResult) -> dict:
    out = {}
    for name in result.zones:
        zone = result.zones[name]
        out[name] = {
            "sentences": list(zone.indices),
            "spans": [list(s) for s in zone.spans],
            "variables": result.variables[name].to_json(),
        }
    return out


def resolutions_to_json(result: RunResult) -> list:
    return [r.to_json() for r in result.resolutions]


def zones_from_json(data) -> dict[str, list[int]]:
    if not isinstance(data, Mapping):
        raise ConfigInvalid("zone file must hold a JSON object keyed by actor name")
    out = {}
    for name, entry in data.items():
        if not isinstance(entry, Mapping) or not isinstance(entry.get("sentences"), list):
            raise ConfigInvalid(f"zone entry for {name!r} needs a 'sentences' list")
        if not all(isinstance(i, int) and not isinstance(i, bool) and i >= 0 for i in entry["sentences"]):
            raise ConfigInvalid(f"zone entry for {name!r}: sentences must be non-negative integers")
        out[name] = list(entry["sentences"])
    return out


def read_json(path: str | Path):
    with Path(path).open(encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigInvalid(f"{path}: not valid JSON ({exc})") from None


def load_zones(path: str | Path) -> dict[str, list[int]]:
    return zones_from_json(read_json(path))


def resolutions_from_json(data):
    from .anaphora import Resolution, Status
    from .tagger import PronounCategory

    if not isinstance(data, list):
        raise ConfigInvalid("resolution file must hold a JSON array")
    out = []
    for i, item in enumerate(data):
        try:
            out.append(
                Resolution(
                    int(item["sentence"]),
                    int(item.get("position", 0)),
                    str(item["surface"]),
                    PronounCategory(item["category"]),
                    tuple(item.get("resolved_to", [])),
                    Status(item["status"]),
                    tuple(tuple(a) for a in item.get("antecedents", [])),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigInvalid(f"resolution entry #{i} is malformed: {exc}") from None
    return out


def load_schema(name: str) -> dict:
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text(encoding="utf-8"))
