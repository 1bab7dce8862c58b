"""Loads the machine-readable scenario-spec schema (single source of truth
shared by the validator, the agent prompts, and the web UI)."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

SCHEMA_RESOURCE = "scenario_schema.json"


@lru_cache(maxsize=1)
def load_schema() -> dict:
    path = resources.files("scenforge").joinpath("data", SCHEMA_RESOURCE)
    return json.loads(path.read_text(encoding="utf-8"))


def enum_values(name: str) -> tuple[str, ...]:
    return tuple(load_schema()["enums"][name])


def element_schema(tag: str) -> dict | None:
    return load_schema()["elements"].get(tag)


def schema_summary() -> str:
    """Compact plain-text schema description embedded in agent prompts."""
    schema = load_schema()
    lines = [f"root element: <{schema['root']}>"]
    for tag, desc in schema["elements"].items():
        attrs = []
        for name, spec in desc["attributes"].items():
            if "enum" in spec:
                allowed = ",".join(schema["enums"][spec["enum"]])
                attrs.append(f"{name}={{{allowed}}}")
            else:
                attrs.append(f"{name}:{spec['type']}")
        kids = ", ".join(desc["children"]) or "-"
        lines.append(f"<{tag}> attrs[{' '.join(attrs) or '-'}] children[{kids}]")
    return "\n".join(lines)
