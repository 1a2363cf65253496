"""Accessibility layers: disability bit assignment and the layer rule set.

Each disability owns one bit of a 4-bit mask. An element's membership mask is
the OR of the bits of every disability that has a rule for the element's
category; a user profile contributes the bits of the disabilities declared.
An element is on an active layer iff membership AND profile masks intersect.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

DISABILITIES = ("low_vision", "colour_impairment", "dyslexia", "mobility_impairment")
ACTIONS = ("highlight", "hide", "annotate")

DEFAULT_BITS = {
    "low_vision": 0,
    "colour_impairment": 1,
    "dyslexia": 2,
    "mobility_impairment": 3,
}


class LayerRulesError(ValueError):
    pass


@dataclass(frozen=True)
class LayerRule:
    category: str
    disability: str
    action: str


@dataclass
class LayerRules:
    bits: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_BITS))
    rules: list[LayerRule] = field(default_factory=list)
    precedence: tuple[str, ...] = ("highlight", "hide", "annotate")

    def __post_init__(self) -> None:
        if sorted(self.bits.values()) != sorted(set(self.bits.values())):
            raise LayerRulesError("bit indices must be unique")
        for disability, bit in self.bits.items():
            if disability not in DISABILITIES:
                raise LayerRulesError(f"unknown disability {disability!r}")
            if not 0 <= bit <= 3:
                raise LayerRulesError(f"bit index {bit} for {disability!r} out of range 0..3")
        seen: set[tuple[str, str]] = set()
        for rule in self.rules:
            if rule.disability not in self.bits:
                raise LayerRulesError(f"rule references unknown disability {rule.disability!r}")
            if rule.action not in ACTIONS:
                raise LayerRulesError(f"unknown action {rule.action!r}")
            key = (rule.category, rule.disability)
            if key in seen:
                raise LayerRulesError(f"more than one action for {key}")
            seen.add(key)
        for action in self.precedence:
            if action not in ACTIONS:
                raise LayerRulesError(f"unknown action {action!r} in precedence")

    def mask(self, disability: str) -> int:
        return 1 << self.bits[disability]

    def rules_for(self, category: str) -> list[LayerRule]:
        return [r for r in self.rules if r.category == category]

    def to_mapping(self) -> dict:
        return {
            "bits": dict(self.bits),
            "rules": [
                {"category": r.category, "disability": r.disability, "action": r.action}
                for r in self.rules
            ],
            "precedence": list(self.precedence),
        }

    @classmethod
    def from_mapping(cls, mapping: dict) -> "LayerRules":
        try:
            rules = [
                LayerRule(r["category"], r["disability"], r["action"])
                for r in mapping.get("rules", [])
            ]
            return cls(
                bits=dict(mapping.get("bits", DEFAULT_BITS)),
                rules=rules,
                precedence=tuple(mapping.get("precedence", ("highlight", "hide", "annotate"))),
            )
        except (KeyError, TypeError) as exc:
            raise LayerRulesError(f"malformed rules mapping: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> "LayerRules":
        return cls.from_mapping(json.loads(Path(path).read_text(encoding="utf-8")))


def _data_text(name: str) -> str:
    return resources.files("adaptsvg").joinpath(f"data/{name}").read_text(encoding="utf-8")


def default_rules() -> LayerRules:
    """The shipped rule set (mobility and low-vision category rules)."""
    return LayerRules.from_mapping(json.loads(_data_text("default_rules.json")))


def assign_bitfield(category: str, rules: LayerRules) -> int:
    """Membership mask for a category: OR of the bits of every disability
    that has any rule for it. No rule means the base layer (0)."""
    mask = 0
    for rule in rules.rules:
        if rule.category == category:
            mask |= rules.mask(rule.disability)
    return mask
