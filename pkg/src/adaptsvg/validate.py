"""Machine checks over adaptive SVGs: text contrast, reference integrity,
bit-field ranges, pattern capacity and duplicate ids.

Findings are data, not errors; callers decide what to do with them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .color import Rgb, contrast_ratio, parse_colour
from .enrich import BITFIELD_ATTR, CATEGORY_ATTR
from .model import ElementNode, FloorplanDocument
from .palette import Palette, default_palette
from .preprocess import parse_style

TEXT_CONTRAST_MINIMUM = 4.5

_SHAPE_TAGS = {"rect", "circle", "ellipse", "polygon", "polyline", "path"}
_HALF_FILL_RE = re.compile(r"url\(#af-halffill-([0-9a-fA-F]{6})\)")
_PATTERN_RE = re.compile(r"url\(#af-pattern-\d+\)")


@dataclass
class Finding:
    rule: str
    severity: str
    element_id: str | None
    message: str

    def to_mapping(self) -> dict:
        return {
            "rule": self.rule,
            "severity": self.severity,
            "element_id": self.element_id,
            "message": self.message,
        }


def _fill_of(node: ElementNode) -> str | None:
    style = parse_style(node.get("style"))
    return style.get("fill") or node.get("fill")


def _solid_colour(fill: str | None) -> Rgb | None:
    """Resolve a fill to a representative solid colour where possible."""
    if not fill or fill == "none":
        return None
    rgb = parse_colour(fill)
    if rgb is not None:
        return rgb
    half = _HALF_FILL_RE.fullmatch(fill)
    if half:
        return parse_colour(f"#{half.group(1)}")
    if _PATTERN_RE.fullmatch(fill):
        return (255, 255, 255)  # patterns are white-backed
    return None


def _parent_map(doc: FloorplanDocument) -> dict[int, ElementNode]:
    parents: dict[int, ElementNode] = {}
    for node in doc.root.iter():
        for child in node.children:
            parents[id(child)] = node
    return parents


def _background_for(node: ElementNode, parents: dict[int, ElementNode]) -> Rgb:
    """Nearest underlying shape fill: preceding siblings first, then up the
    tree; defaults to white."""
    current = node
    while True:
        parent = parents.get(id(current))
        if parent is None:
            return (255, 255, 255)
        index = parent.children.index(current)
        for sibling in reversed(parent.children[:index]):
            if sibling.tag in _SHAPE_TAGS:
                colour = _solid_colour(_fill_of(sibling))
                if colour is not None:
                    return colour
        current = parent


def validate_document(
    doc: FloorplanDocument,
    style_fill_mode: str | None = None,
    palette: Palette | None = None,
) -> list[Finding]:
    """Run every machine check; one Finding per violation."""
    findings: list[Finding] = []
    parents = _parent_map(doc)

    seen_ids: set[str] = set()
    for node in doc.root.iter():
        node_id = node.get("id")
        if node_id:
            if node_id in seen_ids:
                findings.append(
                    Finding("duplicate-id", "warning", node_id, f"id {node_id!r} occurs more than once")
                )
            seen_ids.add(node_id)

    for node in doc.root.iter():
        node_id = node.get("id")

        ref = node.get("aria-describedby")
        if ref:
            for token in ref.split():
                if token not in doc.id_index:
                    findings.append(
                        Finding(
                            "aria-integrity",
                            "error",
                            node_id,
                            f"aria-describedby references missing id {token!r}",
                        )
                    )

        raw_mask = node.get(BITFIELD_ATTR)
        if raw_mask is not None:
            try:
                mask = int(raw_mask)
            except ValueError:
                mask = -1
            if not 0 <= mask <= 15:
                findings.append(
                    Finding(
                        "bitfield-range",
                        "error",
                        node_id,
                        f"{BITFIELD_ATTR} value {raw_mask!r} outside 0..15",
                    )
                )

        if node.local_name == "text":
            fill = _solid_colour(_fill_of(node) or "#000000")
            if fill is not None:
                background = _background_for(node, parents)
                ratio = contrast_ratio(fill, background)
                if ratio < TEXT_CONTRAST_MINIMUM:
                    findings.append(
                        Finding(
                            "text-contrast",
                            "error",
                            node_id,
                            f"text contrast {ratio:.2f}:1 below {TEXT_CONTRAST_MINIMUM}:1",
                        )
                    )

    # Pattern availability: every category conveyed by a pattern needs its own
    # pattern, and there must be enough patterns for all of them.
    patterned: dict[str, set[str]] = {}
    for node in doc.root.iter():
        fill = _fill_of(node) or ""
        if _PATTERN_RE.fullmatch(fill):
            patterned.setdefault(node.get(CATEGORY_ATTR) or "", set()).add(fill)
    pattern_mode = style_fill_mode == "pattern" or bool(patterned)
    if pattern_mode:
        palette = palette or default_palette()
        if patterned:
            category_count = len(patterned)
        else:
            # Explicit pattern mode on a not-yet-adapted document: count the
            # categories the default style would paint.
            from .engine import DEFAULT_CATEGORY_COLOURS

            category_count = len(
                {
                    n.get(CATEGORY_ATTR)
                    for n in doc.root.iter()
                    if n.get(CATEGORY_ATTR) in DEFAULT_CATEGORY_COLOURS
                }
            )
        if category_count > len(palette.patterns):
            findings.append(
                Finding(
                    "pattern-capacity",
                    "error",
                    None,
                    f"{category_count} categories but only {len(palette.patterns)} patterns available",
                )
            )
        shared: dict[str, list[str]] = {}
        for category, fills in patterned.items():
            for fill in fills:
                shared.setdefault(fill, []).append(category)
        for fill, categories in sorted(shared.items()):
            if len(categories) > 1:
                findings.append(
                    Finding(
                        "pattern-capacity",
                        "error",
                        None,
                        f"pattern {fill} is shared by categories {sorted(categories)}",
                    )
                )
    return findings
