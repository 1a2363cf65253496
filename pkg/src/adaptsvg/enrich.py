"""Injection of accessibility markup and layer bit fields into matched elements.

Enrichment only ever adds: a <title>/<desc> pair per matched element plus the
attribute set assistive technology and the adaptation engine consume
(aria-describedby, role, tabindex, data-category, data-layer-bit-field,
data-layer-state). Geometry and existing content are untouched.
"""

from __future__ import annotations

from .layers import LayerRules, assign_bitfield
from .metadata import MatchResult, MetadataRecord
from .model import ElementNode, FloorplanDocument

BITFIELD_ATTR = "data-layer-bit-field"
STATE_ATTR = "data-layer-state"
CATEGORY_ATTR = "data-category"


def describe(record: MetadataRecord) -> str:
    """Description text: the record's own, else name plus humanized category."""
    if record.description:
        return record.description
    return f"{record.name}, {record.category.replace('_', ' ')}"


def _unique_desc_id(base: str, taken: set[str], current: str | None) -> tuple[str, bool]:
    """Deterministic id for a generated desc; suffix -2, -3, ... on collision."""
    if current:
        return current, False
    if base not in taken:
        return base, False
    n = 2
    while f"{base}-{n}" in taken:
        n += 1
    return f"{base}-{n}", True


def enrich_document(doc: FloorplanDocument, match: MatchResult, rules: LayerRules) -> FloorplanDocument:
    """Returns a new document with every matched element enriched.

    Idempotent for identical inputs: existing title/desc children and
    attributes are refreshed in place, never duplicated.
    """
    out = doc.copy()
    taken = set(out.id_index)

    for element, record in match.matched:
        element_id = element.get("id")
        node = out.id_index.get(element_id) if element_id else None
        if node is None:
            out.warnings.append(f"matched element {element_id!r} missing from document; skipped")
            continue

        title = node.find_child("title")
        if title is None:
            title = ElementNode(tag="title")
            node.children.insert(0, title)
        title.text = record.name or None

        desc = node.find_child("desc")
        base = f"af-desc-{element_id}"
        desc_id, collided = _unique_desc_id(base, taken, desc.get("id") if desc else None)
        if collided:
            out.warnings.append(f"desc id {base!r} already taken; using {desc_id!r}")
        if desc is None:
            desc = ElementNode(tag="desc")
            node.children.insert(1, desc)
        desc.set("id", desc_id)
        desc.text = describe(record) or None
        taken.add(desc_id)

        node.set("aria-describedby", desc_id)
        node.set("role", "img")
        node.set("tabindex", "0")
        node.set(CATEGORY_ATTR, record.category)
        node.set(BITFIELD_ATTR, str(assign_bitfield(record.category, rules)))
        node.set(STATE_ATTR, "inactive")

    out.reindex()
    return out


def enriched_elements(doc: FloorplanDocument) -> list[ElementNode]:
    """Enriched elements in document order."""
    return [n for n in doc.root.iter() if BITFIELD_ATTR in n.attributes]


def assign_tab_order(doc: FloorplanDocument) -> FloorplanDocument:
    """Make every enriched element keyboard-focusable exactly once.

    Focus order is document order, so a single tabindex="0" per element is all
    that is needed; stray values are normalized.
    """
    out = doc.copy()
    for node in enriched_elements(out):
        node.set("tabindex", "0")
    return out
