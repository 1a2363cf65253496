"""CSV room metadata: ingestion, category normalization and the id join.

The CSV schema is fixed: header `element_id,name,category,department,
description,tags`, tags semicolon-separated. Categories come from a closed
vocabulary; common aliases found in facility exports are folded in, anything
unknown becomes "other" with a warning.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field

from .model import ElementNode, FloorplanDocument, list_elements

CATEGORIES = (
    "retail",
    "toilet",
    "accessible_toilet",
    "elevator",
    "stairs",
    "ramp",
    "entrance",
    "accessible_entrance",
    "exit",
    "information_desk",
    "corridor",
    "parking",
    "other",
)

# Alias table for category spellings seen in building-management exports.
CATEGORY_ALIASES = {
    "lift": "elevator",
    "lifts": "elevator",
    "elevators": "elevator",
    "wc": "toilet",
    "toilets": "toilet",
    "restroom": "toilet",
    "restrooms": "toilet",
    "bathroom": "toilet",
    "washroom": "toilet",
    "disabled_toilet": "accessible_toilet",
    "accessible_restroom": "accessible_toilet",
    "accessible_wc": "accessible_toilet",
    "shop": "retail",
    "shops": "retail",
    "store": "retail",
    "stores": "retail",
    "stairway": "stairs",
    "staircase": "stairs",
    "stairwell": "stairs",
    "steps": "stairs",
    "ramps": "ramp",
    "entry": "entrance",
    "entrances": "entrance",
    "main_entrance": "entrance",
    "disabled_entrance": "accessible_entrance",
    "accessible_entry": "accessible_entrance",
    "exits": "exit",
    "emergency_exit": "exit",
    "fire_exit": "exit",
    "info": "information_desk",
    "info_desk": "information_desk",
    "information": "information_desk",
    "help_desk": "information_desk",
    "support_center": "information_desk",
    "support_centre": "information_desk",
    "reception": "information_desk",
    "hallway": "corridor",
    "walkway": "corridor",
    "corridors": "corridor",
    "car_park": "parking",
    "carpark": "parking",
    "parking_lot": "parking",
}

REQUIRED_COLUMNS = ("element_id", "name", "category", "department", "description", "tags")


class MetadataError(ValueError):
    pass


class MetadataSchemaError(MetadataError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"metadata CSV is missing required column {column!r}")


class MetadataRowError(MetadataError):
    def __init__(self, row: int, message: str):
        self.row = row
        super().__init__(f"row {row}: {message}")


@dataclass
class MetadataRecord:
    element_id: str
    name: str
    category: str = "other"
    department: str | None = None
    description: str | None = None
    tags: list[str] = field(default_factory=list)


@dataclass
class MetadataTable:
    records: list[MetadataRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass
class MatchResult:
    matched: list[tuple[ElementNode, MetadataRecord]] = field(default_factory=list)
    unmatched_records: list[MetadataRecord] = field(default_factory=list)
    unmatched_candidate_elements: list[str] = field(default_factory=list)


def normalize_category(raw: str) -> tuple[str, str | None]:
    """Returns (category, warning). Unknown values map to "other"."""
    key = re.sub(r"[\s\-]+", "_", (raw or "").strip().lower())
    if not key:
        return "other", "empty category; using 'other'"
    key = CATEGORY_ALIASES.get(key, key)
    if key in CATEGORIES:
        return key, None
    return "other", f"unknown category {raw!r}; using 'other'"


def parse_metadata_csv(data: bytes | str) -> MetadataTable:
    """Parse a metadata CSV into a table.

    Raises MetadataSchemaError for a missing column and MetadataRowError for a
    row without an element_id; category problems are warnings, not errors.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    reader = csv.DictReader(io.StringIO(data))
    header = reader.fieldnames or []
    for column in REQUIRED_COLUMNS:
        if column not in header:
            raise MetadataSchemaError(column)

    table = MetadataTable()
    for row_number, row in enumerate(reader, start=2):
        element_id = (row.get("element_id") or "").strip()
        if not element_id:
            raise MetadataRowError(row_number, "empty element_id")
        category, warning = normalize_category(row.get("category") or "")
        if warning:
            table.warnings.append(f"row {row_number}: {warning}")
        tags = [t.strip() for t in (row.get("tags") or "").split(";") if t.strip()]
        table.records.append(
            MetadataRecord(
                element_id=element_id,
                name=(row.get("name") or "").strip(),
                category=category,
                department=(row.get("department") or "").strip() or None,
                description=(row.get("description") or "").strip() or None,
                tags=tags,
            )
        )
    return table


def match_metadata(doc: FloorplanDocument, table: MetadataTable) -> MatchResult:
    """Join records to elements by id: exact first, then case-insensitive.

    Deterministic; every record lands in exactly one bucket and every element
    is matched at most once. Misses are reported, never dropped.
    """
    ordered_ids = [n.get("id") for n in list_elements(doc) if n.get("id")]
    ci_index: dict[str, str] = {}
    for eid in ordered_ids:
        ci_index.setdefault(eid.lower(), eid)

    result = MatchResult()
    used: set[str] = set()
    for record in table.records:
        eid = record.element_id if record.element_id in doc.id_index else None
        if eid is None:
            candidate = ci_index.get(record.element_id.lower())
            if candidate is not None and candidate in doc.id_index:
                eid = candidate
        if eid is None or eid in used:
            result.unmatched_records.append(record)
            continue
        used.add(eid)
        result.matched.append((doc.id_index[eid], record))
    result.unmatched_candidate_elements = [eid for eid in ordered_ids if eid not in used]
    return result
