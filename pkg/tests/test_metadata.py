import random

import pytest

from adaptsvg.metadata import (
    CATEGORIES,
    CATEGORY_ALIASES,
    MetadataRowError,
    MetadataSchemaError,
    match_metadata,
    normalize_category,
    parse_metadata_csv,
)
from adaptsvg.model import parse_svg

from oracles import nested_loop_join

HEADER = "element_id,name,category,department,description,tags"


def test_parse_single_row():
    table = parse_metadata_csv(f"{HEADER}\nG163,Support Center,information_desk,,,\n")
    assert len(table) == 1
    record = table.records[0]
    assert record.element_id == "G163"
    assert record.name == "Support Center"
    assert record.category == "information_desk"
    assert record.department is None
    assert record.tags == []


def test_header_only_file_is_empty_table():
    table = parse_metadata_csv(HEADER + "\n")
    assert len(table) == 0
    assert table.warnings == []


def test_category_alias_lookup_matches_committed_table():
    # Alias oracle: every committed alias resolves to a vocabulary category,
    # and parsing goes through the same table.
    for alias, target in CATEGORY_ALIASES.items():
        assert target in CATEGORIES
        assert normalize_category(alias) == (target, None)
    table = parse_metadata_csv(f"{HEADER}\nE1,East Lift,Lift,,,\n")
    assert table.records[0].category == "elevator"
    assert table.warnings == []


def test_category_normalized_lowercase_and_spaces():
    assert normalize_category("Accessible Toilet") == ("accessible_toilet", None)
    assert normalize_category(" STAIRS ") == ("stairs", None)


def test_unknown_category_becomes_other_with_warning():
    table = parse_metadata_csv(f"{HEADER}\nX1,Mystery,vault,,,\n")
    assert table.records[0].category == "other"
    assert any("vault" in w for w in table.warnings)


def test_missing_column_raises_schema_error():
    with pytest.raises(MetadataSchemaError) as err:
        parse_metadata_csv("element_id,name,category,department,description\nA,B,retail,,\n")
    assert err.value.column == "tags"


def test_empty_element_id_raises_row_error():
    with pytest.raises(MetadataRowError) as err:
        parse_metadata_csv(f"{HEADER}\nA,First,retail,,,\n,Second,retail,,,\n")
    assert err.value.row == 3


def test_tags_split_on_semicolons():
    table = parse_metadata_csv(f"{HEADER}\nA,Shop,retail,,,ground; north ;\n")
    assert table.records[0].tags == ["ground", "north"]


def test_match_single_hit():
    doc = parse_svg(b'<svg><rect id="G163"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nG163,Support Center,information_desk,,,\n")
    result = match_metadata(doc, table)
    assert len(result.matched) == 1
    assert result.matched[0][0].get("id") == "G163"
    assert result.unmatched_records == []
    assert result.unmatched_candidate_elements == []


def test_match_empty_table_reports_all_candidates():
    doc = parse_svg(b'<svg><rect id="A"/><g id="B"><path id="C"/></g></svg>')
    result = match_metadata(doc, parse_metadata_csv(HEADER + "\n"))
    assert result.matched == []
    assert result.unmatched_candidate_elements == ["A", "B", "C"]


def test_match_case_insensitive_fallback():
    doc = parse_svg(b'<svg><rect id="g163"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nG163,Support Center,information_desk,,,\n")
    result = match_metadata(doc, table)
    assert len(result.matched) == 1
    assert result.matched[0][0].get("id") == "g163"


def test_match_element_consumed_at_most_once():
    doc = parse_svg(b'<svg><rect id="A"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nA,First,retail,,,\nA,Second,retail,,,\n")
    result = match_metadata(doc, table)
    assert len(result.matched) == 1
    assert [r.name for r in result.unmatched_records] == ["Second"]


def test_match_against_nested_loop_oracle():
    rng = random.Random(42)
    element_ids = [f"E{i:02d}" for i in range(45)]
    svg = "<svg>" + "".join(f'<rect id="{e}"/>' for e in element_ids) + "</svg>"
    doc = parse_svg(svg)
    overlap = rng.sample(element_ids, 40)
    record_ids = overlap + [f"MISS{i}" for i in range(10)]
    rng.shuffle(record_ids)
    rows = "".join(f"{rid},Room {rid},retail,,,\n" for rid in record_ids)
    table = parse_metadata_csv(HEADER + "\n" + rows)

    expected_matched, expected_unmatched, expected_leftover = nested_loop_join(record_ids, element_ids)
    result = match_metadata(doc, table)
    assert [(r.element_id, el.get("id")) for el, r in result.matched] == expected_matched
    assert [r.element_id for r in result.unmatched_records] == expected_unmatched
    assert result.unmatched_candidate_elements == expected_leftover
    assert len(result.matched) == 40
    assert len(result.unmatched_records) == 10


def test_match_conservation_and_determinism():
    doc = parse_svg(b'<svg><rect id="A"/><rect id="B"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nA,One,retail,,,\nZ,Gone,retail,,,\n")
    first = match_metadata(doc, table)
    second = match_metadata(doc, table)
    assert len(table) == len(first.matched) + len(first.unmatched_records)
    assert [(e.get("id"), r.element_id) for e, r in first.matched] == [
        (e.get("id"), r.element_id) for e, r in second.matched
    ]
    assert first.unmatched_candidate_elements == second.unmatched_candidate_elements
