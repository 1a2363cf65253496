from adaptsvg.enrich import assign_tab_order, enrich_document, enriched_elements
from adaptsvg.layers import default_rules
from adaptsvg.metadata import MatchResult, match_metadata, parse_metadata_csv
from adaptsvg.model import parse_svg, serialize_svg

from synth import synthetic_plan_svg, synthetic_rooms_csv

HEADER = "element_id,name,category,department,description,tags"


def enriched_sample():
    doc = parse_svg(b'<svg><rect id="T1" x="5" y="5" width="10" height="10"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nT1,Toilet West,accessible_toilet,,Accessible toilet near lifts,\n")
    return enrich_document(doc, match_metadata(doc, table), default_rules())


def test_enriched_toilet_carries_full_attribute_set():
    doc = enriched_sample()
    node = doc.id_index["T1"]
    assert node.get("data-layer-bit-field") == "8"
    assert node.get("data-layer-state") == "inactive"
    assert node.get("data-category") == "accessible_toilet"
    assert node.get("tabindex") == "0"
    assert node.get("role") == "img"
    title = node.find_child("title")
    desc = node.find_child("desc")
    assert title.text == "Toilet West"
    assert desc.text == "Accessible toilet near lifts"
    assert node.get("aria-describedby") == desc.get("id")


def test_generated_description_uses_name_and_category():
    doc = parse_svg(b'<svg><rect id="S1"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nS1,North Stairs,stairs,,,\n")
    out = enrich_document(doc, match_metadata(doc, table), default_rules())
    assert out.id_index["S1"].find_child("desc").text == "North Stairs, stairs"


def test_empty_match_changes_nothing():
    doc = parse_svg(synthetic_plan_svg(7))
    out = enrich_document(doc, MatchResult(), default_rules())
    assert out == doc


def test_geometry_untouched_and_nothing_removed():
    doc = parse_svg(b'<svg><path id="P1" d="M1.5 2 L3 4"/><rect id="keep"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nP1,Ramp East,ramp,,,\n")
    out = enrich_document(doc, match_metadata(doc, table), default_rules())
    assert out.id_index["P1"].get("d") == "M1.5 2 L3 4"
    assert "keep" in out.id_index
    before = {n.get("id") for n in doc.root.iter() if n.get("id")}
    after = {n.get("id") for n in out.root.iter() if n.get("id")}
    assert before <= after


def test_enrichment_is_additive_subgraph():
    doc = parse_svg(synthetic_plan_svg(9, rooms=20))
    table = parse_metadata_csv(synthetic_rooms_csv(9, rooms=20))
    out = enrich_document(doc, match_metadata(doc, table), default_rules())

    def skeleton(node):
        return (node.tag, node.get("id"), [skeleton(c) for c in node.children if c.tag not in ("title", "desc")])

    assert skeleton(out.root) == skeleton(doc.root)


def test_enrichment_count_matches_attribute_scan():
    doc = parse_svg(synthetic_plan_svg(13, rooms=40))
    table = parse_metadata_csv(synthetic_rooms_csv(13, rooms=40))
    match = match_metadata(doc, table)
    out = enrich_document(doc, match, default_rules())
    scan = [n for n in out.root.iter() if n.get("aria-describedby")]
    assert len(scan) == len(match.matched) == 40


def test_aria_references_resolve():
    doc = parse_svg(synthetic_plan_svg(21, rooms=25))
    table = parse_metadata_csv(synthetic_rooms_csv(21, rooms=25))
    out = enrich_document(doc, match_metadata(doc, table), default_rules())
    for node in out.root.iter():
        ref = node.get("aria-describedby")
        if ref:
            target = out.id_index.get(ref)
            assert target is not None and target.tag == "desc"


def test_bitfield_attribute_matches_assign_bitfield():
    from adaptsvg.layers import assign_bitfield

    rules = default_rules()
    doc = parse_svg(synthetic_plan_svg(31, rooms=30))
    table = parse_metadata_csv(synthetic_rooms_csv(31, rooms=30))
    out = enrich_document(doc, match_metadata(doc, table), rules)
    for node in enriched_elements(out):
        value = int(node.get("data-layer-bit-field"))
        assert 0 <= value <= 15
        assert value == assign_bitfield(node.get("data-category"), rules)


def test_enrich_is_idempotent():
    doc = parse_svg(synthetic_plan_svg(17, rooms=15))
    table = parse_metadata_csv(synthetic_rooms_csv(17, rooms=15))
    rules = default_rules()
    match = match_metadata(doc, table)
    once = enrich_document(doc, match, rules)
    match_again = match_metadata(once, table)
    twice = enrich_document(once, match_again, rules)
    assert twice == once
    assert serialize_svg(twice) == serialize_svg(once)


def test_desc_id_collision_gets_deterministic_suffix():
    doc = parse_svg(b'<svg><rect id="af-desc-R1"/><rect id="R1"/></svg>')
    table = parse_metadata_csv(f"{HEADER}\nR1,Room,retail,,,\n")
    out = enrich_document(doc, match_metadata(doc, table), default_rules())
    desc = out.id_index["R1"].find_child("desc")
    assert desc.get("id") == "af-desc-R1-2"
    assert any("af-desc-R1" in w for w in out.warnings)


def test_title_inserted_before_desc_and_first():
    doc = parse_svg(b'<svg><g id="G1"><rect/></g></svg>')
    table = parse_metadata_csv(f"{HEADER}\nG1,Lobby,other,,,\n")
    out = enrich_document(doc, match_metadata(doc, table), default_rules())
    tags = [c.tag for c in out.id_index["G1"].children]
    assert tags[:2] == ["title", "desc"]


def test_assign_tab_order_zero_elements_unchanged():
    doc = parse_svg(synthetic_plan_svg(3))
    assert assign_tab_order(doc) == doc


def test_assign_tab_order_document_order():
    doc = parse_svg(synthetic_plan_svg(23, rooms=10))
    table = parse_metadata_csv(synthetic_rooms_csv(23, rooms=10))
    out = assign_tab_order(enrich_document(doc, match_metadata(doc, table), default_rules()))
    focusable = [n for n in out.root.iter() if n.get("tabindex") == "0"]
    assert focusable == enriched_elements(out)
    ids = [n.get("id") for n in focusable]
    document_order = [n.get("id") for n in out.root.iter() if n.get("id") in set(ids)]
    assert ids == document_order


def test_assign_tab_order_normalizes_stray_values():
    doc = enriched_sample()
    doc.id_index["T1"].set("tabindex", "5")
    fixed = assign_tab_order(doc)
    assert fixed.id_index["T1"].get("tabindex") == "0"
