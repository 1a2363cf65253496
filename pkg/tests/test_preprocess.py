from pathlib import Path

from adaptsvg.model import parse_svg, serialize_svg
from adaptsvg.preprocess import CleanConfig, clean, is_hidden, parse_style

from synth import synthetic_plan_svg

FIXTURES = Path(__file__).parent / "fixtures"

GEOMETRY_ATTRS = (
    "d", "points", "x", "y", "width", "height",
    "cx", "cy", "r", "rx", "ry", "x1", "y1", "x2", "y2",
)


def load_editor_export():
    return parse_svg(FIXTURES.joinpath("editor_export.svg").read_bytes(), "editor_export.svg")


def geometry_multiset(doc, skip_editor_prefixes=("sodipodi", "inkscape")):
    """Independent scan: multiset of (tag, geometry attrs) over visible
    elements, where hiddenness and editor/metadata status inherit down."""
    bag = []

    def walk(node):
        if is_hidden(node):
            return
        if ":" in node.tag and node.tag.split(":")[0] in skip_editor_prefixes:
            return
        if node.local_name == "metadata" or not node.is_element:
            return
        geo = tuple((a, node.get(a)) for a in GEOMETRY_ATTRS if node.get(a) is not None)
        if geo:
            bag.append((node.tag, geo))
        for child in node.children:
            walk(child)

    walk(doc.root)
    return sorted(bag)


def hidden_subtree_ids(doc):
    out = set()

    def walk(node, hidden):
        hidden = hidden or is_hidden(node)
        if hidden:
            out.add(id(node))
        for child in node.children:
            walk(child, hidden)

    walk(doc.root, False)
    return out


def test_metadata_removed_path_untouched():
    doc = parse_svg(b'<svg><metadata><x/></metadata><path d="M0 0 L1 1" id="p"/></svg>')
    cleaned, report = clean(doc)
    assert cleaned.root.find_child("metadata") is None
    assert cleaned.id_index["p"].get("d") == "M0 0 L1 1"
    assert report.removed_elements.get("metadata") == 1


def test_clean_already_clean_doc_is_identity():
    doc = parse_svg(synthetic_plan_svg(11))
    once, _ = clean(doc)
    twice, report = clean(once)
    assert twice == once
    assert report.removed_elements == {}
    assert report.removed_attributes == {}


def test_editor_fixture_hidden_count_is_twelve():
    # Hand count of the committed fixture: guide1..guide12.
    cleaned, report = clean(load_editor_export())
    assert report.removed_elements["hidden"] == 12
    assert not any(is_hidden(n) for n in cleaned.root.iter())


def test_editor_namespace_elements_and_attributes_removed():
    cleaned, report = clean(load_editor_export())
    out = serialize_svg(cleaned).decode()
    assert "sodipodi" not in out
    assert "inkscape" not in out
    assert "i:knockout" not in out
    assert report.removed_elements["editor_namespace"] == 1
    assert report.removed_attributes["sodipodi"] >= 1
    assert report.removed_attributes["inkscape"] >= 1
    assert report.removed_attributes["i"] >= 1


def test_comments_and_metadata_removed():
    cleaned, report = clean(load_editor_export())
    assert report.removed_elements["comment"] == 3  # one prolog + two inline
    assert report.removed_elements["metadata"] == 1
    assert cleaned.prolog == []


def test_singleton_group_collapsed_and_empty_group_dropped():
    cleaned, report = clean(load_editor_export())
    layer = cleaned.id_index["layer1"]
    assert [c.get("id") for c in layer.children if c.is_element] == ["roomA", "roomB", "roomC"]
    assert report.collapsed_groups == 1
    assert report.removed_elements["empty_group"] == 1


def test_group_with_attributes_not_collapsed():
    doc = parse_svg(b'<svg><g transform="translate(1 2)"><rect id="r"/></g></svg>')
    cleaned, _ = clean(doc)
    g = cleaned.root.children[0]
    assert g.tag == "g"
    assert g.get("transform") == "translate(1 2)"


def test_geometry_multiset_invariant():
    for name in ("editor_export.svg",):
        doc = parse_svg(FIXTURES.joinpath(name).read_bytes())
        expected = geometry_multiset(doc)
        cleaned, _ = clean(doc)
        assert geometry_multiset(cleaned) == expected
    for seed in range(4):
        doc = parse_svg(synthetic_plan_svg(seed))
        cleaned, _ = clean(doc)
        assert geometry_multiset(cleaned) == geometry_multiset(doc)


def test_idempotence_over_corpus():
    docs = [load_editor_export()] + [parse_svg(synthetic_plan_svg(s)) for s in range(4)]
    for doc in docs:
        once, _ = clean(doc)
        twice, _ = clean(once)
        assert twice == once


def test_keep_hidden_config():
    cleaned, report = clean(load_editor_export(), CleanConfig(strip_hidden=False))
    assert "hidden" not in report.removed_elements
    assert any(is_hidden(n) for n in cleaned.root.iter())


def test_keep_comments_config():
    doc = parse_svg(b"<svg><!-- note --><rect/></svg>")
    cleaned, report = clean(doc, CleanConfig(strip_comments_metadata=False))
    assert any(not c.is_element for c in cleaned.root.children)
    assert "comment" not in report.removed_elements


def test_extra_strip_tags():
    doc = parse_svg(b"<svg><defs><x/></defs><rect/></svg>")
    cleaned, report = clean(doc, CleanConfig(extra_strip_tags=("defs",)))
    assert cleaned.root.find_child("defs") is None
    assert report.removed_elements["extra_tag"] == 1


def test_monotonicity_more_flags_never_more_elements():
    doc = load_editor_export()
    configs = [
        CleanConfig(False, False, False, False),
        CleanConfig(True, False, False, False),
        CleanConfig(True, True, False, False),
        CleanConfig(True, True, True, False),
        CleanConfig(True, True, True, True),
    ]
    counts = [len(list(clean(doc, cfg)[0].root.iter())) for cfg in configs]
    assert counts == sorted(counts, reverse=True)


def test_hidden_removal_takes_whole_subtree():
    doc = load_editor_export()
    doomed = hidden_subtree_ids(doc)
    cleaned, _ = clean(doc)
    survivors = {id(n) for n in cleaned.root.iter()}
    # cleaned is a copy; compare by element ids instead of object identity
    hidden_ids = {n.get("id") for n in doc.root.iter() if id(n) in doomed and n.get("id")}
    kept_ids = {n.get("id") for n in cleaned.root.iter() if n.get("id")}
    assert hidden_ids.isdisjoint(kept_ids)
    assert survivors  # sanity


def test_parse_style_roundtrip_helpers():
    assert parse_style("fill:#fff; display : none") == {"fill": "#fff", "display": "none"}
    assert parse_style(None) == {}
