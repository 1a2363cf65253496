import pytest

from adaptsvg.layers import (
    DEFAULT_BITS,
    LayerRule,
    LayerRules,
    LayerRulesError,
    assign_bitfield,
    default_rules,
)


def test_default_bit_table():
    rules = default_rules()
    assert rules.bits == DEFAULT_BITS
    assert rules.precedence == ("highlight", "hide", "annotate")


def test_bitfield_no_rule_is_base_layer():
    assert assign_bitfield("retail", default_rules()) == 0


def test_bitfield_stairs():
    # Hand recomputation from the shipped rule set: stairs has a mobility rule
    # (bit 3 -> 8) and a low-vision rule (bit 0 -> 1).
    assert assign_bitfield("stairs", default_rules()) == 9


def test_bitfield_elevator():
    # Elevator: mobility highlight only -> 8.
    assert assign_bitfield("elevator", default_rules()) == 8


def test_bitfield_whole_default_table():
    expected = {
        "retail": 0,
        "toilet": 0,
        "accessible_toilet": 8,
        "elevator": 8,
        "stairs": 9,
        "ramp": 8,
        "entrance": 1,
        "accessible_entrance": 8,
        "exit": 1,
        "information_desk": 1,
        "corridor": 0,
        "parking": 0,
        "other": 0,
    }
    rules = default_rules()
    assert {c: assign_bitfield(c, rules) for c in expected} == expected


def test_bitfields_in_range():
    rules = default_rules()
    for category in ("stairs", "elevator", "retail", "entrance", "nonsense"):
        assert 0 <= assign_bitfield(category, rules) <= 15


def test_duplicate_bits_rejected():
    with pytest.raises(LayerRulesError):
        LayerRules(bits={"low_vision": 0, "mobility_impairment": 0})


def test_bit_out_of_range_rejected():
    with pytest.raises(LayerRulesError):
        LayerRules(bits={"low_vision": 4})


def test_conflicting_rule_pair_rejected():
    with pytest.raises(LayerRulesError):
        LayerRules(
            rules=[
                LayerRule("stairs", "mobility_impairment", "hide"),
                LayerRule("stairs", "mobility_impairment", "highlight"),
            ]
        )


def test_unknown_action_rejected():
    with pytest.raises(LayerRulesError):
        LayerRules(rules=[LayerRule("stairs", "mobility_impairment", "vanish")])


def test_rules_roundtrip_through_mapping():
    rules = default_rules()
    again = LayerRules.from_mapping(rules.to_mapping())
    assert again == rules


def test_rules_load_from_file(tmp_path):
    path = tmp_path / "rules.json"
    path.write_text(
        '{"bits": {"low_vision": 0, "mobility_impairment": 3},'
        ' "rules": [{"category": "stairs", "disability": "mobility_impairment", "action": "hide"}],'
        ' "precedence": ["hide", "highlight", "annotate"]}'
    )
    rules = LayerRules.load(path)
    assert rules.precedence[0] == "hide"
    assert assign_bitfield("stairs", rules) == 8
