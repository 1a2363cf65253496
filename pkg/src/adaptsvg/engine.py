"""The adaptation engine: profile → layer mask → per-element state → styled view.

Activation is a bitwise AND between an element's membership mask (stamped by
the enricher) and the profile mask. Conflicting actions from several active
layers resolve by the rule set's precedence; the shipped default prefers
highlight over hide so safety information survives, e.g. a low-vision
highlight of stairs beats the mobility hide.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .color import contrast_ratio, format_hex, parse_hex
from .enrich import BITFIELD_ATTR, CATEGORY_ATTR, STATE_ATTR, enriched_elements
from .layers import LayerRules
from .metadata import CATEGORIES
from .model import ElementNode, FloorplanDocument
from .palette import PaintDefinition, Palette, default_palette, half_fill_paint
from .preprocess import format_style, parse_style

FILL_MODES = ("full", "half", "pattern")
FONTS = ("default", "large_print", "open_dyslexic")

DEFAULT_BACKGROUND = "#FFFFFF"
LARGE_PRINT_SCALE = 1.5

# Category colours drawn from the 5-colour base palette; pairs sharing a base
# colour are split into solid/half-fill variants in "half" mode, giving ten
# distinguishable paints.
DEFAULT_CATEGORY_COLOURS = {
    "retail": "#FFB000",
    "toilet": "#785EF0",
    "accessible_toilet": "#785EF0",
    "elevator": "#DC267F",
    "stairs": "#FE6100",
    "ramp": "#DC267F",
    "entrance": "#FE6100",
    "accessible_entrance": "#648FFF",
    "exit": "#648FFF",
    "information_desk": "#FFB000",
}

# Highlight = outline plus fill emphasis: base fills render slightly muted and
# highlighted elements at full saturation, so the cue never rests on one channel.
_HIGHLIGHT_PROPS = {"stroke": "#000000", "stroke-width": "3", "stroke-linejoin": "round"}
BASE_FILL_OPACITY = "0.85"
HIGHLIGHT_FILL_OPACITY = "1"
_HALO_PROPS = {"paint-order": "stroke", "stroke": "#FFFFFF", "stroke-width": "3", "stroke-linejoin": "round"}

_FONT_FAMILIES = {
    "default": "sans-serif",
    "large_print": "sans-serif",
    "open_dyslexic": "OpenDyslexic, sans-serif",
}


class StyleError(ValueError):
    pass


@dataclass(frozen=True)
class DisabilityProfile:
    low_vision: bool = False
    colour_impairment: bool = False
    dyslexia: bool = False
    mobility_impairment: bool = False

    def flags(self) -> dict[str, bool]:
        return {
            "low_vision": self.low_vision,
            "colour_impairment": self.colour_impairment,
            "dyslexia": self.dyslexia,
            "mobility_impairment": self.mobility_impairment,
        }


@dataclass
class ElementState:
    visible: bool = True
    highlighted: bool = False
    active: bool = False
    annotations: list[str] = field(default_factory=list)


@dataclass
class StyleOptions:
    category_colours: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_CATEGORY_COLOURS))
    fill_mode: str = "half"
    font: str = "default"
    overridden: set[str] = field(default_factory=set)
    font_overridden: bool = False
    background: str = DEFAULT_BACKGROUND
    warnings: list[str] = field(default_factory=list)


def default_style() -> StyleOptions:
    return StyleOptions()


def profile_mask(profile: DisabilityProfile, rules: LayerRules) -> int:
    """OR of the bits of every disability the profile declares."""
    mask = 0
    for disability, enabled in profile.flags().items():
        if enabled and disability in rules.bits:
            mask |= rules.mask(disability)
    return mask


def element_state(membership: int, category: str, p_mask: int, rules: LayerRules) -> ElementState:
    """Resolve one element against one profile mask.

    Active iff the masks intersect. Actions are collected from every rule that
    is active for (category, disability) and resolved by precedence; hidden
    elements are never highlighted.
    """
    state = ElementState(active=(membership & p_mask) != 0)
    if not state.active:
        return state

    actions: set[str] = set()
    for rule in rules.rules_for(category):
        bit = rules.mask(rule.disability)
        if (membership & bit) and (p_mask & bit):
            actions.add(rule.action)
            if rule.action == "annotate":
                state.annotations.append(rule.disability)
    state.annotations.sort()

    for action in rules.precedence:
        if action in actions:
            if action == "highlight":
                state.highlighted = True
            elif action == "hide":
                state.visible = False
            break
    return state


def set_category_color(style: StyleOptions, category: str, colour: str) -> StyleOptions:
    """Override one category colour at run time; returns a new StyleOptions.

    Attaches a warning when the new colour has less than 3.0:1 contrast
    against the background.
    """
    if category not in CATEGORIES:
        raise StyleError(f"unknown category {category!r}")
    rgb = parse_hex(colour)
    new = replace(
        style,
        category_colours={**style.category_colours, category: format_hex(rgb)},
        overridden=set(style.overridden) | {category},
        warnings=list(style.warnings),
    )
    ratio = contrast_ratio(rgb, parse_hex(style.background))
    if ratio < 3.0:
        new.warnings.append(
            f"colour {format_hex(rgb)} for {category!r} has contrast {ratio:.2f}:1 against the background"
        )
    return new


def set_font(style: StyleOptions, font: str) -> StyleOptions:
    if font not in FONTS:
        raise StyleError(f"unknown font {font!r}; options: {', '.join(FONTS)}")
    return replace(
        style,
        font=font,
        font_overridden=True,
        overridden=set(style.overridden),
        category_colours=dict(style.category_colours),
        warnings=list(style.warnings),
    )


def resolve_fills(
    style: StyleOptions, categories_present: list[str], palette: Palette
) -> tuple[dict[str, str], list[PaintDefinition]]:
    """fill value per coloured category present, plus the paint defs needed.

    In half mode, categories sharing a base colour are split deterministically
    (vocabulary order): first keeps the solid fill, later ones get the
    half-fill gradient. In pattern mode each category gets its own pattern;
    more categories than patterns is an error.
    """
    ordered = [c for c in CATEGORIES if c in categories_present and c in style.category_colours]
    fills: dict[str, str] = {}
    defs: list[PaintDefinition] = []

    if style.fill_mode == "full":
        for category in ordered:
            fills[category] = style.category_colours[category]
    elif style.fill_mode == "half":
        seen_colours: set[str] = set()
        for category in ordered:
            colour = style.category_colours[category]
            if colour in seen_colours:
                paint = half_fill_paint(colour)
                fills[category] = paint.fill_value
                if all(d.paint_id != paint.paint_id for d in defs):
                    defs.append(paint)
            else:
                seen_colours.add(colour)
                fills[category] = colour
    elif style.fill_mode == "pattern":
        if len(ordered) > len(palette.patterns):
            raise StyleError(
                f"pattern mode needs {len(ordered)} patterns but the palette has {len(palette.patterns)}"
            )
        for index, category in enumerate(ordered):
            paint = palette.patterns[index]
            fills[category] = paint.fill_value
            defs.append(paint)
    else:
        raise StyleError(f"unknown fill mode {style.fill_mode!r}; options: {', '.join(FILL_MODES)}")
    return fills, defs


def _ensure_defs(doc: FloorplanDocument, paints: list[PaintDefinition]) -> None:
    if not paints:
        return
    defs = None
    for child in doc.root.children:
        if child.tag == "defs":
            defs = child
            break
    if defs is None:
        defs = ElementNode(tag="defs")
        doc.root.children.insert(0, defs)
    existing = {c.get("id") for c in defs.children}
    for paint in sorted(paints, key=lambda p: p.paint_id):
        if paint.paint_id not in existing and paint.node is not None:
            defs.children.append(paint.node.copy())
            existing.add(paint.paint_id)


def _merge_style(node: ElementNode, props: dict[str, str]) -> None:
    merged = parse_style(node.get("style"))
    merged.update(props)
    node.set("style", format_style(merged))


def _set_fill(node: ElementNode, fill: str) -> None:
    props = parse_style(node.get("style"))
    if "fill" in props:
        del props["fill"]
        if props:
            node.set("style", format_style(props))
        else:
            node.attributes.pop("style", None)
    node.set("fill", fill)


def _scale_font_size(node: ElementNode) -> None:
    raw = node.get("font-size")
    props = parse_style(node.get("style"))
    if raw is None and "font-size" in props:
        raw = props["font-size"]
    if raw is None:
        node.set("font-size", f"{LARGE_PRINT_SCALE}em")
        return
    number = ""
    for ch in raw:
        if ch.isdigit() or ch in ".-":
            number += ch
        else:
            break
    unit = raw[len(number):]
    try:
        scaled = float(number) * LARGE_PRINT_SCALE
    except ValueError:
        node.set("font-size", f"{LARGE_PRINT_SCALE}em")
        return
    value = f"{scaled:g}{unit}"
    if "font-size" in props:
        _merge_style(node, {"font-size": value})
    else:
        node.set("font-size", value)


def apply_view(
    doc: FloorplanDocument,
    profile: DisabilityProfile,
    style: StyleOptions,
    rules: LayerRules,
    palette: Palette | None = None,
) -> FloorplanDocument:
    """Render an enriched document for one profile.

    Updates data-layer-state on every enriched element, hides/highlights per
    the resolved states, rewrites fills per the style options and applies the
    font choice to all text. A dyslexia profile switches the font to
    open_dyslexic unless the user chose one explicitly.
    """
    palette = palette or default_palette()
    out = doc.copy()
    p_mask = profile_mask(profile, rules)

    font = style.font
    if profile.dyslexia and not style.font_overridden and font == "default":
        font = "open_dyslexic"

    elements = enriched_elements(out)
    present = sorted({n.get(CATEGORY_ATTR) for n in elements if n.get(CATEGORY_ATTR)})
    fills, paints = resolve_fills(style, present, palette)
    _ensure_defs(out, paints)

    for node in elements:
        category = node.get(CATEGORY_ATTR, "")
        if category not in CATEGORIES:
            out.warnings.append(f"unknown category {category!r} on element {node.get('id')!r}")
        try:
            membership = int(node.get(BITFIELD_ATTR, "0"))
        except ValueError:
            out.warnings.append(f"bad {BITFIELD_ATTR} on element {node.get('id')!r}")
            membership = 0
        state = element_state(membership, category, p_mask, rules)
        node.set(STATE_ATTR, "active" if state.active else "inactive")
        if category in fills:
            _set_fill(node, fills[category])
            node.set("fill-opacity", BASE_FILL_OPACITY)
        if not state.visible:
            _merge_style(node, {"display": "none"})
        elif state.highlighted:
            _merge_style(node, dict(_HIGHLIGHT_PROPS))
            node.set("fill-opacity", HIGHLIGHT_FILL_OPACITY)

    for node in out.root.iter():
        if node.local_name != "text":
            continue
        node.set("font-family", _FONT_FAMILIES[font])
        if font == "large_print":
            _scale_font_size(node)
        if style.fill_mode == "pattern":
            _merge_style(node, dict(_HALO_PROPS))

    out.reindex()
    return out
