"""Accessible paints: the colorblind-safe base palette, half-fill gradients
and monochrome pattern fills.

Paint element ids are part of the file contract: `af-halffill-<hex>` for the
hard-stop 50/50 gradients and `af-pattern-<n>` for patterns. Half-fill doubles
the distinguishable fill options of the 5-colour base palette.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .color import Rgb, delta_e, format_hex, parse_hex, simulate_cvd
from .model import ElementNode


@dataclass
class PaintDefinition:
    paint_id: str
    kind: str  # solid | half_fill | pattern
    name: str
    node: ElementNode | None = None
    colour: str | None = None

    @property
    def fill_value(self) -> str:
        if self.kind == "solid":
            return self.colour or "#000000"
        return f"url(#{self.paint_id})"


def half_fill_paint(colour: str | Rgb) -> PaintDefinition:
    """Hard-stop two-colour gradient: left half the colour, right half white.

    Deterministic id af-halffill-<hex>, so repeated requests deduplicate.
    """
    rgb = parse_hex(colour) if isinstance(colour, str) else colour
    hex_upper = format_hex(rgb)
    paint_id = f"af-halffill-{hex_upper[1:].lower()}"
    gradient = ElementNode(
        tag="linearGradient",
        attributes={"id": paint_id, "x1": "0", "y1": "0", "x2": "1", "y2": "0"},
        children=[
            ElementNode("stop", {"offset": "0", "stop-color": hex_upper}),
            ElementNode("stop", {"offset": "0.5", "stop-color": hex_upper}),
            ElementNode("stop", {"offset": "0.5", "stop-color": "#FFFFFF"}),
            ElementNode("stop", {"offset": "1", "stop-color": "#FFFFFF"}),
        ],
    )
    return PaintDefinition(paint_id, "half_fill", f"half {hex_upper}", gradient, hex_upper)


def _pattern_node(paint_id: str, marks: list[ElementNode], size: int = 8) -> ElementNode:
    background = ElementNode(
        "rect", {"x": "0", "y": "0", "width": str(size), "height": str(size), "fill": "#FFFFFF"}
    )
    return ElementNode(
        tag="pattern",
        attributes={
            "id": paint_id,
            "patternUnits": "userSpaceOnUse",
            "width": str(size),
            "height": str(size),
        },
        children=[background] + marks,
    )


def _stroke_path(d: str, width: str = "1.5") -> ElementNode:
    return ElementNode("path", {"d": d, "stroke": "#000000", "stroke-width": width, "fill": "none"})


# Simple, high-contrast monochrome patterns; text is painted above them with
# an opaque halo so labels stay legible.
_PATTERN_BUILDERS: list[tuple[str, "list[ElementNode]"]] = [
    ("diagonal-stripes", [_stroke_path("M-2 2 L2 -2 M0 8 L8 0 M6 10 L10 6")]),
    ("dots", [ElementNode("circle", {"cx": "4", "cy": "4", "r": "1.5", "fill": "#000000"})]),
    ("crosshatch", [_stroke_path("M0 0 L8 8 M8 0 L0 8", "1.2")]),
    ("horizontal-lines", [_stroke_path("M0 4 L8 4")]),
    ("vertical-lines", [_stroke_path("M4 0 L4 8")]),
    ("reverse-diagonal-stripes", [_stroke_path("M-2 6 L2 10 M0 0 L8 8 M6 -2 L10 2")]),
    ("grid", [_stroke_path("M0 4 L8 4 M4 0 L4 8", "1.2")]),
    ("rings", [ElementNode("circle", {"cx": "4", "cy": "4", "r": "2.4", "stroke": "#000000", "stroke-width": "1.2", "fill": "none"})]),
    ("zigzag", [_stroke_path("M0 6 L4 2 L8 6", "1.2")]),
    (
        "checkerboard",
        [
            ElementNode("rect", {"x": "0", "y": "0", "width": "4", "height": "4", "fill": "#000000"}),
            ElementNode("rect", {"x": "4", "y": "4", "width": "4", "height": "4", "fill": "#000000"}),
        ],
    ),
]

PATTERN_NAMES = tuple(name for name, _ in _PATTERN_BUILDERS)


def pattern_paint(index: int) -> PaintDefinition:
    """Pattern fill by catalogue index; id af-pattern-<n>."""
    if not 0 <= index < len(_PATTERN_BUILDERS):
        raise ValueError(f"pattern index {index} out of range 0..{len(_PATTERN_BUILDERS) - 1}")
    name, marks = _PATTERN_BUILDERS[index]
    paint_id = f"af-pattern-{index}"
    return PaintDefinition(
        paint_id, "pattern", name, _pattern_node(paint_id, [m.copy() for m in marks])
    )


@dataclass
class Palette:
    base_colours: list[str]
    half_fill_variants: list[PaintDefinition] = field(default_factory=list)
    patterns: list[PaintDefinition] = field(default_factory=list)

    def paint_options(self) -> list[PaintDefinition]:
        """The doubled option list: every base colour solid, then half-filled."""
        solids = [
            PaintDefinition(f"solid-{c[1:].lower()}", "solid", f"solid {c}", colour=c)
            for c in self.base_colours
        ]
        return solids + list(self.half_fill_variants)


def _data_json(name: str) -> dict:
    text = resources.files("adaptsvg").joinpath(f"data/{name}").read_text(encoding="utf-8")
    return json.loads(text)


def default_palette() -> Palette:
    """The shipped palette: IBM Design's colorblind-safe base colours plus the
    derived half-fill paints and the pattern catalogue."""
    base = list(_data_json("ibm_palette.json")["base_colours"])
    return Palette(
        base_colours=base,
        half_fill_variants=[half_fill_paint(c) for c in base],
        patterns=[pattern_paint(i) for i in range(len(_PATTERN_BUILDERS))],
    )


def load_palette(path: str | Path) -> Palette:
    """Palette from a JSON config ({"base_colours": [...]}, hex values)."""
    mapping = json.loads(Path(path).read_text(encoding="utf-8"))
    base = [format_hex(parse_hex(c)) for c in mapping["base_colours"]]
    return Palette(
        base_colours=base,
        half_fill_variants=[half_fill_paint(c) for c in base],
        patterns=[pattern_paint(i) for i in range(len(_PATTERN_BUILDERS))],
    )


@dataclass
class PaletteReport:
    kind: str
    pair_count: int
    min_distance: float | None
    min_pair: tuple[str, str] | None
    floor: float
    passed: bool

    def to_mapping(self) -> dict:
        return {
            "kind": self.kind,
            "pair_count": self.pair_count,
            "min_distance": self.min_distance,
            "min_pair": list(self.min_pair) if self.min_pair else None,
            "floor": self.floor,
            "passed": self.passed,
        }


def distance_floor(kind: str) -> float:
    return float(_data_json("palette_floors.json")[kind])


def validate_palette(palette: Palette, kind: str, floor: float | None = None) -> PaletteReport:
    """Check pairwise perceptual distance of the simulated base colours.

    The default floor per kind was derived once from the shipped palette's own
    minimum pair and committed to the package data. A palette with no pairs
    passes vacuously.
    """
    if floor is None:
        floor = distance_floor(kind)
    simulated = [(c, simulate_cvd(parse_hex(c), kind)) for c in palette.base_colours]
    min_distance: float | None = None
    min_pair: tuple[str, str] | None = None
    pair_count = 0
    for i in range(len(simulated)):
        for j in range(i + 1, len(simulated)):
            pair_count += 1
            d = delta_e(simulated[i][1], simulated[j][1])
            if min_distance is None or d < min_distance:
                min_distance = d
                min_pair = (simulated[i][0], simulated[j][0])
    passed = min_distance is None or min_distance >= floor
    return PaletteReport(kind, pair_count, min_distance, min_pair, floor, passed)
