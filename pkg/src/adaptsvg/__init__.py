"""adaptsvg: turn SVG floorplans into adaptive, accessibility-aware graphics."""

__version__ = "0.1.0"

from .engine import (
    DisabilityProfile,
    ElementState,
    StyleOptions,
    apply_view,
    default_style,
    element_state,
    profile_mask,
    set_category_color,
    set_font,
)
from .enrich import assign_tab_order, enrich_document, enriched_elements
from .layers import LayerRule, LayerRules, assign_bitfield, default_rules
from .metadata import (
    MatchResult,
    MetadataRecord,
    MetadataTable,
    match_metadata,
    parse_metadata_csv,
)
from .model import (
    ElementNode,
    FloorplanDocument,
    SvgParseError,
    find_element,
    list_elements,
    parse_svg,
    serialize_svg,
)
from .palette import Palette, default_palette, half_fill_paint, pattern_paint, validate_palette
from .preprocess import CleanConfig, CleanReport, clean
from .color import contrast_ratio, relative_luminance, simulate_cvd
from .validate import Finding, validate_document

__all__ = [
    "__version__",
    "CleanConfig",
    "CleanReport",
    "DisabilityProfile",
    "ElementNode",
    "ElementState",
    "Finding",
    "FloorplanDocument",
    "LayerRule",
    "LayerRules",
    "MatchResult",
    "MetadataRecord",
    "MetadataTable",
    "Palette",
    "StyleOptions",
    "SvgParseError",
    "apply_view",
    "assign_bitfield",
    "assign_tab_order",
    "clean",
    "contrast_ratio",
    "default_palette",
    "default_rules",
    "default_style",
    "element_state",
    "enrich_document",
    "enriched_elements",
    "find_element",
    "half_fill_paint",
    "list_elements",
    "match_metadata",
    "parse_metadata_csv",
    "parse_svg",
    "pattern_paint",
    "profile_mask",
    "relative_luminance",
    "serialize_svg",
    "set_category_color",
    "set_font",
    "simulate_cvd",
    "validate_document",
    "validate_palette",
]
