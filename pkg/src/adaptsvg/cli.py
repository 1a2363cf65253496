"""Command-line pipeline: clean → enrich → adapt → validate → simulate-cvd.

Stage errors abort with a single structured error on stderr and a non-zero
exit; warnings and findings go into the JSON report and never abort.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .color import format_hex, parse_colour, parse_hex, simulate_cvd
from .engine import (
    FILL_MODES,
    FONTS,
    DisabilityProfile,
    StyleError,
    apply_view,
    default_style,
    set_category_color,
    set_font,
)
from .enrich import assign_tab_order, enrich_document, enriched_elements
from .layers import LayerRules, LayerRulesError, default_rules
from .metadata import MetadataError, match_metadata, parse_metadata_csv
from .model import FloorplanDocument, SvgParseError, parse_svg, serialize_svg
from .palette import Palette, default_palette, load_palette, validate_palette
from .preprocess import CleanConfig, clean
from .validate import validate_document

RULES_ENV_VAR = "AF_RULES"


class PipelineError(Exception):
    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(message)


@dataclass
class PipelineConfig:
    input_path: Path
    output_path: Path | None = None
    metadata_path: Path | None = None
    rules_path: Path | None = None
    palette_path: Path | None = None
    report_path: Path | None = None
    profile: DisabilityProfile = field(default_factory=DisabilityProfile)
    clean_config: CleanConfig = field(default_factory=CleanConfig)
    fill_mode: str | None = None
    font: str | None = None
    colour_overrides: dict[str, str] = field(default_factory=dict)
    in_place: bool = False
    mode: str = "adapt"  # clean | enrich | adapt

    def resolve_output(self) -> Path | None:
        if self.in_place:
            return self.input_path
        if self.output_path is not None and self.output_path.resolve() == self.input_path.resolve():
            raise PipelineError("output", "refusing to overwrite the input; pass --in-place")
        return self.output_path


@dataclass
class PipelineResult:
    status: int
    report: dict
    document: FloorplanDocument | None = None


def _load_rules(path: Path | None) -> LayerRules:
    if path is None:
        env = os.environ.get(RULES_ENV_VAR)
        path = Path(env) if env else None
    if path is None:
        return default_rules()
    try:
        return LayerRules.load(path)
    except (OSError, json.JSONDecodeError, LayerRulesError) as exc:
        raise PipelineError("rules", f"cannot load rules from {path}: {exc}") from exc


def _load_palette(path: Path | None) -> Palette:
    if path is None:
        return default_palette()
    try:
        return load_palette(path)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise PipelineError("palette", f"cannot load palette from {path}: {exc}") from exc


def run_pipeline(cfg: PipelineConfig) -> PipelineResult:
    """Run clean → match → enrich (→ adapt) and assemble the JSON report."""
    report: dict = {
        "schema": "adaptsvg-report/1",
        "tool": {"name": "adaptsvg", "version": __version__},
        "mode": cfg.mode,
        "input": str(cfg.input_path),
        "stages": [],
        "findings": [],
        "warnings": [],
    }
    output_path = cfg.resolve_output()

    try:
        raw = cfg.input_path.read_bytes()
    except OSError as exc:
        raise PipelineError("read", str(exc)) from exc
    try:
        doc = parse_svg(raw, source_name=cfg.input_path.name)
    except SvgParseError as exc:
        raise PipelineError("parse", str(exc)) from exc
    report["warnings"].extend(doc.warnings)

    doc, clean_report = clean(doc, cfg.clean_config)
    report["stages"].append({"stage": "clean", **clean_report.to_mapping()})

    rules = _load_rules(cfg.rules_path)
    palette = _load_palette(cfg.palette_path)

    if cfg.mode in ("enrich", "adapt") and cfg.metadata_path is not None:
        try:
            table = parse_metadata_csv(cfg.metadata_path.read_bytes())
        except OSError as exc:
            raise PipelineError("metadata", str(exc)) from exc
        except MetadataError as exc:
            raise PipelineError("metadata", str(exc)) from exc
        report["warnings"].extend(table.warnings)
        match = match_metadata(doc, table)
        report["stages"].append(
            {
                "stage": "match",
                "records": len(table),
                "matched": len(match.matched),
                "unmatched_records": [r.element_id for r in match.unmatched_records],
                "unmatched_candidate_elements": match.unmatched_candidate_elements,
            }
        )
        doc = assign_tab_order(enrich_document(doc, match, rules))
        report["stages"].append({"stage": "enrich", "enriched": len(enriched_elements(doc))})
        report["warnings"].extend(w for w in doc.warnings if w not in report["warnings"])

    style_fill_mode = cfg.fill_mode
    if cfg.mode == "adapt":
        style = default_style()
        if cfg.fill_mode:
            style.fill_mode = cfg.fill_mode
        try:
            if cfg.font:
                style = set_font(style, cfg.font)
            for category, colour in cfg.colour_overrides.items():
                style = set_category_color(style, category, colour)
            doc = apply_view(doc, cfg.profile, style, rules, palette)
        except (StyleError, ValueError) as exc:
            raise PipelineError("adapt", str(exc)) from exc
        report["warnings"].extend(style.warnings)
        states = [n.get("data-layer-state") for n in enriched_elements(doc)]
        report["stages"].append(
            {
                "stage": "adapt",
                "profile": cfg.profile.flags(),
                "fill_mode": style.fill_mode,
                "font": style.font,
                "active": states.count("active"),
                "inactive": states.count("inactive"),
            }
        )
        style_fill_mode = style.fill_mode

    findings = validate_document(doc, style_fill_mode, palette)
    report["findings"] = [f.to_mapping() for f in findings]
    report["stages"].append({"stage": "validate", "findings": len(findings)})

    if output_path is not None:
        try:
            output_path.write_bytes(serialize_svg(doc))
            report["output"] = str(output_path)
        except OSError as exc:
            raise PipelineError("write", str(exc)) from exc

    if cfg.report_path is not None:
        cfg.report_path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return PipelineResult(status=0, report=report, document=doc)


def _simulate_document(doc: FloorplanDocument, kind: str) -> FloorplanDocument:
    """Rewrite every resolvable colour in fills/strokes/stops for a preview of
    the plan as a dichromat sees it."""
    from .preprocess import format_style, parse_style

    out = doc.copy()
    colour_attrs = ("fill", "stroke", "stop-color", "color")
    for node in out.root.iter():
        for attr in colour_attrs:
            value = node.get(attr)
            if value:
                rgb = parse_colour(value)
                if rgb is not None:
                    node.set(attr, format_hex(simulate_cvd(rgb, kind)))
        style = parse_style(node.get("style"))
        changed = False
        for prop in colour_attrs:
            if prop in style:
                rgb = parse_colour(style[prop])
                if rgb is not None:
                    style[prop] = format_hex(simulate_cvd(rgb, kind))
                    changed = True
        if changed:
            node.set("style", format_style(style))
    return out


def _add_io_arguments(parser: argparse.ArgumentParser, output_required: bool = True) -> None:
    parser.add_argument("input", type=Path, help="input SVG file")
    parser.add_argument("-o", "--output", type=Path, required=False, help="output SVG file")
    parser.add_argument("--in-place", action="store_true", help="overwrite the input file")
    parser.add_argument("--report", type=Path, help="write a JSON report here")


def _add_clean_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--keep-hidden", action="store_true", help="keep display:none/visibility:hidden elements")
    parser.add_argument("--keep-editor-namespaces", action="store_true")
    parser.add_argument("--keep-comments", action="store_true", help="keep comments and <metadata>")
    parser.add_argument("--no-collapse-groups", action="store_true")
    parser.add_argument("--strip-tag", action="append", default=[], metavar="TAG", help="also remove these tags")


def _clean_config(args: argparse.Namespace) -> CleanConfig:
    return CleanConfig(
        strip_editor_namespaces=not args.keep_editor_namespaces,
        strip_hidden=not args.keep_hidden,
        strip_comments_metadata=not args.keep_comments,
        collapse_singleton_groups=not args.no_collapse_groups,
        extra_strip_tags=tuple(args.strip_tag),
    )


def _profile_from(args: argparse.Namespace) -> DisabilityProfile:
    return DisabilityProfile(
        low_vision=args.low_vision,
        colour_impairment=args.colour_impaired,
        dyslexia=args.dyslexia,
        mobility_impairment=args.mobility,
    )


def _parse_colour_overrides(pairs: list[str]) -> dict[str, str]:
    overrides = {}
    for pair in pairs:
        if "=" not in pair:
            raise PipelineError("arguments", f"--colour expects CATEGORY=HEX, got {pair!r}")
        category, _, colour = pair.partition("=")
        overrides[category.strip()] = colour.strip()
    return overrides


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adaptsvg", description=__doc__)
    parser.add_argument("--version", action="version", version=f"adaptsvg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_clean = sub.add_parser("clean", help="strip editor debris from an SVG")
    _add_io_arguments(p_clean)
    _add_clean_arguments(p_clean)

    p_enrich = sub.add_parser("enrich", help="clean, join CSV metadata and inject accessibility markup")
    _add_io_arguments(p_enrich)
    _add_clean_arguments(p_enrich)
    p_enrich.add_argument("--metadata", type=Path, required=True, help="room metadata CSV")
    p_enrich.add_argument("--rules", type=Path, help=f"layer rules JSON (default ${RULES_ENV_VAR} or shipped)")

    p_adapt = sub.add_parser("adapt", help="enrich and render the view for a disability profile")
    _add_io_arguments(p_adapt)
    _add_clean_arguments(p_adapt)
    p_adapt.add_argument("--metadata", type=Path, help="room metadata CSV (omit for an already-enriched SVG)")
    p_adapt.add_argument("--rules", type=Path)
    p_adapt.add_argument("--palette", type=Path, help="palette JSON override")
    p_adapt.add_argument("--low-vision", action="store_true")
    p_adapt.add_argument("--colour-impaired", action="store_true")
    p_adapt.add_argument("--dyslexia", action="store_true")
    p_adapt.add_argument("--mobility", action="store_true")
    p_adapt.add_argument("--fill-mode", choices=FILL_MODES)
    p_adapt.add_argument("--font", choices=FONTS)
    p_adapt.add_argument("--colour", action="append", default=[], metavar="CATEGORY=HEX")

    p_validate = sub.add_parser("validate", help="report guideline findings for an adaptive SVG")
    p_validate.add_argument("input", type=Path)
    p_validate.add_argument("--report", type=Path)
    p_validate.add_argument("--fill-mode", choices=FILL_MODES)

    p_sim = sub.add_parser("simulate-cvd", help="recolour a plan as a dichromat sees it")
    p_sim.add_argument("input", type=Path)
    p_sim.add_argument("-o", "--output", type=Path, required=True)
    p_sim.add_argument("--kind", choices=("protanopia", "deuteranopia", "tritanopia"), required=True)

    p_palette = sub.add_parser("palette", help="inspect the shipped palette")
    p_palette.add_argument("action", choices=("list", "check"))
    p_palette.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _cmd_pipeline(args: argparse.Namespace, mode: str) -> int:
    cfg = PipelineConfig(
        input_path=args.input,
        output_path=args.output,
        report_path=args.report,
        in_place=args.in_place,
        clean_config=_clean_config(args),
        mode=mode,
    )
    if mode in ("enrich", "adapt"):
        cfg.metadata_path = args.metadata
        cfg.rules_path = args.rules
    if mode == "adapt":
        cfg.palette_path = args.palette
        cfg.profile = _profile_from(args)
        cfg.fill_mode = args.fill_mode
        cfg.font = args.font
        cfg.colour_overrides = _parse_colour_overrides(args.colour)
    result = run_pipeline(cfg)
    summary = {
        "input": result.report["input"],
        "output": result.report.get("output"),
        "warnings": len(result.report["warnings"]),
        "findings": len(result.report["findings"]),
    }
    print(json.dumps(summary, sort_keys=True))
    return result.status


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        doc = parse_svg(args.input.read_bytes(), source_name=args.input.name)
    except (OSError, SvgParseError) as exc:
        raise PipelineError("parse", str(exc)) from exc
    findings = validate_document(doc, args.fill_mode)
    payload = {
        "schema": "adaptsvg-report/1",
        "tool": {"name": "adaptsvg", "version": __version__},
        "mode": "validate",
        "input": str(args.input),
        "stages": [{"stage": "validate", "findings": len(findings)}],
        "findings": [f.to_mapping() for f in findings],
        "warnings": list(doc.warnings),
    }
    if args.report:
        args.report.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(json.dumps({"input": str(args.input), "findings": len(findings)}, sort_keys=True))
    for finding in findings:
        print(f"  [{finding.severity}] {finding.rule} {finding.element_id or '-'}: {finding.message}")
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    try:
        doc = parse_svg(args.input.read_bytes(), source_name=args.input.name)
    except (OSError, SvgParseError) as exc:
        raise PipelineError("parse", str(exc)) from exc
    out = _simulate_document(doc, args.kind)
    args.output.write_bytes(serialize_svg(out))
    print(json.dumps({"input": str(args.input), "output": str(args.output), "kind": args.kind}))
    return 0


def _cmd_palette(args: argparse.Namespace) -> int:
    palette = default_palette()
    if args.action == "check":
        reports = [validate_palette(palette, kind) for kind in ("protanopia", "deuteranopia", "tritanopia")]
        if args.as_json:
            print(json.dumps([r.to_mapping() for r in reports], indent=2, sort_keys=True))
        else:
            for r in reports:
                status = "pass" if r.passed else "FAIL"
                print(f"{r.kind:13s} min ΔE {r.min_distance:.2f} (floor {r.floor}) {status}")
        return 0 if all(r.passed for r in reports) else 1
    if args.as_json:
        print(
            json.dumps(
                {
                    "base_colours": palette.base_colours,
                    "half_fill": [p.paint_id for p in palette.half_fill_variants],
                    "patterns": [{"id": p.paint_id, "name": p.name} for p in palette.patterns],
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 0
    for colour in palette.base_colours:
        print(f"{colour}  (half fill: af-halffill-{colour[1:].lower()})")
    for paint in palette.patterns:
        print(f"{paint.paint_id}  {paint.name}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "clean":
            return _cmd_pipeline(args, "clean")
        if args.command == "enrich":
            return _cmd_pipeline(args, "enrich")
        if args.command == "adapt":
            return _cmd_pipeline(args, "adapt")
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "simulate-cvd":
            return _cmd_simulate(args)
        if args.command == "palette":
            return _cmd_palette(args)
    except PipelineError as exc:
        print(json.dumps({"error": {"stage": exc.stage, "message": str(exc)}}), file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
