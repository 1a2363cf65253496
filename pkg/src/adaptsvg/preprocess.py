"""Cleaning of raw editor exports into a canonical plan.

Removes editor-private namespaces, hidden elements, comments/metadata and
no-op group wrappers. Geometry is never rewritten; elements are only removed
whole, so the visible plan is untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import COMMENT_TAG, PI_TAG, ElementNode, FloorplanDocument, serialize_svg

# Namespace URIs that belong to authoring tools, not to the graphic itself.
EDITOR_NAMESPACE_URIS = {
    "http://sodipodi.sourceforge.net/DTD/sodipodi-0.dtd",
    "http://www.inkscape.org/namespaces/inkscape",
    "http://ns.adobe.com/AdobeIllustrator/10.0/",
    "http://ns.adobe.com/Extensibility/1.0/",
    "http://ns.adobe.com/Flows/1.0/",
    "http://ns.adobe.com/Graphs/1.0/",
    "http://ns.adobe.com/GenericCustomNamespace/1.0/",
    "http://ns.adobe.com/XPath/1.0/",
    "http://ns.adobe.com/SaveForWeb/1.0/",
    "http://ns.adobe.com/Variables/1.0/",
    "http://ns.adobe.com/ImageReplacement/1.0/",
    "http://www.serif.com/",
    "http://schemas.microsoft.com/visio/2003/SVGExtensions/",
    "http://krita.org/namespaces/svg/krita",
}

# Conventional prefixes recognised even when the xmlns declaration is missing
# or truncated by an earlier tool.
EDITOR_PREFIXES = {"sodipodi", "inkscape"}


@dataclass
class CleanConfig:
    strip_editor_namespaces: bool = True
    strip_hidden: bool = True
    strip_comments_metadata: bool = True
    collapse_singleton_groups: bool = True
    extra_strip_tags: tuple[str, ...] = ()


@dataclass
class CleanReport:
    removed_elements: dict[str, int] = field(default_factory=dict)
    removed_attributes: dict[str, int] = field(default_factory=dict)
    collapsed_groups: int = 0
    bytes_before: int = 0
    bytes_after: int = 0

    def count_element(self, reason: str) -> None:
        self.removed_elements[reason] = self.removed_elements.get(reason, 0) + 1

    def count_attribute(self, prefix: str) -> None:
        self.removed_attributes[prefix] = self.removed_attributes.get(prefix, 0) + 1

    def to_mapping(self) -> dict:
        return {
            "removed_elements": dict(sorted(self.removed_elements.items())),
            "removed_attributes": dict(sorted(self.removed_attributes.items())),
            "collapsed_groups": self.collapsed_groups,
            "bytes_before": self.bytes_before,
            "bytes_after": self.bytes_after,
        }


def parse_style(value: str | None) -> dict[str, str]:
    """style attribute → property dict (order preserved by dict)."""
    props: dict[str, str] = {}
    for chunk in (value or "").split(";"):
        if ":" in chunk:
            name, _, prop = chunk.partition(":")
            props[name.strip()] = prop.strip()
    return props


def format_style(props: dict[str, str]) -> str:
    return ";".join(f"{name}:{value}" for name, value in props.items())


def is_hidden(node: ElementNode) -> bool:
    if node.get("display") == "none" or node.get("visibility") == "hidden":
        return True
    style = parse_style(node.get("style"))
    return style.get("display") == "none" or style.get("visibility") == "hidden"


def _editor_prefixes_in(doc: FloorplanDocument) -> set[str]:
    prefixes = set(EDITOR_PREFIXES)
    for node in doc.root.iter():
        for name, value in node.attributes.items():
            if name.startswith("xmlns:") and value in EDITOR_NAMESPACE_URIS:
                prefixes.add(name.split(":", 1)[1])
    return prefixes


def clean(doc: FloorplanDocument, cfg: CleanConfig | None = None) -> tuple[FloorplanDocument, CleanReport]:
    """Clean a plan per the config; returns a new document plus a fact report.

    Idempotent: cleaning a cleaned document removes nothing further.
    """
    cfg = cfg or CleanConfig()
    report = CleanReport(bytes_before=len(serialize_svg(doc)))
    out = doc.copy()
    prefixes = _editor_prefixes_in(out) if cfg.strip_editor_namespaces else set()
    extra = set(cfg.extra_strip_tags)

    def removal_reason(node: ElementNode) -> str | None:
        if node.tag in (COMMENT_TAG, PI_TAG):
            return "comment" if cfg.strip_comments_metadata else None
        if cfg.strip_editor_namespaces and ":" in node.tag:
            if node.tag.split(":", 1)[0] in prefixes:
                return "editor_namespace"
        if cfg.strip_comments_metadata and node.local_name == "metadata":
            return "metadata"
        if node.tag in extra:
            return "extra_tag"
        if cfg.strip_hidden and is_hidden(node):
            return "hidden"
        return None

    def strip_attributes(node: ElementNode) -> None:
        doomed = []
        for name, value in node.attributes.items():
            if name.startswith("xmlns:") and value in EDITOR_NAMESPACE_URIS:
                doomed.append((name, name.split(":", 1)[1]))
            elif ":" in name and not name.startswith("xmlns") and name.split(":", 1)[0] in prefixes:
                doomed.append((name, name.split(":", 1)[0]))
        for name, prefix in doomed:
            del node.attributes[name]
            report.count_attribute(prefix)

    def process(node: ElementNode) -> None:
        if cfg.strip_editor_namespaces:
            strip_attributes(node)
        kept: list[ElementNode] = []
        for child in node.children:
            reason = removal_reason(child)
            if reason is not None:
                report.count_element(reason)
                continue
            process(child)
            # Hoist a bare <g> around a single element; drop a bare empty <g>.
            if cfg.collapse_singleton_groups and child.tag == "g" and not child.attributes:
                element_children = [c for c in child.children if c.is_element]
                if not element_children and not any(not c.is_element for c in child.children):
                    report.count_element("empty_group")
                    continue
                if (
                    len(element_children) == 1
                    and len(child.children) == 1
                    and _blank(child.text)
                    and _blank(element_children[0].tail)
                ):
                    inner = element_children[0]
                    inner.tail = child.tail
                    kept.append(inner)
                    report.collapsed_groups += 1
                    continue
            kept.append(child)
        node.children = kept

    process(out.root)
    if cfg.strip_comments_metadata:
        removed = len(out.prolog) + len(out.epilog)
        for _ in range(removed):
            report.count_element("comment")
        out.prolog = []
        out.epilog = []
    out.reindex()
    report.bytes_after = len(serialize_svg(out))
    return out, report


def _blank(text: str | None) -> bool:
    return text is None or text.strip() == ""
