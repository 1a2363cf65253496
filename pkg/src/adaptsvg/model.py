"""In-memory SVG document model: lossless parse, deterministic serialize, id lookup.

Namespaces are kept as opaque prefixed names; nothing is rewritten. Comments and
processing instructions are kept in the tree (under sentinel tags) so documents
survive a parse/serialize round trip.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Callable, Iterator
from xml.parsers import expat

SVG_NS = "http://www.w3.org/2000/svg"

# Sentinel tags for non-element nodes preserved through round trips.
COMMENT_TAG = "#comment"
PI_TAG = "#pi"


class SvgParseError(ValueError):
    """Malformed SVG input; carries the source line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


@dataclass
class ElementNode:
    """One node of the document tree.

    `text` is character data directly inside the element, `tail` the character
    data following its end tag (ElementTree convention). Geometry attributes are
    never touched by any transformation in this package; only whole nodes move.
    """

    tag: str
    attributes: dict[str, str] = field(default_factory=dict)
    children: list["ElementNode"] = field(default_factory=list)
    text: str | None = None
    tail: str | None = None

    def get(self, name: str, default: str | None = None) -> str | None:
        return self.attributes.get(name, default)

    def set(self, name: str, value: str) -> None:
        self.attributes[name] = value

    @property
    def is_element(self) -> bool:
        return self.tag not in (COMMENT_TAG, PI_TAG)

    @property
    def local_name(self) -> str:
        return self.tag.rsplit(":", 1)[-1]

    def iter(self, include_non_elements: bool = False) -> Iterator["ElementNode"]:
        """Pre-order traversal of this subtree (document order)."""
        if self.is_element or include_non_elements:
            yield self
        for child in self.children:
            yield from child.iter(include_non_elements)

    def find_child(self, tag: str) -> "ElementNode | None":
        """First direct child with the given tag."""
        for child in self.children:
            if child.tag == tag:
                return child
        return None

    def copy(self) -> "ElementNode":
        return ElementNode(
            tag=self.tag,
            attributes=dict(self.attributes),
            children=[c.copy() for c in self.children],
            text=self.text,
            tail=self.tail,
        )


@dataclass
class FloorplanDocument:
    """A parsed SVG plan: element tree plus an id → node index.

    `prolog`/`epilog` hold comments and processing instructions found outside
    the root element (editor exports routinely carry a generator comment before
    the root). `id_index`, `source_name` and `warnings` are bookkeeping and do
    not take part in document equality.
    """

    root: ElementNode
    id_index: dict[str, ElementNode] = field(default_factory=dict, compare=False, repr=False)
    source_name: str = field(default="", compare=False)
    warnings: list[str] = field(default_factory=list, compare=False)
    prolog: list[ElementNode] = field(default_factory=list)
    epilog: list[ElementNode] = field(default_factory=list)

    def reindex(self) -> None:
        """Rebuild id_index from the tree; duplicate ids keep the last occurrence."""
        self.id_index = {}
        for node in self.root.iter():
            node_id = node.attributes.get("id")
            if not node_id:
                continue
            if node_id in self.id_index:
                self.warnings.append(f"duplicate id {node_id!r}; indexing the last occurrence")
            self.id_index[node_id] = node

    def copy(self) -> "FloorplanDocument":
        doc = FloorplanDocument(
            root=self.root.copy(),
            source_name=self.source_name,
            warnings=list(self.warnings),
            prolog=[n.copy() for n in self.prolog],
            epilog=[n.copy() for n in self.epilog],
        )
        doc.reindex()
        return doc


def parse_svg(data: bytes | str, source_name: str = "") -> FloorplanDocument:
    """Parse UTF-8 SVG/XML bytes into a FloorplanDocument.

    Unknown tags and attributes pass through verbatim. Raises SvgParseError with
    line/column on malformed XML or when the root element is not <svg>.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")

    parser = expat.ParserCreate()
    parser.ordered_attributes = True
    parser.buffer_text = True

    stack: list[ElementNode] = []
    roots: list[ElementNode] = []
    prolog: list[ElementNode] = []
    epilog: list[ElementNode] = []

    def attach(node: ElementNode) -> None:
        if stack:
            stack[-1].children.append(node)
        elif roots:
            epilog.append(node)
        else:
            prolog.append(node)

    def start_element(name: str, attrs: list[str]) -> None:
        node = ElementNode(tag=name, attributes={attrs[i]: attrs[i + 1] for i in range(0, len(attrs), 2)})
        if stack:
            stack[-1].children.append(node)
        else:
            roots.append(node)
        stack.append(node)

    def end_element(name: str) -> None:
        stack.pop()

    def character_data(text: str) -> None:
        if not stack:
            return
        node = stack[-1]
        if node.children:
            last = node.children[-1]
            last.tail = (last.tail or "") + text
        else:
            node.text = (node.text or "") + text

    def comment(text: str) -> None:
        attach(ElementNode(tag=COMMENT_TAG, text=text))

    def processing_instruction(target: str, data_: str) -> None:
        attach(ElementNode(tag=PI_TAG, attributes={"target": target}, text=data_))

    parser.StartElementHandler = start_element
    parser.EndElementHandler = end_element
    parser.CharacterDataHandler = character_data
    parser.CommentHandler = comment
    parser.ProcessingInstructionHandler = processing_instruction

    try:
        parser.Parse(data, True)
    except expat.ExpatError as exc:
        raise SvgParseError(
            expat.errors.messages[exc.code] if exc.code < len(expat.errors.messages) else str(exc),
            line=exc.lineno,
            column=exc.offset,
        ) from exc

    if not roots:
        raise SvgParseError("no root element found")
    root = roots[0]
    if root.local_name != "svg":
        raise SvgParseError(f"root element is <{root.tag}>, expected <svg>")

    doc = FloorplanDocument(root=root, source_name=source_name, prolog=prolog, epilog=epilog)
    doc.reindex()
    return doc


def _escape_text(value: str) -> str:
    value = value.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    return value.replace("\r", "&#13;")


def _escape_attr(value: str) -> str:
    value = _escape_text(value).replace('"', "&quot;")
    # Literal whitespace in attribute values would be normalized away on
    # re-parse; keep it representable.
    return value.replace("\n", "&#10;").replace("\t", "&#9;")


def _write_node(out: io.StringIO, node: ElementNode) -> None:
    if node.tag == COMMENT_TAG:
        out.write(f"<!--{node.text or ''}-->")
        return
    if node.tag == PI_TAG:
        target = node.attributes.get("target", "")
        data = f" {node.text}" if node.text else ""
        out.write(f"<?{target}{data}?>")
        return
    out.write(f"<{node.tag}")
    for name in sorted(node.attributes):
        out.write(f' {name}="{_escape_attr(node.attributes[name])}"')
    if node.children or node.text:
        out.write(">")
        if node.text:
            out.write(_escape_text(node.text))
        for child in node.children:
            _write_node(out, child)
            if child.tail:
                out.write(_escape_text(child.tail))
        out.write(f"</{node.tag}>")
    else:
        out.write("/>")


def serialize_svg(doc: FloorplanDocument) -> bytes:
    """Serialize to UTF-8 bytes; attributes are emitted sorted by name so the
    output is deterministic and diff/golden-file friendly."""
    out = io.StringIO()
    out.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    for node in doc.prolog:
        _write_node(out, node)
        out.write("\n")
    _write_node(out, doc.root)
    for node in doc.epilog:
        out.write("\n")
        _write_node(out, node)
    out.write("\n")
    return out.getvalue().encode("utf-8")


def find_element(doc: FloorplanDocument, element_id: str) -> ElementNode | None:
    """Look up an element by id; absence is a normal result."""
    if not element_id:
        return None
    return doc.id_index.get(element_id)


def list_elements(
    doc: FloorplanDocument, predicate: Callable[[ElementNode], bool] | None = None
) -> list[ElementNode]:
    """All elements in document order (pre-order), optionally filtered."""
    nodes = doc.root.iter()
    if predicate is None:
        return list(nodes)
    return [node for node in nodes if predicate(node)]
