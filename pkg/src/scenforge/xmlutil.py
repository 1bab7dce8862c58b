"""Shared XML helpers: position-aware parsing and canonical text emission.

ElementTree exposes no element source positions, so start-tag offsets are
recovered lexically and aligned with the tree's pre-order traversal (the two
orders coincide for well-formed documents once comments/PIs are skipped).
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .errors import MalformedXml


class ElementMeta:
    __slots__ = ("path", "order", "line", "column")

    def __init__(self, path, order, line, column):
        self.path = path
        self.order = order
        self.line = line
        self.column = column


def _start_tag_offsets(text: str) -> list[int]:
    offsets = []
    i = 0
    n = len(text)
    while i < n:
        i = text.find("<", i)
        if i == -1:
            break
        nxt = text[i + 1 : i + 2]
        if nxt == "!":
            if text.startswith("<!--", i):
                end = text.find("-->", i)
                i = n if end == -1 else end + 3
            elif text.startswith("<![CDATA[", i):
                end = text.find("]]>", i)
                i = n if end == -1 else end + 3
            else:  # DOCTYPE etc.
                end = text.find(">", i)
                i = n if end == -1 else end + 1
        elif nxt in ("/", "?"):
            i += 2
        else:
            offsets.append(i)
            i += 1
    return offsets


def parse_with_meta(text: str) -> tuple[ET.Element, dict[int, ElementMeta]]:
    """Parse `text`; return (root, {id(elem): ElementMeta})."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc), position=exc.position) from exc

    line_starts = [0]
    for idx, ch in enumerate(text):
        if ch == "\n":
            line_starts.append(idx + 1)

    def linecol(offset):
        lo, hi = 0, len(line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if line_starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, offset - line_starts[lo] + 1

    offsets = _start_tag_offsets(text)
    meta: dict[int, ElementMeta] = {}
    order = 0

    def walk(elem, path):
        nonlocal order
        if order < len(offsets):
            line, col = linecol(offsets[order])
        else:  # pragma: no cover - defensive; alignment holds for valid XML
            line, col = 0, 0
        meta[id(elem)] = ElementMeta(path, order, line, col)
        order += 1
        counts: dict[str, int] = {}
        for child in elem:
            counts[child.tag] = counts.get(child.tag, 0) + 1
        seen: dict[str, int] = {}
        for child in elem:
            seen[child.tag] = seen.get(child.tag, 0) + 1
            if counts[child.tag] > 1:
                child_path = f"{path}/{child.tag}[{seen[child.tag]}]"
            else:
                child_path = f"{path}/{child.tag}"
            walk(child, child_path)

    walk(root, f"/{root.tag}")
    return root, meta


class XmlWriter:
    """Canonical emitter: two-space indent, LF endings, explicit attr order."""

    def __init__(self):
        self._lines: list[str] = []
        self._depth = 0

    def open(self, tag: str, attrs: list[tuple[str, str]] | None = None):
        self._lines.append(f"{'  ' * self._depth}<{tag}{_fmt_attrs(attrs)}>")
        self._depth += 1

    def close(self, tag: str):
        self._depth -= 1
        self._lines.append(f"{'  ' * self._depth}</{tag}>")

    def leaf(self, tag: str, attrs: list[tuple[str, str]] | None = None):
        self._lines.append(f"{'  ' * self._depth}<{tag}{_fmt_attrs(attrs)}/>")

    def text(self) -> str:
        return "\n".join(self._lines) + "\n"


def _fmt_attrs(attrs) -> str:
    if not attrs:
        return ""
    return "".join(f" {k}={quoteattr(str(v))}" for k, v in attrs)


def fmt_number(value) -> str:
    """Shortest stable decimal text: integral floats drop the '.0'."""
    if isinstance(value, bool):
        raise TypeError("bool is not a number here")
    if isinstance(value, int):
        return str(value)
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


__all__ = [
    "ElementMeta",
    "parse_with_meta",
    "XmlWriter",
    "fmt_number",
    "escape",
    "quoteattr",
]
