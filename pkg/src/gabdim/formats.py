"""
Plain-text lattice descriptions and Graphviz export.

The text format is line oriented::

    # comment
    lattice m3
    elements: 0 a b c 1
    covers: 0<a, 0<b, 0<c
    covers: a<1, b<1, c<1

``#`` starts a comment, blank lines are ignored, tokens match
``[A-Za-z0-9_]+``. A ``covers:`` line may be empty (one-element lattice).
"""

import re
from dataclasses import dataclass

from .lattice import Lattice, LatticeError, build_lattice

TOKEN = re.compile(r"[A-Za-z0-9_]+")
_PAIR = re.compile(r"\s*([A-Za-z0-9_]+)\s*<\s*([A-Za-z0-9_]+)\s*")


class FormatError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = "" if line is None else f"line {line}" + ("" if column is None else f", column {column}")
        super().__init__(f"{where}: {message}" if where else message)


class LatticeSyntaxError(FormatError):
    pass


class UnknownElement(FormatError):
    pass


class DuplicateElement(FormatError):
    pass


@dataclass(frozen=True)
class LatticeDocument:
    name: str
    elements: tuple
    covers: tuple


def _significant_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield number, body


def _tokens(body, start, line):
    out = []
    for m in re.finditer(r"\S+", body[start:]):
        if not TOKEN.fullmatch(m.group()):
            raise LatticeSyntaxError(f"invalid token {m.group()!r}", line, start + m.start() + 1)
        out.append((m.group(), start + m.start() + 1))
    return out


def _keyword(body, keyword, line):
    stripped = body.lstrip()
    col = len(body) - len(stripped) + 1
    if not stripped.startswith(keyword):
        word = stripped.split(None, 1)[0]
        raise LatticeSyntaxError(f"expected {keyword.rstrip(':')!r}, found {word!r}", line, col)
    return len(body) - len(stripped) + len(keyword)


def parse_lattice_text(text):
    """Parse the text format into a :class:`LatticeDocument`."""
    lines = list(_significant_lines(text))
    if not lines:
        raise LatticeSyntaxError("empty document")

    line, body = lines[0]
    start = _keyword(body, "lattice", line)
    toks = _tokens(body, start, line)
    if len(toks) != 1 or start < len(body) and not body[start].isspace():
        raise LatticeSyntaxError("expected 'lattice <name>'", line, 1)
    name = toks[0][0]

    if len(lines) < 2:
        raise LatticeSyntaxError("missing 'elements:' line", line)
    line, body = lines[1]
    elements, seen = [], set()
    for tok, col in _tokens(body, _keyword(body, "elements:", line), line):
        if tok in seen:
            raise DuplicateElement(f"element {tok!r} declared twice", line, col)
        seen.add(tok)
        elements.append(tok)
    if not elements:
        raise LatticeSyntaxError("no elements declared", line)

    if len(lines) < 3:
        raise LatticeSyntaxError("missing 'covers:' line", line)
    covers = []
    for line, body in lines[2:]:
        pos = _keyword(body, "covers:", line)
        rest = body[pos:]
        if not rest.strip():
            continue
        offset = pos
        for chunk in rest.split(","):
            m = _PAIR.fullmatch(chunk)
            if m is None:
                raise LatticeSyntaxError(f"expected 'a<b', found {chunk.strip()!r}", line,
                                         offset + len(chunk) - len(chunk.lstrip()) + 1)
            for group in (1, 2):
                if m.group(group) not in seen:
                    raise UnknownElement(f"undeclared element {m.group(group)!r}", line,
                                         offset + m.start(group) + 1)
            covers.append((m.group(1), m.group(2)))
            offset += len(chunk) + 1
    return LatticeDocument(name, tuple(elements), tuple(covers))


def document_to_lattice(doc):
    """Build the lattice a document describes; build errors name the document."""
    index = {name: i for i, name in enumerate(doc.elements)}
    pairs = [(index[a], index[b]) for a, b in doc.covers]
    try:
        return build_lattice(len(doc.elements), pairs, names=list(doc.elements), name=doc.name)
    except LatticeError as exc:
        exc.args = (f"lattice {doc.name!r}: {exc}",)
        exc.document = doc
        raise


def load_lattice(text):
    return document_to_lattice(parse_lattice_text(text))


def lattice_document(lattice):
    names = lattice.names
    covers = tuple((names[a], names[b]) for a, b in lattice.covers)
    return LatticeDocument(lattice.name, names, covers)


def format_lattice_text(source, per_line=8):
    """Render a lattice or document in the text format."""
    doc = lattice_document(source) if isinstance(source, Lattice) else source
    out = [f"lattice {doc.name}", "elements: " + " ".join(doc.elements)]
    pairs = [f"{a}<{b}" for a, b in doc.covers]
    if not pairs:
        out.append("covers:")
    for i in range(0, len(pairs), per_line):
        out.append("covers: " + ", ".join(pairs[i:i + per_line]))
    return "\n".join(out) + "\n"


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(source):
    """Graphviz digraph of the cover relation, edges pointing upward, sorted by name."""
    doc = lattice_document(source) if isinstance(source, Lattice) else source
    out = [f"digraph {_quote(doc.name)} {{"]
    for name in sorted(doc.elements):
        out.append(f"  {_quote(name)} [label={_quote(name)}];")
    for a, b in sorted(doc.covers):
        out.append(f"  {_quote(a)} -> {_quote(b)};")
    out.append("}")
    return "\n".join(out) + "\n"
