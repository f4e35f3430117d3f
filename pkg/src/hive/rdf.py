"""Streaming triple parsers for the three supported RDF syntaxes.

Each parser is a generator yielding :class:`Triple` as statements complete, so
large files never need a full in-memory parse tree. ``parse_rdf`` is the
list-collecting convenience wrapper used by the ingest pipeline.

Supported syntaxes: N-Triples, Turtle, and RDF/XML (the striped subset that
Protege and common ontology exporters emit: node/property nesting, rdf:about,
rdf:ID, rdf:resource, rdf:nodeID, rdf:parseType Resource/Collection/Literal,
property attributes, xml:base and xml:lang inheritance). XML literals keep
their character data only; embedded markup is not preserved.
"""

from __future__ import annotations

import re
import xml.parsers.expat
from dataclasses import dataclass
from typing import Iterable, Iterator
from urllib.parse import urljoin

from . import vocab
from .errors import RdfParseError, UnknownFormatError

FORMATS = ("rdf-xml", "turtle", "ntriples")

_EXTENSION_FORMATS = {
    ".rdf": "rdf-xml",
    ".owl": "rdf-xml",
    ".xml": "rdf-xml",
    ".ttl": "turtle",
    ".nt": "ntriples",
}


@dataclass(frozen=True)
class Literal:
    """A literal object value: text plus optional language tag or datatype."""

    text: str
    lang: str | None = None
    datatype: str | None = None


@dataclass(frozen=True)
class Triple:
    """One RDF statement.

    ``subject`` is an IRI or a blank-node id (``_:`` prefix); ``predicate`` is
    always an IRI; ``object`` is an IRI, a blank-node id, or a Literal.
    """

    subject: str
    predicate: str
    object: str | Literal


def is_blank(term: str | Literal) -> bool:
    return isinstance(term, str) and term.startswith("_:")


def format_for_path(path: str) -> str:
    """Map a file extension to a syntax name, for ``--format auto``."""
    dot = str(path).rfind(".")
    ext = str(path)[dot:].lower() if dot != -1 else ""
    try:
        return _EXTENSION_FORMATS[ext]
    except KeyError:
        raise UnknownFormatError(
            f"cannot infer RDF syntax from {str(path)!r}; expected one of "
            f"{sorted(_EXTENSION_FORMATS)}"
        ) from None


def parse_rdf(data: bytes, format: str) -> list[Triple]:
    """Parse ``data`` in the named syntax into a triple list."""
    return list(iter_triples(data, format))


def iter_triples(data: bytes, format: str) -> Iterator[Triple]:
    """Streaming form of :func:`parse_rdf`."""
    if format == "ntriples":
        return _parse_ntriples(_decode(data))
    if format == "turtle":
        return _parse_turtle(_decode(data))
    if format == "rdf-xml":
        return _parse_rdf_xml(data)
    raise UnknownFormatError(f"unsupported RDF syntax {format!r}; expected one of {FORMATS}")


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise RdfParseError(f"input is not valid UTF-8: {exc}") from exc


# --- shared string unescaping -------------------------------------------------

_STRING_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


def _unescape(raw: str, line: int) -> str:
    if "\\" not in raw:
        return raw
    out: list[str] = []
    i = 0
    n = len(raw)
    while i < n:
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= n:
            raise RdfParseError("trailing backslash in string", line)
        esc = raw[i + 1]
        if esc in _STRING_ESCAPES:
            out.append(_STRING_ESCAPES[esc])
            i += 2
        elif esc in ("u", "U"):
            width = 4 if esc == "u" else 8
            hexdigits = raw[i + 2 : i + 2 + width]
            if len(hexdigits) != width:
                raise RdfParseError(f"bad \\{esc} escape", line)
            try:
                out.append(chr(int(hexdigits, 16)))
            except ValueError:
                raise RdfParseError(f"bad \\{esc} escape {hexdigits!r}", line) from None
            i += 2 + width
        else:
            raise RdfParseError(f"unknown escape \\{esc}", line)
    return "".join(out)


# --- N-Triples ----------------------------------------------------------------

_NT_IRI = r"<([^<>\s]*)>"
_NT_BLANK = r"(_:[A-Za-z0-9][A-Za-z0-9._-]*)"
_NT_LITERAL = r'"((?:[^"\\]|\\.)*)"(?:@([A-Za-z][A-Za-z0-9-]*)|\^\^<([^<>\s]*)>)?'

_NT_LINE = re.compile(
    rf"^(?:{_NT_IRI}|{_NT_BLANK})\s+{_NT_IRI}\s+"
    rf"(?:{_NT_IRI}|{_NT_BLANK}|{_NT_LITERAL})\s*\.\s*$"
)


def _parse_ntriples(text: str) -> Iterator[Triple]:
    for lineno, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        m = _NT_LINE.match(line)
        if m is None:
            raise RdfParseError(f"malformed N-Triples statement: {line[:80]!r}", lineno)
        s_iri, s_blank, pred, o_iri, o_blank, o_lit, o_lang, o_dt = m.groups()
        subject = _unescape(s_iri, lineno) if s_iri is not None else s_blank
        predicate = _unescape(pred, lineno)
        obj: str | Literal
        if o_iri is not None:
            obj = _unescape(o_iri, lineno)
        elif o_blank is not None:
            obj = o_blank
        else:
            obj = Literal(
                _unescape(o_lit, lineno),
                lang=o_lang.lower() if o_lang else None,
                datatype=_unescape(o_dt, lineno) if o_dt else None,
            )
        yield Triple(subject, predicate, obj)


# --- Turtle -------------------------------------------------------------------

_TURTLE_TOKEN = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>\#[^\n]*)
    | (?P<iriref><[^<>"{}|^`\\\s]*>)
    | (?P<triplequote>\"\"\"|''')
    | (?P<string>"(?:[^"\\\n]|\\.)*"|'(?:[^'\\\n]|\\.)*')
    | (?P<blank>_:[^\s;,.()\[\]]+)
    | (?P<prefix_decl>@prefix(?=\s)|@base(?=\s)|(?i:PREFIX(?=\s))|(?i:BASE(?=\s)))
    | (?P<number>[+-]?(?:\d+\.\d+(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+))
    | (?P<punct>\^\^|[.;,\[\]()])
    | (?P<pname>[^\s;,.()\[\]"'@^]+)
    | (?P<lang>@[A-Za-z][A-Za-z0-9-]*)
    """,
    re.VERBOSE,
)

def _scan_long_string(text: str, pos: int, quote: str) -> tuple[str, int] | None:
    """Read a long-string body starting at ``pos``; returns (body, end_pos).

    Quotes immediately before the closing delimiter belong to the body, so
    the delimiter is the LAST run of three quotes (matching how ``\"\"\"\"``
    parses as one content quote plus the terminator).
    """
    i = pos
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\\":
            i += 2
            continue
        if ch == quote and text[i : i + 3] == quote * 3:
            if i + 3 < n and text[i + 3] == quote:
                i += 1  # this quote is content; delimiter starts later
                continue
            return text[pos:i], i + 3
        i += 1
    return None


class _TurtleLexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.len = len(text)
        self._pushed: tuple[str, str] | None = None

    def line(self) -> int:
        return self.text.count("\n", 0, self.pos) + 1

    def push_back(self, token: tuple[str, str]) -> None:
        assert self._pushed is None
        self._pushed = token

    def next(self) -> tuple[str, str]:
        """Return (kind, value); kind 'eof' at end of input."""
        if self._pushed is not None:
            tok, self._pushed = self._pushed, None
            return tok
        while self.pos < self.len:
            m = _TURTLE_TOKEN.match(self.text, self.pos)
            if m is None:
                raise RdfParseError(
                    f"unexpected character {self.text[self.pos]!r}", self.line()
                )
            kind = m.lastgroup or ""
            value = m.group()
            if kind == "triplequote":
                scanned = _scan_long_string(self.text, m.end(), value[0])
                if scanned is None:
                    raise RdfParseError("unterminated long string", self.line())
                body, self.pos = scanned
                return ("string_body", body)
            self.pos = m.end()
            if kind in ("ws", "comment"):
                continue
            if kind == "string":
                return ("string_body", value[1:-1])
            return (kind, value)
        return ("eof", "")


class _TurtleParser:
    def __init__(self, text: str):
        self.lex = _TurtleLexer(text)
        self.prefixes: dict[str, str] = {}
        self.base = ""
        self._blank_counter = 0
        self._blank_labels: dict[str, str] = {}

    def fresh_blank(self) -> str:
        self._blank_counter += 1
        return f"_:b{self._blank_counter}"

    def named_blank(self, label: str) -> str:
        if label not in self._blank_labels:
            self._blank_labels[label] = self.fresh_blank()
        return self._blank_labels[label]

    def resolve(self, iri: str) -> str:
        if self.base and not re.match(r"^[A-Za-z][A-Za-z0-9+.-]*:", iri):
            return urljoin(self.base, iri)
        return iri

    def expand_pname(self, pname: str) -> str:
        if ":" not in pname:
            raise RdfParseError(
                f"expected an IRI or prefixed name, got {pname!r}", self.lex.line()
            )
        prefix, local = pname.split(":", 1)
        if prefix not in self.prefixes:
            raise RdfParseError(f"undeclared prefix {prefix + ':'!r}", self.lex.line())
        return self.prefixes[prefix] + _unescape_local(local)

    def parse(self) -> Iterator[Triple]:
        while True:
            kind, value = self.lex.next()
            if kind == "eof":
                return
            if kind == "prefix_decl":
                self._directive(value)
                continue
            self.lex.push_back((kind, value))
            yield from self._statement()

    def _directive(self, keyword: str) -> None:
        sparql_style = not keyword.startswith("@")
        word = keyword.lstrip("@").lower()
        if word == "prefix":
            kind, value = self.lex.next()
            if kind != "pname" or not value.endswith(":"):
                raise RdfParseError("expected 'prefix:' after @prefix", self.lex.line())
            prefix = value[:-1]
            kind, iri = self.lex.next()
            if kind != "iriref":
                raise RdfParseError("expected <iri> in prefix declaration", self.lex.line())
            self.prefixes[prefix] = self.resolve(iri[1:-1])
        else:
            kind, iri = self.lex.next()
            if kind != "iriref":
                raise RdfParseError("expected <iri> in base declaration", self.lex.line())
            self.base = self.resolve(iri[1:-1])
        if not sparql_style:
            kind, value = self.lex.next()
            if (kind, value) != ("punct", "."):
                raise RdfParseError("expected '.' after directive", self.lex.line())

    def _statement(self) -> Iterator[Triple]:
        subject, triples = self._subject()
        yield from triples
        kind, value = self.lex.next()
        if (kind, value) == ("punct", ".") and triples:
            return  # bare blank-node property list as a full statement
        self.lex.push_back((kind, value))
        yield from self._predicate_object_list(subject)
        kind, value = self.lex.next()
        if (kind, value) != ("punct", "."):
            raise RdfParseError(f"expected '.' to end statement, got {value!r}", self.lex.line())

    def _subject(self) -> tuple[str, list[Triple]]:
        kind, value = self.lex.next()
        if kind == "iriref":
            return self.resolve(_unescape(value[1:-1], self.lex.line())), []
        if kind == "blank":
            return self.named_blank(value[2:]), []
        if kind == "punct" and value == "[":
            node = self.fresh_blank()
            return node, list(self._blank_node_body(node))
        if kind == "punct" and value == "(":
            return self._collection()
        if kind == "pname":
            return self.expand_pname(value), []
        raise RdfParseError(f"bad subject {value!r}", self.lex.line())

    def _blank_node_body(self, node: str) -> Iterator[Triple]:
        kind, value = self.lex.next()
        if kind == "punct" and value == "]":
            return
        self.lex.push_back((kind, value))
        yield from self._predicate_object_list(node)
        kind, value = self.lex.next()
        if (kind, value) != ("punct", "]"):
            raise RdfParseError("expected ']' closing blank node", self.lex.line())

    def _collection(self) -> tuple[str, list[Triple]]:
        items: list[tuple[str | Literal, list[Triple]]] = []
        while True:
            kind, value = self.lex.next()
            if kind == "punct" and value == ")":
                break
            self.lex.push_back((kind, value))
            items.append(self._object())
        if not items:
            return vocab.RDF_NIL, []
        triples: list[Triple] = []
        head = self.fresh_blank()
        node = head
        for i, (obj, extra) in enumerate(items):
            triples.extend(extra)
            triples.append(Triple(node, vocab.RDF_FIRST, obj))
            if i + 1 < len(items):
                nxt = self.fresh_blank()
                triples.append(Triple(node, vocab.RDF_REST, nxt))
                node = nxt
            else:
                triples.append(Triple(node, vocab.RDF_REST, vocab.RDF_NIL))
        return head, triples

    def _predicate_object_list(self, subject: str) -> Iterator[Triple]:
        while True:
            predicate = self._predicate()
            while True:
                obj, extra = self._object()
                yield from extra
                yield Triple(subject, predicate, obj)
                kind, value = self.lex.next()
                if kind == "punct" and value == ",":
                    continue
                self.lex.push_back((kind, value))
                break
            kind, value = self.lex.next()
            if kind == "punct" and value == ";":
                kind2, value2 = self.lex.next()
                self.lex.push_back((kind2, value2))
                if kind2 == "punct" and value2 in (".", "]"):
                    return  # trailing ';'
                continue
            self.lex.push_back((kind, value))
            return

    def _predicate(self) -> str:
        kind, value = self.lex.next()
        if kind == "pname" and value == "a":
            return vocab.RDF_TYPE
        if kind == "iriref":
            return self.resolve(_unescape(value[1:-1], self.lex.line()))
        if kind == "pname":
            return self.expand_pname(value)
        raise RdfParseError(f"bad predicate {value!r}", self.lex.line())

    def _object(self) -> tuple[str | Literal, list[Triple]]:
        kind, value = self.lex.next()
        if kind == "iriref":
            return self.resolve(_unescape(value[1:-1], self.lex.line())), []
        if kind == "blank":
            return self.named_blank(value[2:]), []
        if kind == "string_body":
            return self._literal_tail(value), []
        if kind == "number":
            if re.fullmatch(r"[+-]?\d+", value):
                dt = vocab.XSD_INTEGER
            elif "e" in value.lower():
                dt = vocab.XSD_DOUBLE
            else:
                dt = vocab.XSD_DECIMAL
            return Literal(value, datatype=dt), []
        if kind == "punct" and value == "[":
            node = self.fresh_blank()
            return node, list(self._blank_node_body(node))
        if kind == "punct" and value == "(":
            return self._collection()
        if kind == "pname":
            if value in ("true", "false"):
                return Literal(value, datatype=vocab.XSD_BOOLEAN), []
            return self.expand_pname(value), []
        raise RdfParseError(f"bad object {value!r}", self.lex.line())

    def _literal_tail(self, body: str) -> Literal:
        text = _unescape(body, self.lex.line())
        kind, value = self.lex.next()
        if kind == "lang":
            return Literal(text, lang=value[1:].lower())
        if kind == "punct" and value == "^^":
            dt_kind, dt_value = self.lex.next()
            if dt_kind == "iriref":
                return Literal(text, datatype=self.resolve(dt_value[1:-1]))
            if dt_kind == "pname":
                return Literal(text, datatype=self.expand_pname(dt_value))
            raise RdfParseError("expected datatype IRI after '^^'", self.lex.line())
        self.lex.push_back((kind, value))
        return Literal(text)


_PN_LOCAL_ESC = re.compile(r"\\([_~.\-!$&'()*+,;=/?#@%])")


def _unescape_local(local: str) -> str:
    return _PN_LOCAL_ESC.sub(r"\1", local)


def _parse_turtle(text: str) -> Iterator[Triple]:
    yield from _TurtleParser(text).parse()


# --- RDF/XML ------------------------------------------------------------------

_NSSEP = "\x1f"
_RDF_XMLNS = vocab.RDF_NS  # concatenation namespace for rdf:* names
_RDFX = {
    name: f"{_RDF_XMLNS}{_NSSEP}{name}"
    for name in (
        "RDF", "Description", "about", "ID", "nodeID", "resource",
        "datatype", "parseType", "li",
    )
}
_XML_LANG = f"http://www.w3.org/XML/1998/namespace{_NSSEP}lang"
_XML_BASE = f"http://www.w3.org/XML/1998/namespace{_NSSEP}base"


def _expat_iri(name: str, line: int) -> str:
    """Turn an expat-expanded name (ns + sep + local) back into a full IRI."""
    if _NSSEP not in name:
        raise RdfParseError(f"element or attribute {name!r} has no namespace", line)
    ns, local = name.split(_NSSEP, 1)
    return ns + local


class _XmlFrame:
    __slots__ = ("kind", "subject", "predicate", "text", "lang", "base",
                 "datatype", "parse_type", "collection", "raw_depth", "objected")

    def __init__(self, kind: str, lang: str | None, base: str):
        self.kind = kind  # "root" | "node" | "property"
        self.subject: str | None = None
        self.predicate: str | None = None
        self.text: list[str] = []
        self.lang = lang
        self.base = base
        self.datatype: str | None = None
        self.parse_type: str | None = None
        self.collection: list[str] = []
        self.raw_depth = 0
        self.objected = False  # object already emitted (resource/nested node)


class _RdfXmlParser:
    """Striped-syntax RDF/XML parser over expat events."""

    def __init__(self) -> None:
        self.parser = xml.parsers.expat.ParserCreate(namespace_separator=_NSSEP)
        self.parser.StartElementHandler = self._start
        self.parser.EndElementHandler = self._end
        self.parser.CharacterDataHandler = self._chars
        self.parser.buffer_text = True
        self.stack: list[_XmlFrame] = [_XmlFrame("root", None, "")]
        self.out: list[Triple] = []
        self._blank_counter = 0
        self._blank_labels: dict[str, str] = {}

    def feed(self, data: bytes, final: bool) -> list[Triple]:
        try:
            self.parser.Parse(data, final)
        except xml.parsers.expat.ExpatError as exc:
            raise RdfParseError(
                f"XML syntax error: {xml.parsers.expat.errors.messages[exc.code]}",
                exc.lineno,
                exc.offset,
            ) from exc
        emitted, self.out = self.out, []
        return emitted

    def _fresh_blank(self) -> str:
        self._blank_counter += 1
        return f"_:b{self._blank_counter}"

    def _named_blank(self, label: str) -> str:
        if label not in self._blank_labels:
            self._blank_labels[label] = self._fresh_blank()
        return self._blank_labels[label]

    def _line(self) -> int:
        return self.parser.CurrentLineNumber

    def _resolve(self, iri: str, base: str) -> str:
        if base and not re.match(r"^[A-Za-z][A-Za-z0-9+.-]*:", iri):
            return urljoin(base, iri)
        return iri

    def _emit(self, s: str, p: str, o: str | Literal) -> None:
        self.out.append(Triple(s, p, o))

    # -- expat handlers

    def _start(self, name: str, attrs: dict[str, str]) -> None:
        top = self.stack[-1]
        if top.kind == "property" and top.parse_type == "Literal":
            top.raw_depth += 1
            return
        lang = attrs.get(_XML_LANG, top.lang)
        base = self._resolve(attrs.get(_XML_BASE, top.base), top.base)

        if top.kind == "root" and name == _RDFX["RDF"]:
            self.stack.append(_XmlFrame("root", lang, base))
            return
        if top.kind in ("root", "property"):
            self._start_node(name, attrs, lang, base)
        else:
            self._start_property(name, attrs, lang, base)

    def _start_node(self, name: str, attrs: dict[str, str], lang: str | None, base: str) -> None:
        line = self._line()
        if _RDFX["about"] in attrs:
            subject = self._resolve(attrs[_RDFX["about"]], base)
        elif _RDFX["ID"] in attrs:
            subject = self._resolve("#" + attrs[_RDFX["ID"]], base)
        elif _RDFX["nodeID"] in attrs:
            subject = self._named_blank(attrs[_RDFX["nodeID"]])
        else:
            subject = self._fresh_blank()

        if name != _RDFX["Description"]:
            self._emit(subject, vocab.RDF_TYPE, _expat_iri(name, line))

        for attr, value in attrs.items():
            if attr in (_XML_LANG, _XML_BASE) or attr.startswith(_RDF_XMLNS + _NSSEP):
                continue
            self._emit(subject, _expat_iri(attr, line), Literal(value, lang=lang))

        parent = self.stack[-1]
        if parent.kind == "property":
            if parent.parse_type == "Collection":
                parent.collection.append(subject)
            elif parent.predicate is not None and parent.subject is not None:
                self._emit(parent.subject, parent.predicate, subject)
                parent.objected = True

        frame = _XmlFrame("node", lang, base)
        frame.subject = subject
        self.stack.append(frame)

    def _start_property(self, name: str, attrs: dict[str, str], lang: str | None, base: str) -> None:
        line = self._line()
        node = self.stack[-1]
        assert node.subject is not None
        frame = _XmlFrame("property", lang, base)
        frame.subject = node.subject
        frame.predicate = _expat_iri(name, line)
        frame.parse_type = attrs.get(_RDFX["parseType"])
        frame.datatype = attrs.get(_RDFX["datatype"])

        if frame.parse_type == "Resource":
            # the element's children are properties of an implicit blank node
            inner = self._fresh_blank()
            self._emit(node.subject, frame.predicate, inner)
            frame.kind = "node"
            frame.subject = inner
            frame.predicate = None
            self.stack.append(frame)
            return

        self.stack.append(frame)
        if frame.parse_type in ("Collection", "Literal"):
            return

        resource = attrs.get(_RDFX["resource"])
        node_id = attrs.get(_RDFX["nodeID"])
        if resource is not None:
            self._emit(node.subject, frame.predicate, self._resolve(resource, base))
            frame.objected = True
            return
        if node_id is not None:
            self._emit(node.subject, frame.predicate, self._named_blank(node_id))
            frame.objected = True
            return

        plain_attrs = {
            attr: value
            for attr, value in attrs.items()
            if attr not in (_XML_LANG, _XML_BASE)
            and not attr.startswith(_RDF_XMLNS + _NSSEP)
        }
        if plain_attrs:
            # property-and-attribute shorthand: object is a fresh blank node
            inner = self._fresh_blank()
            self._emit(node.subject, frame.predicate, inner)
            for attr, value in plain_attrs.items():
                self._emit(inner, _expat_iri(attr, line), Literal(value, lang=lang))
            frame.objected = True

    def _chars(self, data: str) -> None:
        top = self.stack[-1]
        if top.kind == "property":
            top.text.append(data)
        elif data.strip() and top.kind == "node":
            raise RdfParseError(
                f"unexpected text {data.strip()[:40]!r} inside node element", self._line()
            )

    def _end(self, name: str) -> None:
        top = self.stack[-1]
        if top.kind == "property" and top.parse_type == "Literal" and top.raw_depth > 0:
            top.raw_depth -= 1
            return
        frame = self.stack.pop()
        if frame.kind != "property":
            return
        if frame.parse_type == "Collection":
            assert frame.subject is not None and frame.predicate is not None
            if not frame.collection:
                self._emit(frame.subject, frame.predicate, vocab.RDF_NIL)
                return
            head = self._fresh_blank()
            self._emit(frame.subject, frame.predicate, head)
            node = head
            for i, item in enumerate(frame.collection):
                self._emit(node, vocab.RDF_FIRST, item)
                if i + 1 < len(frame.collection):
                    nxt = self._fresh_blank()
                    self._emit(node, vocab.RDF_REST, nxt)
                    node = nxt
                else:
                    self._emit(node, vocab.RDF_REST, vocab.RDF_NIL)
            return
        if frame.objected:
            return
        assert frame.subject is not None and frame.predicate is not None
        text = "".join(frame.text)
        if frame.parse_type == "Literal":
            self._emit(frame.subject, frame.predicate, Literal(text))
            return
        self._emit(
            frame.subject,
            frame.predicate,
            Literal(text, lang=None if frame.datatype else frame.lang, datatype=frame.datatype),
        )


def _parse_rdf_xml(data: bytes) -> Iterator[Triple]:
    parser = _RdfXmlParser()
    view = memoryview(data)
    chunk = 1 << 16
    for start in range(0, max(len(data), 1), chunk):
        final = start + chunk >= len(data)
        yield from parser.feed(bytes(view[start : start + chunk]), final)


def triples_from_file(path: str, format: str) -> Iterable[Triple]:
    with open(path, "rb") as fh:
        data = fh.read()
    return iter_triples(data, format)
