"""Document acquisition: plain text files, scraped web pages, converter hooks.

Binary formats (PDF, Word) are deliberately not parsed here; callers register
converter hooks per extension and the core stays free of binary parsing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path
from typing import Callable, Mapping

import requests

from .errors import ConverterError, FetchError, UnsupportedFormatError

log = logging.getLogger(__name__)

FETCH_TIMEOUT_SECONDS = 10
MAX_REDIRECTS = 5

# elements whose text content is dropped entirely
_SKIP_ELEMENTS = {"script", "style", "noscript", "template"}
# elements that imply a line break around their content
_BLOCK_ELEMENTS = {
    "p", "div", "br", "li", "ul", "ol", "dl", "dt", "dd", "h1", "h2", "h3",
    "h4", "h5", "h6", "table", "tr", "td", "th", "thead", "tbody", "section",
    "article", "header", "footer", "blockquote", "pre", "hr", "nav", "aside",
    "main", "figure", "figcaption", "form",
}


@dataclass(frozen=True)
class DocumentSource:
    """Text ready for extraction, with provenance."""

    kind: str  # text-file | url | raw-text
    locator: str
    extracted_text: str
    char_count: int
    encoding: str | None = None

    @staticmethod
    def from_text(text: str, locator: str = "inline") -> "DocumentSource":
        return DocumentSource(
            kind="raw-text",
            locator=locator,
            extracted_text=text,
            char_count=len(text),
        )

    def summary(self) -> dict:
        return {
            "kind": self.kind,
            "locator": self.locator,
            "char_count": self.char_count,
            "encoding": self.encoding,
        }


def load_text_file(path: str) -> DocumentSource:
    """Read a text file, trying UTF-8 first and Latin-1 as the fallback."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
        encoding = "utf-8"
    except UnicodeDecodeError:
        text = data.decode("latin-1")
        encoding = "latin-1"
    return DocumentSource(
        kind="text-file",
        locator=str(path),
        extracted_text=text,
        char_count=len(text),
        encoding=encoding,
    )


class _TextExtractor(HTMLParser):
    """Tag stripper: skips script/style subtrees, breaks lines at block tags."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.parts: list[str] = []
        self.title_parts: list[str] = []
        self._skip_depth = 0
        self._in_title = False

    def handle_starttag(self, tag: str, attrs) -> None:
        if tag in _SKIP_ELEMENTS:
            self._skip_depth += 1
        elif tag == "title":
            self._in_title = True
        elif tag in _BLOCK_ELEMENTS:
            self.parts.append("\n")

    def handle_endtag(self, tag: str) -> None:
        if tag in _SKIP_ELEMENTS:
            self._skip_depth = max(0, self._skip_depth - 1)
        elif tag == "title":
            self._in_title = False
        elif tag in _BLOCK_ELEMENTS:
            self.parts.append("\n")

    def handle_data(self, data: str) -> None:
        if self._skip_depth:
            return
        if self._in_title:
            self.title_parts.append(data)
        else:
            self.parts.append(data)

    def text(self) -> str:
        lines = []
        title = " ".join("".join(self.title_parts).split())
        if title:
            lines.append(title)
        for line in "".join(self.parts).split("\n"):
            line = " ".join(line.split())
            if line:
                lines.append(line)
        return "\n".join(lines)


def html_to_text(html: str) -> str:
    """Strip markup from an HTML page; title first, block elements break lines."""
    extractor = _TextExtractor()
    extractor.feed(html)
    extractor.close()
    return extractor.text()


def fetch_url(iri: str) -> DocumentSource:
    """Fetch one HTML page and scrape its textual content."""
    if not iri.startswith(("http://", "https://")):
        raise FetchError(f"only http/https URLs are supported, got {iri!r}")
    session = requests.Session()
    session.max_redirects = MAX_REDIRECTS
    try:
        response = session.get(
            iri,
            headers={"Accept": "text/html"},
            timeout=FETCH_TIMEOUT_SECONDS,
            allow_redirects=True,
        )
    except requests.RequestException as exc:
        raise FetchError(f"fetch failed for {iri}: {exc}") from exc
    finally:
        session.close()
    if not (200 <= response.status_code < 300):
        raise FetchError(f"fetch failed for {iri}: HTTP {response.status_code}")
    content_type = response.headers.get("Content-Type", "")
    if not content_type.split(";")[0].strip().lower() in ("text/html", "application/xhtml+xml"):
        raise FetchError(
            f"fetch failed for {iri}: expected HTML, got {content_type or 'no content type'!r}"
        )
    text = html_to_text(response.text)
    return DocumentSource(
        kind="url",
        locator=iri,
        extracted_text=text,
        char_count=len(text),
        encoding=response.encoding,
    )


_CONVERTERS: dict[str, Callable[[str], str]] = {}


def register_converter(extension: str, hook: Callable[[str], str]) -> None:
    """Register a text-extraction hook for a binary extension like '.pdf'."""
    _CONVERTERS[extension.lower()] = hook


def convert_binary(
    path: str, converters: Mapping[str, Callable[[str], str]] | None = None
) -> DocumentSource:
    """Extract text from a binary document via the hook for its extension."""
    registry = _CONVERTERS if converters is None else converters
    extension = Path(path).suffix.lower()
    hook = registry.get(extension)
    if hook is None:
        raise UnsupportedFormatError(
            f"no converter registered for {extension or 'files without extension'!r}"
        )
    try:
        text = hook(str(path))
    except Exception as exc:
        raise ConverterError(f"converter failed for {path}: {exc}") from exc
    return DocumentSource(
        kind="text-file",
        locator=str(path),
        extracted_text=text,
        char_count=len(text),
    )
