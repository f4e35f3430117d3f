from __future__ import annotations

import http.server
import re
import threading

import pytest

from hive.documents import (
    DocumentSource,
    convert_binary,
    fetch_url,
    html_to_text,
    load_text_file,
    register_converter,
)
from hive.errors import ConverterError, FetchError, UnsupportedFormatError


def test_load_utf8_file(tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text("abc", encoding="utf-8")
    source = load_text_file(str(path))
    assert source.extracted_text == "abc"
    assert source.char_count == 3
    assert source.encoding == "utf-8"
    assert source.kind == "text-file"


def test_load_empty_file(tmp_path):
    path = tmp_path / "doc.txt"
    path.write_bytes(b"")
    assert load_text_file(str(path)).char_count == 0


def test_latin1_fallback_preserves_accents(fixtures_dir):
    source = load_text_file(str(fixtures_dir / "docs" / "latin1.txt"))
    assert source.encoding == "latin-1"
    assert "café" in source.extracted_text
    assert "matériaux" in source.extracted_text


def test_load_missing_file_raises(tmp_path):
    with pytest.raises(OSError):
        load_text_file(str(tmp_path / "nope.txt"))


def test_repeated_loads_identical(fixtures_dir):
    path = str(fixtures_dir / "docs" / "abstract1.txt")
    assert load_text_file(path) == load_text_file(path)


# --- HTML stripping -----------------------------------------------------------


def test_html_paragraph_stripped():
    assert html_to_text("<p>gas adsorption</p>") == "gas adsorption"


def test_html_script_and_style_dropped():
    assert html_to_text("<script>x</script><p>a</p>") == "a"
    assert html_to_text("<style>.c{}</style><div>b</div>") == "b"


def test_html_title_comes_first():
    html = "<html><head><title>Zeolites</title></head><body><p>body text</p></body></html>"
    assert html_to_text(html) == "Zeolites\nbody text"


def test_html_block_elements_become_newlines():
    html = "<h1>Top</h1><p>one</p><p>two</p><ul><li>item</li></ul>"
    assert html_to_text(html) == "Top\none\ntwo\nitem"


def test_html_entities_decoded():
    assert html_to_text("<p>salt &amp; pepper &eacute;</p>") == "salt & pepper é"


def test_html_no_tag_residue_on_fixture_pages():
    pages = [
        "<div><p>a</p><span>b</span></div>",
        "<table><tr><td>cell</td></tr></table>",
        "<article><h2>Head</h2>text<br>more</article>",
        "<p>5 &lt; 6 is true</p>",
    ]
    residue = re.compile(r"<[A-Za-z]")
    for page in pages:
        assert not residue.search(html_to_text(page))


# --- fetch_url against a local server ----------------------------------------


class _Handler(http.server.BaseHTTPRequestHandler):
    def do_GET(self):  # noqa: N802 - http.server API
        routes = {
            "/page": (200, "text/html", "<p>gas adsorption</p>"),
            "/scripted": (200, "text/html", "<script>x</script><p>a</p>"),
            "/plain": (200, "text/plain", "raw"),
            "/missing": (404, "text/html", "<p>gone</p>"),
        }
        if self.path == "/loop":
            self.send_response(302)
            self.send_header("Location", "/loop")
            self.end_headers()
            return
        status, ctype, body = routes.get(self.path, (404, "text/html", ""))
        payload = body.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", f"{ctype}; charset=utf-8")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


@pytest.fixture(scope="module")
def http_base():
    server = http.server.ThreadingHTTPServer(("127.0.0.1", 0), _Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()


def test_fetch_strips_markup(http_base):
    source = fetch_url(f"{http_base}/page")
    assert source.extracted_text == "gas adsorption"
    assert source.kind == "url"


def test_fetch_drops_script(http_base):
    assert fetch_url(f"{http_base}/scripted").extracted_text == "a"


def test_fetch_404_raises(http_base):
    with pytest.raises(FetchError):
        fetch_url(f"{http_base}/missing")


def test_fetch_non_html_raises(http_base):
    with pytest.raises(FetchError):
        fetch_url(f"{http_base}/plain")


def test_fetch_redirect_loop_raises(http_base):
    with pytest.raises(FetchError):
        fetch_url(f"{http_base}/loop")


def test_fetch_rejects_non_http_scheme():
    with pytest.raises(FetchError):
        fetch_url("ftp://example.org/x")


def test_fetch_connection_error_raises():
    with pytest.raises(FetchError):
        fetch_url("http://127.0.0.1:1/never")


# --- converter hooks ----------------------------------------------------------


def test_convert_without_hook_rejected(tmp_path):
    path = tmp_path / "paper.pdf"
    path.write_bytes(b"%PDF-fake")
    with pytest.raises(UnsupportedFormatError):
        convert_binary(str(path), converters={})


def test_convert_with_hook(tmp_path):
    path = tmp_path / "paper.pdf"
    path.write_bytes(b"%PDF-fake")
    source = convert_binary(str(path), converters={".pdf": lambda p: "x y z"})
    assert source.extracted_text == "x y z"
    assert source.char_count == 5


def test_convert_hook_failure_names_file(tmp_path):
    path = tmp_path / "broken.docx"
    path.write_bytes(b"zip")

    def bad_hook(p: str) -> str:
        raise RuntimeError("parser exploded")

    with pytest.raises(ConverterError) as err:
        convert_binary(str(path), converters={".docx": bad_hook})
    assert "broken.docx" in str(err.value)


def test_register_converter_global(tmp_path):
    register_converter(".testext", lambda p: "hook text")
    path = tmp_path / "f.testext"
    path.write_bytes(b"")
    assert convert_binary(str(path)).extracted_text == "hook text"


def test_from_text_source():
    source = DocumentSource.from_text("hello")
    assert source.kind == "raw-text"
    assert source.char_count == 5
