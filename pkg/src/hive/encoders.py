"""Single-concept export encodings: JSON-LD, SKOS RDF/XML, Dublin Core XML,
and a namespace-free plain XML.

JSON-LD and plain XML carry every Concept field and can be decoded back;
Dublin Core drops the hierarchy links (broader/narrower/related) because the
element set has no place for them. Output is deterministic byte for byte so
golden files can pin it.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from typing import Callable
from xml.sax.saxutils import escape, quoteattr

from .errors import EncodingError, UnknownFormatError
from .model import Concept

ENCODING_FORMATS = ("json-ld", "skos-rdf-xml", "dc-xml", "plain-xml")
DECODABLE_FORMATS = ("json-ld", "plain-xml")

SKOS_NS = "http://www.w3.org/2004/02/skos/core#"
DCT_NS = "http://purl.org/dc/terms/"
DC_NS = "http://purl.org/dc/elements/1.1/"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"


def encode_concept(concept: Concept, format: str) -> str:
    try:
        encoder = _ENCODERS[format]
    except KeyError:
        raise UnknownFormatError(
            f"unknown encoding format {format!r}; expected one of {ENCODING_FORMATS}"
        ) from None
    return encoder(concept)


def decode_concept(text: str, format: str) -> Concept:
    """Inverse of :func:`encode_concept` for the two lossless formats."""
    if format == "json-ld":
        return _decode_json_ld(text)
    if format == "plain-xml":
        return _decode_plain_xml(text)
    raise UnknownFormatError(
        f"cannot decode format {format!r}; expected one of {DECODABLE_FORMATS}"
    )


# --- JSON-LD ------------------------------------------------------------------

_JSON_LD_CONTEXT = {"skos": SKOS_NS, "dct": DCT_NS}


def _scalar_or_list(values: tuple[str, ...]):
    return values[0] if len(values) == 1 else list(values)


def _encode_json_ld(concept: Concept) -> str:
    doc: dict = {"@context": dict(_JSON_LD_CONTEXT), "@id": concept.uri}
    doc["skos:prefLabel"] = concept.pref_label
    if concept.alt_labels:
        doc["skos:altLabel"] = _scalar_or_list(concept.alt_labels)
    if concept.notes:
        doc["skos:note"] = _scalar_or_list(concept.notes)
    if concept.broader:
        doc["skos:broader"] = _scalar_or_list(concept.broader)
    if concept.narrower:
        doc["skos:narrower"] = _scalar_or_list(concept.narrower)
    if concept.related:
        doc["skos:related"] = _scalar_or_list(concept.related)
    if concept.ontology_id:
        doc["dct:isPartOf"] = concept.ontology_id
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _as_tuple(value) -> tuple[str, ...]:
    if value is None:
        return ()
    if isinstance(value, str):
        return (value,)
    if isinstance(value, list) and all(isinstance(v, str) for v in value):
        return tuple(value)
    raise EncodingError(f"expected a string or list of strings, got {value!r}")


def _decode_json_ld(text: str) -> Concept:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EncodingError(f"malformed json-ld: {exc}") from exc
    if not isinstance(doc, dict):
        raise EncodingError("malformed json-ld: top level must be an object")
    uri = doc.get("@id")
    pref = doc.get("skos:prefLabel")
    if not isinstance(uri, str) or not uri:
        raise EncodingError("malformed json-ld: missing @id")
    if not isinstance(pref, str) or not pref:
        raise EncodingError("malformed json-ld: missing skos:prefLabel")
    ontology_id = doc.get("dct:isPartOf", "")
    if not isinstance(ontology_id, str):
        raise EncodingError("malformed json-ld: dct:isPartOf must be a string")
    return Concept(
        uri=uri,
        pref_label=pref,
        ontology_id=ontology_id,
        alt_labels=_as_tuple(doc.get("skos:altLabel")),
        notes=_as_tuple(doc.get("skos:note")),
        broader=_as_tuple(doc.get("skos:broader")),
        narrower=_as_tuple(doc.get("skos:narrower")),
        related=_as_tuple(doc.get("skos:related")),
    )


# --- SKOS RDF/XML -------------------------------------------------------------


def _encode_skos_rdf_xml(concept: Concept) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<rdf:RDF xmlns:rdf="{RDF_NS}"',
        f'         xmlns:skos="{SKOS_NS}"',
        f'         xmlns:dct="{DCT_NS}">',
        f"  <skos:Concept rdf:about={quoteattr(concept.uri)}>",
        f"    <skos:prefLabel>{escape(concept.pref_label)}</skos:prefLabel>",
    ]
    for alt in concept.alt_labels:
        lines.append(f"    <skos:altLabel>{escape(alt)}</skos:altLabel>")
    for note in concept.notes:
        lines.append(f"    <skos:note>{escape(note)}</skos:note>")
    for kind in ("broader", "narrower", "related"):
        for target in getattr(concept, kind):
            lines.append(f"    <skos:{kind} rdf:resource={quoteattr(target)}/>")
    if concept.ontology_id:
        lines.append(f"    <dct:isPartOf>{escape(concept.ontology_id)}</dct:isPartOf>")
    lines.append("  </skos:Concept>")
    lines.append("</rdf:RDF>")
    return "\n".join(lines) + "\n"


# --- Dublin Core XML ----------------------------------------------------------


def _encode_dc_xml(concept: Concept) -> str:
    # Deliberately lossy: the DC element set has no slot for hierarchy links,
    # so broader/narrower/related are dropped here and only here.
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<metadata xmlns:dc="{DC_NS}">',
        f"  <dc:identifier>{escape(concept.uri)}</dc:identifier>",
        f"  <dc:subject>{escape(concept.pref_label)}</dc:subject>",
    ]
    for alt in concept.alt_labels:
        lines.append(f"  <dc:subject>{escape(alt)}</dc:subject>")
    for note in concept.notes:
        lines.append(f"  <dc:description>{escape(note)}</dc:description>")
    if concept.ontology_id:
        lines.append(f"  <dc:source>{escape(concept.ontology_id)}</dc:source>")
    lines.append("</metadata>")
    return "\n".join(lines) + "\n"


# --- plain XML ----------------------------------------------------------------


def _encode_plain_xml(concept: Concept) -> str:
    open_tag = "<concept>"
    if concept.ontology_id:
        open_tag = f"<concept ontology={quoteattr(concept.ontology_id)}>"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        open_tag,
        f"  <uri>{escape(concept.uri)}</uri>",
        f"  <prefLabel>{escape(concept.pref_label)}</prefLabel>",
    ]
    for alt in concept.alt_labels:
        lines.append(f"  <altLabel>{escape(alt)}</altLabel>")
    for note in concept.notes:
        lines.append(f"  <note>{escape(note)}</note>")
    for kind in ("broader", "narrower", "related"):
        for target in getattr(concept, kind):
            lines.append(f"  <{kind}>{escape(target)}</{kind}>")
    lines.append("</concept>")
    return "\n".join(lines) + "\n"


def _decode_plain_xml(text: str) -> Concept:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise EncodingError(f"malformed plain-xml: {exc}") from exc
    if root.tag != "concept":
        raise EncodingError(f"malformed plain-xml: root element is <{root.tag}>")

    def texts(tag: str) -> tuple[str, ...]:
        return tuple(el.text or "" for el in root.findall(tag))

    uris = texts("uri")
    prefs = texts("prefLabel")
    if len(uris) != 1 or not uris[0]:
        raise EncodingError("malformed plain-xml: exactly one non-empty <uri> required")
    if len(prefs) != 1 or not prefs[0]:
        raise EncodingError("malformed plain-xml: exactly one non-empty <prefLabel> required")
    return Concept(
        uri=uris[0],
        pref_label=prefs[0],
        ontology_id=root.get("ontology", ""),
        alt_labels=texts("altLabel"),
        notes=texts("note"),
        broader=texts("broader"),
        narrower=texts("narrower"),
        related=texts("related"),
    )


_ENCODERS: dict[str, Callable[[Concept], str]] = {
    "json-ld": _encode_json_ld,
    "skos-rdf-xml": _encode_skos_rdf_xml,
    "dc-xml": _encode_dc_xml,
    "plain-xml": _encode_plain_xml,
}
