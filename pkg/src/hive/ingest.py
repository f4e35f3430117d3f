"""Ontology ingestion: triple streams collapsed into the SKOS concept model.

The collapse keeps taxonomic structure (subclass/broader/narrower), associative
links (related), labels, and note-like annotations, and discards everything
else (axioms, restrictions, individuals). Anonymous nodes and links that point
outside the emitted concept set are dropped and counted so callers can see how
lossy a given conversion was.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable

from . import vocab
from .errors import EmptyOntologyError, HiveError, UnknownFormatError
from .model import Concept, LoadedOntology, OntologyRecord
from .rdf import FORMATS, Literal, Triple, format_for_path, is_blank, parse_rdf

if TYPE_CHECKING:
    from .store import Store

log = logging.getLogger(__name__)

# predicates that carry hierarchy or associative links
_LINK_KINDS = {
    vocab.RDFS_SUBCLASSOF: "broader",
    vocab.SKOS_BROADER: "broader",
    vocab.SKOS_NARROWER: "narrower",
    vocab.SKOS_RELATED: "related",
}

_NOTE_PREDICATES = (vocab.RDFS_COMMENT, vocab.SKOS_SCOPE_NOTE, vocab.SKOS_DEFINITION)


@dataclass
class ConversionReport:
    """Counters describing what the SKOS collapse kept and dropped."""

    concepts_emitted: int = 0
    labels_defaulted: int = 0
    cycles_broken: int = 0
    dangling_links_dropped: int = 0
    blank_nodes_skipped: int = 0

    def to_dict(self) -> dict:
        return {
            "concepts_emitted": self.concepts_emitted,
            "labels_defaulted": self.labels_defaulted,
            "cycles_broken": self.cycles_broken,
            "dangling_links_dropped": self.dangling_links_dropped,
            "blank_nodes_skipped": self.blank_nodes_skipped,
        }


def _is_note_predicate(predicate: str) -> bool:
    return predicate in _NOTE_PREDICATES or vocab.local_name(predicate) == "definition"


def _label_rank(lang: str | None) -> int:
    """Order label languages: English first, untagged next, other tags last."""
    if lang == "en":
        return 0
    if lang is None:
        return 1
    return 2


def collapse_to_skos(
    triples: Iterable[Triple], ontology_id: str = ""
) -> tuple[list[Concept], ConversionReport]:
    """Collapse a triple set into SKOS concepts.

    Subjects typed ``owl:Class`` or ``skos:Concept`` become concepts (scheme
    and owl:Thing scaffolding excluded). Subclass and broader/narrower triples
    become the ``broader`` relation, which is then made acyclic and
    reciprocated into ``narrower``. Returns the concepts sorted by URI plus a
    report of everything dropped along the way.
    """
    report = ConversionReport()

    blanks: set[str] = set()
    types: dict[str, set[str]] = {}
    # per subject: ordered label candidates and raw link / note statements
    labels: dict[str, list[tuple[int, int, str, str | None]]] = {}
    alt_labels: dict[str, list[tuple[int, str]]] = {}
    notes: dict[str, list[tuple[int, str, str]]] = {}
    links: dict[str, list[tuple[int, str, str | Literal]]] = {}

    for order, triple in enumerate(triples):
        s, p, o = triple.subject, triple.predicate, triple.object
        if is_blank(s):
            blanks.add(s)
            continue
        if is_blank(o):
            blanks.add(o)
            continue
        if p == vocab.RDF_TYPE and isinstance(o, str):
            types.setdefault(s, set()).add(o)
        elif p == vocab.SKOS_PREF_LABEL and isinstance(o, Literal):
            labels.setdefault(s, []).append((0, order, o.text, o.lang))
        elif p == vocab.RDFS_LABEL and isinstance(o, Literal):
            labels.setdefault(s, []).append((1, order, o.text, o.lang))
        elif p == vocab.SKOS_ALT_LABEL and isinstance(o, Literal):
            alt_labels.setdefault(s, []).append((order, o.text))
        elif p in _LINK_KINDS:
            links.setdefault(s, []).append((order, _LINK_KINDS[p], o))
        elif _is_note_predicate(p) and isinstance(o, Literal):
            notes.setdefault(s, []).append((order, p, o.text))

    report.blank_nodes_skipped = len(blanks)

    emitted = {
        s
        for s, ts in types.items()
        if (vocab.OWL_CLASS in ts or vocab.SKOS_CONCEPT in ts)
        and s != vocab.OWL_THING
        and vocab.SKOS_CONCEPT_SCHEME not in ts
    }
    if not emitted:
        raise EmptyOntologyError(
            "no owl:Class or skos:Concept subjects found; nothing to ingest"
        )

    # resolve links into broader/related maps, dropping dangling targets
    broader: dict[str, list[str]] = {uri: [] for uri in emitted}
    related: dict[str, list[str]] = {uri: [] for uri in emitted}
    for uri in sorted(emitted):
        for _, kind, target in sorted(links.get(uri, [])):
            if not isinstance(target, str) or target not in emitted:
                report.dangling_links_dropped += 1
                continue
            if kind == "narrower":
                # s narrower o: s is a parent of o
                if uri not in broader[target]:
                    broader[target].append(uri)
            elif kind == "broader":
                if target not in broader[uri]:
                    broader[uri].append(target)
            elif target != uri and target not in related[uri]:
                related[uri].append(target)

    report.cycles_broken = _break_cycles(broader)

    narrower: dict[str, list[str]] = {uri: [] for uri in emitted}
    for uri in emitted:
        for parent in broader[uri]:
            narrower[parent].append(uri)
    for child_list in narrower.values():
        child_list.sort()

    concepts: list[Concept] = []
    for uri in sorted(emitted):
        pref, alts = _choose_labels(
            labels.get(uri, []), alt_labels.get(uri, []), uri, report
        )
        concepts.append(
            Concept(
                uri=uri,
                pref_label=pref,
                ontology_id=ontology_id,
                alt_labels=tuple(alts),
                notes=tuple(_merge_notes(notes.get(uri, []))),
                broader=tuple(broader[uri]),
                narrower=tuple(narrower[uri]),
                related=tuple(related[uri]),
            )
        )
    report.concepts_emitted = len(concepts)
    return concepts, report


def _choose_labels(
    candidates: list[tuple[int, int, str, str | None]],
    alt_candidates: list[tuple[int, str]],
    uri: str,
    report: ConversionReport,
) -> tuple[str, list[str]]:
    """Pick pref_label per tier/language preference; losers join alt labels."""
    pref: str | None = None
    losers: list[tuple[int, str]] = []
    if candidates:
        unique = sorted(set(candidates))
        best_tier = min(tier for tier, _, _, _ in unique)
        tier_best = sorted(
            (c for c in unique if c[0] == best_tier),
            key=lambda c: (_label_rank(c[3]), c[3] or "", c[1]),
        )
        pref = tier_best[0][2]
        losers = [
            (order, text)
            for tier, order, text, lang in unique
            if (tier, order, text, lang) != tier_best[0]
        ]
    if pref is None or not pref:
        pref = vocab.local_name(uri) or uri
        report.labels_defaulted += 1

    merged = sorted(losers + alt_candidates)
    seen: set[str] = {pref}
    alts: list[str] = []
    for _, text in merged:
        if text and text not in seen:
            seen.add(text)
            alts.append(text)
    return pref, alts


def _merge_notes(raw: list[tuple[int, str, str]]) -> list[str]:
    """Merge note statements in source order, deduplicating repeat statements."""
    seen: set[tuple[str, str]] = set()
    out: list[str] = []
    for _, predicate, text in sorted(raw):
        if not text or (predicate, text) in seen:
            continue
        seen.add((predicate, text))
        out.append(text)
    return out


def _break_cycles(broader: dict[str, list[str]]) -> int:
    """Remove back edges from the child-direction graph, in place.

    Traversal is depth-first from URI-sorted roots (then URI-sorted leftover
    nodes for fully cyclic regions), expanding children in URI order, so the
    same input always loses the same edges. An edge into a node currently on
    the stack closes a cycle and is removed by deleting the parent from the
    child's broader list.
    """
    children: dict[str, list[str]] = {uri: [] for uri in broader}
    for child, parents in broader.items():
        for parent in parents:
            children[parent].append(child)
    for kids in children.values():
        kids.sort()

    removed = 0
    visited: set[str] = set()
    on_stack: set[str] = set()

    def visit(start: str) -> None:
        nonlocal removed
        # iterative DFS; (node, child_iterator) frames
        stack: list[tuple[str, int]] = [(start, 0)]
        visited.add(start)
        on_stack.add(start)
        while stack:
            node, idx = stack[-1]
            kids = children[node]
            if idx >= len(kids):
                stack.pop()
                on_stack.discard(node)
                continue
            stack[-1] = (node, idx + 1)
            child = kids[idx]
            if child in on_stack:
                if node in broader[child]:
                    broader[child].remove(node)
                    removed += 1
                continue
            if child in visited:
                continue
            visited.add(child)
            on_stack.add(child)
            stack.append((child, 0))

    for root in sorted(uri for uri, parents in broader.items() if not parents):
        if root not in visited:
            visit(root)
    for node in sorted(broader):
        if node not in visited:
            visit(node)
    return removed


_SLUG_RE = re.compile(r"[^a-z0-9]+")


def slugify(text: str) -> str:
    """Reduce text to a lowercase id slug (ascii letters, digits, hyphens)."""
    return _SLUG_RE.sub("-", text.lower()).strip("-")


def ingest_file(
    store: "Store",
    path: str,
    format: str = "auto",
    ontology_id: str | None = None,
    display_name: str | None = None,
) -> tuple[OntologyRecord, ConversionReport]:
    """Parse, collapse, and atomically persist one ontology file.

    Replaces any existing ontology with the same id. Parse and collapse errors
    propagate before anything is written, so a failed ingest leaves the store
    untouched.
    """
    fmt = format_for_path(path) if format in (None, "", "auto") else format
    if fmt not in FORMATS:
        raise UnknownFormatError(
            f"unsupported RDF syntax {fmt!r}; expected one of {FORMATS}"
        )
    source = Path(path)
    oid = slugify(ontology_id if ontology_id else source.stem)
    if not oid:
        raise HiveError(f"cannot derive a usable ontology id from {ontology_id or path!r}")

    data = source.read_bytes()
    triples = parse_rdf(data, fmt)
    concepts, report = collapse_to_skos(triples, ontology_id=oid)

    emitted = {c.uri for c in concepts}
    owl_typed = any(
        t.predicate == vocab.RDF_TYPE
        and t.object == vocab.OWL_CLASS
        and t.subject in emitted
        for t in triples
    )
    source_format = fmt if owl_typed else "skos-native"

    loaded = LoadedOntology.build(
        ontology_id=oid,
        display_name=display_name or (ontology_id if ontology_id else source.stem),
        source_format=source_format,
        concepts=concepts,
    )
    loaded.graph.check_invariants()
    store.commit_ontology(loaded)
    log.info(
        "ingested %s as %r: %d concepts (%d cycles broken, %d dangling dropped)",
        path, oid, report.concepts_emitted, report.cycles_broken,
        report.dangling_links_dropped,
    )
    return loaded.record, report
