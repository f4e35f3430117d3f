"""SKOS-collapsed concept model and hierarchical navigation.

A loaded ontology is an immutable :class:`ConceptGraph`: concepts keyed by URI
plus derived indexes (roots, children, normalized prefLabel lookup). All graph
mutation happens upstream, at ingest time; navigation is read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConceptNotFoundError, InvariantViolation
from .textnorm import normalize


@dataclass(frozen=True)
class Concept:
    """One concept of one ontology, reduced to the seven SKOS attribute groups.

    ``broader``/``narrower``/``related`` hold URIs of concepts in the same
    ontology; dangling references are dropped before a Concept is built.
    """

    uri: str
    pref_label: str
    ontology_id: str
    alt_labels: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    broader: tuple[str, ...] = ()
    narrower: tuple[str, ...] = ()
    related: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        """JSON-ready view. Field order is stable; empty lists are kept."""
        return {
            "uri": self.uri,
            "pref_label": self.pref_label,
            "ontology_id": self.ontology_id,
            "alt_labels": list(self.alt_labels),
            "notes": list(self.notes),
            "broader": list(self.broader),
            "narrower": list(self.narrower),
            "related": list(self.related),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Concept":
        return cls(
            uri=data["uri"],
            pref_label=data["pref_label"],
            ontology_id=data.get("ontology_id", ""),
            alt_labels=tuple(data.get("alt_labels", ())),
            notes=tuple(data.get("notes", ())),
            broader=tuple(data.get("broader", ())),
            narrower=tuple(data.get("narrower", ())),
            related=tuple(data.get("related", ())),
        )


@dataclass(frozen=True)
class OntologyRecord:
    """Catalog entry for a loaded ontology."""

    id: str
    display_name: str
    source_format: str
    concept_count: int
    root_uris: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "display_name": self.display_name,
            "source_format": self.source_format,
            "concept_count": self.concept_count,
            "root_uris": list(self.root_uris),
        }


def sibling_key(concept: Concept) -> tuple[str, str]:
    """Sort key for sibling lists: case-insensitive label, then URI."""
    return (concept.pref_label.casefold(), concept.uri)


class ConceptGraph:
    """Immutable concept set for one ontology with navigation indexes."""

    def __init__(self, ontology_id: str, concepts: list[Concept] | tuple[Concept, ...]):
        self.ontology_id = ontology_id
        self._by_uri: dict[str, Concept] = {}
        for c in concepts:
            if c.uri in self._by_uri:
                raise InvariantViolation(f"duplicate concept URI {c.uri!r} in {ontology_id!r}")
            if not c.pref_label:
                raise InvariantViolation(f"concept {c.uri!r} has an empty pref_label")
            self._by_uri[c.uri] = c

        self._children: dict[str, list[str]] = {uri: [] for uri in self._by_uri}
        self._roots: list[str] = []
        for c in self._by_uri.values():
            if not c.broader:
                self._roots.append(c.uri)
            for parent in c.broader:
                if parent not in self._by_uri:
                    raise InvariantViolation(
                        f"concept {c.uri!r} points at missing parent {parent!r}"
                    )
                self._children[parent].append(c.uri)

        for parent, kids in self._children.items():
            kids.sort(key=lambda uri: sibling_key(self._by_uri[uri]))
        self._roots.sort(key=lambda uri: sibling_key(self._by_uri[uri]))

        # normalized prefLabel -> URIs carrying it (sorted for determinism)
        self._label_index: dict[str, list[str]] = {}
        for c in self._by_uri.values():
            self._label_index.setdefault(normalize(c.pref_label), []).append(c.uri)
        for uris in self._label_index.values():
            uris.sort()

    def __len__(self) -> int:
        return len(self._by_uri)

    def __contains__(self, uri: str) -> bool:
        return uri in self._by_uri

    def concepts(self) -> list[Concept]:
        """All concepts, URI-sorted."""
        return [self._by_uri[uri] for uri in sorted(self._by_uri)]

    def get(self, uri: str) -> Concept:
        try:
            return self._by_uri[uri]
        except KeyError:
            raise ConceptNotFoundError(self.ontology_id, uri) from None

    def roots(self) -> list[Concept]:
        return [self._by_uri[uri] for uri in self._roots]

    def children(self, uri: str) -> list[Concept]:
        if uri not in self._by_uri:
            raise ConceptNotFoundError(self.ontology_id, uri)
        return [self._by_uri[kid] for kid in self._children[uri]]

    def lookup_pref_label(self, normalized_label: str) -> list[str]:
        """URIs whose normalized prefLabel equals ``normalized_label``."""
        return list(self._label_index.get(normalized_label, ()))

    def label_index(self) -> dict[str, list[str]]:
        """Copy of the full normalized prefLabel index."""
        return {label: list(uris) for label, uris in self._label_index.items()}

    def check_invariants(self) -> None:
        """Full-scan assertion of reciprocity, acyclicity, and link closure.

        Cheap enough for tests and commit-time validation; raises
        InvariantViolation on the first breach found.
        """
        for c in self._by_uri.values():
            overlap = set(c.broader) & set(c.narrower)
            if overlap:
                raise InvariantViolation(
                    f"{c.uri!r} lists {sorted(overlap)} as both broader and narrower"
                )
            for group in (c.broader, c.narrower, c.related):
                for target in group:
                    if target not in self._by_uri:
                        raise InvariantViolation(f"{c.uri!r} links to missing {target!r}")
            for parent in c.broader:
                if c.uri not in self._by_uri[parent].narrower:
                    raise InvariantViolation(
                        f"broader edge {c.uri!r} -> {parent!r} is not reciprocated"
                    )
            for child in c.narrower:
                if c.uri not in self._by_uri[child].broader:
                    raise InvariantViolation(
                        f"narrower edge {c.uri!r} -> {child!r} is not reciprocated"
                    )

        # Acyclicity of broader via iterative coloring.
        WHITE, GRAY, BLACK = 0, 1, 2
        color = {uri: WHITE for uri in self._by_uri}
        for start in self._by_uri:
            if color[start] != WHITE:
                continue
            stack: list[tuple[str, int]] = [(start, 0)]
            color[start] = GRAY
            while stack:
                uri, i = stack[-1]
                parents = self._by_uri[uri].broader
                if i < len(parents):
                    stack[-1] = (uri, i + 1)
                    nxt = parents[i]
                    if color[nxt] == GRAY:
                        raise InvariantViolation(f"broader cycle through {nxt!r}")
                    if color[nxt] == WHITE:
                        color[nxt] = GRAY
                        stack.append((nxt, 0))
                else:
                    color[uri] = BLACK
                    stack.pop()


@dataclass(frozen=True)
class LoadedOntology:
    """An ontology as published in a store snapshot: record plus graph."""

    record: OntologyRecord
    graph: ConceptGraph = field(compare=False)

    @staticmethod
    def build(
        ontology_id: str,
        display_name: str,
        source_format: str,
        concepts: list[Concept],
    ) -> "LoadedOntology":
        graph = ConceptGraph(ontology_id, concepts)
        record = OntologyRecord(
            id=ontology_id,
            display_name=display_name,
            source_format=source_format,
            concept_count=len(graph),
            root_uris=tuple(c.uri for c in graph.roots()),
        )
        return LoadedOntology(record=record, graph=graph)
