"""Concept search over preferred labels, alternate labels, and notes."""

from __future__ import annotations

from .errors import HiveError
from .model import Concept
from .store import StoreSnapshot
from .textnorm import normalize


def search_concepts(
    snapshot: StoreSnapshot, query: str, ontology_ids: list[str]
) -> dict[str, list[Concept]]:
    """Case-insensitive substring search, grouped by ontology.

    Within a group, prefLabel matches come first, then altLabel matches, then
    note matches; alphabetical inside each tier. Ontologies with no match are
    omitted from the result map.
    """
    needle = normalize(query)
    if not needle:
        raise HiveError("search query must be non-empty")
    results: dict[str, list[Concept]] = {}
    for ontology_id in ontology_ids:
        graph = snapshot.get(ontology_id).graph
        matched: list[tuple[int, Concept]] = []
        for concept in graph.concepts():
            tier = _match_tier(concept, needle)
            if tier:
                matched.append((tier, concept))
        if matched:
            matched.sort(key=lambda tc: (tc[0], tc[1].pref_label.casefold(), tc[1].uri))
            results[ontology_id] = [concept for _, concept in matched]
    return results


def _match_tier(concept: Concept, needle: str) -> int:
    """1 = prefLabel match, 2 = altLabel, 3 = note, 0 = no match."""
    if needle in normalize(concept.pref_label):
        return 1
    if any(needle in normalize(alt) for alt in concept.alt_labels):
        return 2
    if any(needle in normalize(note) for note in concept.notes):
        return 3
    return 0
