"""Document indexing: extracted candidate phrases matched to concept labels.

Matching is exact on normalized strings against preferred labels only. Hits
are grouped by ontology, ranked by extraction score, and bucketed into five
display weights (5 = strongest) for the font-size presentation.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field

from .documents import DocumentSource
from .keywords import CandidatePhrase, ExtractionConfig, extract
from .store import StoreSnapshot

log = logging.getLogger(__name__)

SORT_MODES = ("score", "alpha", "ontology-size", "merged")


@dataclass(frozen=True)
class TermHit:
    """One matched concept for one candidate phrase."""

    ontology_id: str
    uri: str
    pref_label: str
    matched_phrase: str
    score: float
    rank_in_ontology: int
    display_weight: int

    def to_dict(self) -> dict:
        return {
            "ontology_id": self.ontology_id,
            "uri": self.uri,
            "pref_label": self.pref_label,
            "matched_phrase": self.matched_phrase,
            "score": self.score,
            "rank": self.rank_in_ontology,
            "display_weight": self.display_weight,
        }


@dataclass
class IndexingResult:
    source: dict
    config: ExtractionConfig
    hits_by_ontology: dict[str, list[TermHit]] = field(default_factory=dict)
    candidates_total: int = 0
    elapsed_ms: float = 0.0

    def total_hits(self) -> int:
        return sum(len(hits) for hits in self.hits_by_ontology.values())

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "config": {
                "algorithm": self.config.algorithm,
                "max_phrase_len": self.config.max_phrase_len,
                "top_k": self.config.top_k,
                "stopword_list_id": self.config.stopword_list_id,
            },
            "hits_by_ontology": {
                oid: [hit.to_dict() for hit in hits]
                for oid, hits in self.hits_by_ontology.items()
            },
            "candidates_total": self.candidates_total,
            "elapsed_ms": self.elapsed_ms,
        }


def display_weight(rank: int, total: int) -> int:
    """Quantile bucket 1..5 for a 1-based rank; rank 1 always weighs 5."""
    if total <= 0 or rank < 1:
        return 1
    return 5 - (5 * (rank - 1)) // total


def match_candidates(
    snapshot: StoreSnapshot,
    candidates: list[CandidatePhrase],
    ontology_ids: list[str],
) -> dict[str, list[TermHit]]:
    """Match candidates against prefLabel indexes of the selected ontologies.

    Candidates must already be in display order (the extractors emit them
    sorted by their own polarity); per-ontology hit order follows it.
    """
    hits_by_ontology: dict[str, list[TermHit]] = {}
    for ontology_id in ontology_ids:
        graph = snapshot.get(ontology_id).graph
        raw: list[tuple[CandidatePhrase, str]] = []
        for candidate in candidates:
            for uri in graph.lookup_pref_label(candidate.normalized):
                raw.append((candidate, uri))
        total = len(raw)
        hits = [
            TermHit(
                ontology_id=ontology_id,
                uri=uri,
                pref_label=graph.get(uri).pref_label,
                matched_phrase=candidate.normalized,
                score=candidate.score,
                rank_in_ontology=rank,
                display_weight=display_weight(rank, total),
            )
            for rank, (candidate, uri) in enumerate(raw, start=1)
        ]
        hits_by_ontology[ontology_id] = hits
    return hits_by_ontology


def index_document(
    snapshot: StoreSnapshot,
    source: DocumentSource,
    ontology_ids: list[str],
    config: ExtractionConfig | None = None,
) -> IndexingResult:
    """Extract keywords from one document and match them to concepts."""
    config = config or ExtractionConfig()
    started = time.perf_counter()
    text = source.extracted_text
    if not text.strip():
        log.warning("document %s has no text; indexing returns nothing", source.locator)
        candidates: list[CandidatePhrase] = []
    else:
        candidates = extract(text, config)
    hits = match_candidates(snapshot, candidates, ontology_ids)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return IndexingResult(
        source=source.summary(),
        config=config,
        hits_by_ontology=hits,
        candidates_total=len(candidates),
        elapsed_ms=elapsed_ms,
    )


@dataclass
class BatchEntry:
    """One batch item: either a result or a recorded failure."""

    locator: str
    result: IndexingResult | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        if self.error is not None:
            return {"source": self.locator, "error": self.error}
        assert self.result is not None
        data = self.result.to_dict()
        return {
            "source": self.locator,
            "hits_by_ontology": {
                oid: [
                    {
                        "uri": h["uri"],
                        "prefLabel": h["pref_label"],
                        "score": h["score"],
                        "rank": h["rank"],
                    }
                    for h in hits
                ]
                for oid, hits in data["hits_by_ontology"].items()
            },
            "candidates_total": data["candidates_total"],
        }


def index_batch(
    snapshot: StoreSnapshot,
    sources: list[DocumentSource | Exception | tuple[str, str]],
    ontology_ids: list[str],
    config: ExtractionConfig | None = None,
) -> list[BatchEntry]:
    """Index many documents, recording per-source failures without stopping.

    ``sources`` entries are DocumentSource objects, or (locator, error) tuples
    for documents that already failed to load upstream.
    """
    entries: list[BatchEntry] = []
    for item in sources:
        if isinstance(item, tuple):
            locator, message = item
            entries.append(BatchEntry(locator=locator, error=message))
            continue
        assert isinstance(item, DocumentSource)
        try:
            result = index_document(snapshot, item, ontology_ids, config)
            entries.append(BatchEntry(locator=item.locator, result=result))
        except Exception as exc:  # noqa: BLE001 - batch isolation requires catching
            log.warning("indexing failed for %s: %s", item.locator, exc)
            entries.append(BatchEntry(locator=item.locator, error=str(exc)))
    if entries and all(entry.error is not None for entry in entries):
        from .errors import DocumentError

        raise DocumentError(
            f"all {len(entries)} batch documents failed; first error: {entries[0].error}"
        )
    return entries


def write_batch_jsonl(entries: list[BatchEntry], path: str) -> None:
    """One JSON object per line per batch entry."""
    with open(path, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(json.dumps(entry.to_dict(), ensure_ascii=False) + "\n")


def arrange_hits(result: IndexingResult, mode: str = "score") -> dict:
    """The four display arrangements over one result, without re-scoring.

    score: groups in selection order, hits by extraction rank (as stored).
    alpha: same groups, hits alphabetical by label.
    ontology-size: groups reordered by descending hit count.
    merged: one flat list across ontologies in score-polarity order.
    """
    if mode not in SORT_MODES:
        raise ValueError(f"unknown sort mode {mode!r}; expected one of {SORT_MODES}")
    groups = result.hits_by_ontology
    if mode == "merged":
        ascending = result.config.score_polarity == "ascending"
        merged = sorted(
            (hit for hits in groups.values() for hit in hits),
            key=lambda h: (
                h.score if ascending else -h.score,
                h.rank_in_ontology,
                h.ontology_id,
            ),
        )
        return {"mode": mode, "hits": [h.to_dict() for h in merged]}
    if mode == "alpha":
        ordered = {
            oid: sorted(hits, key=lambda h: (h.pref_label.casefold(), h.uri))
            for oid, hits in groups.items()
        }
    elif mode == "ontology-size":
        ordered = {
            oid: groups[oid]
            for oid in sorted(groups, key=lambda o: (-len(groups[o]), o))
        }
    else:
        ordered = groups
    return {
        "mode": mode,
        "groups": [
            {"ontology_id": oid, "hits": [h.to_dict() for h in hits]}
            for oid, hits in ordered.items()
        ],
    }
