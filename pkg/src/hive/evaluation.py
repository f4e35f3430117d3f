"""Relevance-study arithmetic over indexing output plus rater judgments.

Inputs are a results JSONL (one line per document, as written by the batch
indexer) and a long-format judgments CSV with one row per rater per suggested
term. Terms are aggregated to a binary relevant/not decision by a k-of-n
threshold, then precision is reported per document, per ontology, and overall.
"""

from __future__ import annotations

import csv
import json
import statistics
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Mapping, Sequence

from .errors import EvalInputError
from .textnorm import normalize

RATING_VALUES = ("relevant", "partial", "not")


def render_pct(numerator: float, denominator: float) -> float:
    """Percentage with exactly 2 decimals, round-half-up (printed-table style)."""
    if denominator == 0:
        return 0.0
    value = Decimal(str(numerator)) * 100 / Decimal(str(denominator))
    return float(value.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def render_2dp(value: float) -> float:
    return float(Decimal(str(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def aggregate_threshold(ratings: Sequence[str], k: int, n: int) -> bool:
    """True when at least k of the n raters said relevant or partial."""
    if not 1 <= k <= n:
        raise EvalInputError(f"threshold k={k} outside 1..{n}")
    if len(ratings) != n:
        raise EvalInputError(f"expected {n} ratings, got {len(ratings)}")
    for rating in ratings:
        if rating not in RATING_VALUES:
            raise EvalInputError(f"unknown rating value {rating!r}")
    return sum(1 for r in ratings if r in ("relevant", "partial")) >= k


def precision(candidates: int, relevant: int) -> float:
    """relevant/candidates as a fraction; 0.0 for the zero-candidate case."""
    if candidates < 0 or relevant < 0 or relevant > candidates:
        raise EvalInputError(
            f"bad precision inputs: candidates={candidates}, relevant={relevant}"
        )
    if candidates == 0:
        return 0.0
    return relevant / candidates


def combined_relevancy(extracted: int, relevant: int, partial: int) -> float:
    """Fraction of extracted terms judged relevant or partially relevant."""
    if min(extracted, relevant, partial) < 0 or relevant + partial > extracted:
        raise EvalInputError(
            f"bad relevancy inputs: extracted={extracted}, "
            f"relevant={relevant}, partial={partial}"
        )
    if extracted == 0:
        return 0.0
    return (relevant + partial) / extracted


@dataclass(frozen=True)
class PrecisionRow:
    """One study table row: a document or an ontology."""

    key: str
    candidates: int
    relevant: int
    precision: float  # fraction in [0, 1]
    precision_pct: float  # rendered 2-dp percentage, as printed
    degenerate: bool = False  # no candidates at all

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "candidates": self.candidates,
            "relevant": self.relevant,
            "precision": self.precision,
            "precision_pct": self.precision_pct,
            "degenerate": self.degenerate,
        }


def _row(key: str, candidates: int, relevant: int) -> PrecisionRow:
    frac = precision(candidates, relevant)
    return PrecisionRow(
        key=key,
        candidates=candidates,
        relevant=relevant,
        precision=frac,
        precision_pct=render_pct(relevant, candidates),
        degenerate=candidates == 0,
    )


@dataclass(frozen=True)
class Dispersion:
    mean: float
    stddev: float  # sample standard deviation
    max: int
    min: int

    def to_dict(self) -> dict:
        return {"mean": self.mean, "stddev": self.stddev, "max": self.max, "min": self.min}


def _dispersion(counts: Sequence[int]) -> Dispersion:
    return Dispersion(
        mean=statistics.mean(counts) if counts else 0.0,
        stddev=statistics.stdev(counts) if len(counts) > 1 else 0.0,
        max=max(counts) if counts else 0,
        min=min(counts) if counts else 0,
    )


@dataclass
class StudySummary:
    per_article: list[PrecisionRow]
    per_ontology: list[PrecisionRow]
    totals: PrecisionRow
    article_dispersion: Dispersion
    ontology_dispersion: Dispersion
    combined_relevancy_pct: float | None = None
    mean_extracted_per_doc: float | None = None
    judged_terms: int = 0
    k: int = 0
    n: int = 0

    def to_dict(self) -> dict:
        data = {
            "per_article": [row.to_dict() for row in self.per_article],
            "per_ontology": [row.to_dict() for row in self.per_ontology],
            "totals": self.totals.to_dict(),
            "article_dispersion": self.article_dispersion.to_dict(),
            "ontology_dispersion": self.ontology_dispersion.to_dict(),
            "judged_terms": self.judged_terms,
            "k": self.k,
            "n": self.n,
        }
        if self.combined_relevancy_pct is not None:
            data["combined_relevancy_pct"] = self.combined_relevancy_pct
        if self.mean_extracted_per_doc is not None:
            data["mean_extracted_per_doc"] = self.mean_extracted_per_doc
        return data


@dataclass(frozen=True)
class JudgmentKey:
    article_id: str
    ontology_id: str
    term: str


def load_results_jsonl(path: str) -> list[dict]:
    """Parse a batch-indexing JSONL file, skipping error-only lines."""
    results = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError as exc:
                raise EvalInputError(f"{path}:{lineno}: bad JSON: {exc}") from exc
            if not isinstance(entry, dict) or "source" not in entry:
                raise EvalInputError(f"{path}:{lineno}: missing 'source' field")
            if "error" in entry:
                continue
            results.append(entry)
    return results


def load_judgments_csv(path: str) -> dict[JudgmentKey, list[tuple[str, str]]]:
    """Group CSV rows to (article, ontology, term) -> [(rater, rating), ...]."""
    required = {"article_id", "ontology_id", "term", "rater", "rating"}
    grouped: dict[JudgmentKey, list[tuple[str, str]]] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise EvalInputError(
                f"{path}: header must include {sorted(required)}, "
                f"got {reader.fieldnames}"
            )
        for lineno, row in enumerate(reader, start=2):
            rating = (row["rating"] or "").strip()
            if rating not in RATING_VALUES:
                raise EvalInputError(f"{path}:{lineno}: unknown rating {rating!r}")
            key = JudgmentKey(
                article_id=(row["article_id"] or "").strip(),
                ontology_id=(row["ontology_id"] or "").strip(),
                term=normalize(row["term"] or ""),
            )
            if not key.article_id or not key.ontology_id or not key.term:
                raise EvalInputError(f"{path}:{lineno}: empty join field")
            grouped.setdefault(key, []).append(((row["rater"] or "").strip(), rating))
    return grouped


def _result_hits(results: Iterable[dict]) -> tuple[list[str], dict[JudgmentKey, int]]:
    """Flatten results to hit multiset keyed for the judgment join.

    Returns (article order, key -> hit count). Candidates are counted from the
    hit lists, never from candidates_total (which also counts unmatched
    phrases).
    """
    order: list[str] = []
    hits: dict[JudgmentKey, int] = {}
    for entry in results:
        article_id = str(entry["source"])
        if article_id in order:
            raise EvalInputError(f"duplicate article {article_id!r} in results")
        order.append(article_id)
        groups = entry.get("hits_by_ontology") or {}
        if not isinstance(groups, Mapping):
            raise EvalInputError(f"article {article_id!r}: hits_by_ontology must be a map")
        for ontology_id, hit_list in groups.items():
            for hit in hit_list:
                term = normalize(str(hit.get("prefLabel", "")))
                if not term:
                    raise EvalInputError(
                        f"article {article_id!r}: hit without a prefLabel"
                    )
                key = JudgmentKey(article_id, str(ontology_id), term)
                hits[key] = hits.get(key, 0) + 1
    return order, hits


def summarize_study(
    results: list[dict],
    judgments: dict[JudgmentKey, list[tuple[str, str]]],
    k: int,
    n: int,
    combined: tuple[int, int, int] | None = None,
    combined_docs: int | None = None,
) -> StudySummary:
    """Per-article and per-ontology precision tables plus dispersion stats.

    Articles keep results-file order; ontologies are sorted by id. A judged
    term missing from the results is an input error; an unjudged hit simply
    never counts as relevant.
    """
    article_order, hits = _result_hits(results)
    for key in judgments:
        if key not in hits:
            raise EvalInputError(
                f"judgment references unknown hit: article={key.article_id!r} "
                f"ontology={key.ontology_id!r} term={key.term!r}"
            )

    ontology_ids = sorted({key.ontology_id for key in hits})
    # every requested ontology appears in the results map even with zero hits
    for entry in results:
        for ontology_id in (entry.get("hits_by_ontology") or {}):
            if ontology_id not in ontology_ids:
                ontology_ids.append(ontology_id)
    ontology_ids.sort()

    candidates_by_article = dict.fromkeys(article_order, 0)
    candidates_by_ontology = dict.fromkeys(ontology_ids, 0)
    relevant_by_article = dict.fromkeys(article_order, 0)
    relevant_by_ontology = dict.fromkeys(ontology_ids, 0)

    for key, count in hits.items():
        candidates_by_article[key.article_id] += count
        candidates_by_ontology[key.ontology_id] += count
        ratings = judgments.get(key)
        if ratings is not None and aggregate_threshold([r for _, r in ratings], k, n):
            relevant_by_article[key.article_id] += count
            relevant_by_ontology[key.ontology_id] += count

    per_article = [
        _row(a, candidates_by_article[a], relevant_by_article[a]) for a in article_order
    ]
    per_ontology = [
        _row(o, candidates_by_ontology[o], relevant_by_ontology[o]) for o in ontology_ids
    ]
    totals = _row(
        "total",
        sum(candidates_by_article.values()),
        sum(relevant_by_article.values()),
    )

    summary = StudySummary(
        per_article=per_article,
        per_ontology=per_ontology,
        totals=totals,
        article_dispersion=_dispersion([row.candidates for row in per_article]),
        ontology_dispersion=_dispersion([row.candidates for row in per_ontology]),
        judged_terms=len(judgments),
        k=k,
        n=n,
    )
    if combined is not None:
        extracted, relevant, partial = combined
        summary.combined_relevancy_pct = render_pct(relevant + partial, extracted)
        if combined_docs:
            summary.mean_extracted_per_doc = render_2dp(extracted / combined_docs)
    return summary


def run_eval(
    results_path: str,
    judgments_path: str,
    k: int = 4,
    n: int = 5,
    combined: tuple[int, int, int] | None = None,
    combined_docs: int | None = None,
) -> StudySummary:
    return summarize_study(
        load_results_jsonl(results_path),
        load_judgments_csv(judgments_path),
        k,
        n,
        combined=combined,
        combined_docs=combined_docs,
    )
