"""Unsupervised keyword extraction: RAKE and YAKE.

Both algorithms share the tokenizer and stopword machinery here. RAKE scores
phrases by summed word degree/frequency ratios (higher is better); YAKE scores
them from per-term statistical features (lower is better). All functions are
pure; extraction state never leaks between calls.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from statistics import median

from .errors import HiveError

_WORD = re.compile(r"[^\W_]+", re.UNICODE)
_SENTENCE_BREAK = re.compile(r"[.!?\n\r]+")


@dataclass(frozen=True)
class Token:
    text: str
    lower: str
    offset: int
    is_number: bool


@dataclass(frozen=True)
class CandidatePhrase:
    """One scored keyword candidate.

    ``score`` direction depends on the algorithm: RAKE ranks higher-first,
    YAKE lower-first (see ExtractionConfig.score_polarity).
    """

    text: str
    normalized: str
    score: float
    token_count: int
    first_offset: int


ALGORITHMS = ("rake", "yake")


@dataclass(frozen=True)
class ExtractionConfig:
    algorithm: str = "rake"
    max_phrase_len: int = 3
    top_k: int = 30
    stopword_list_id: str = "smart"

    @property
    def score_polarity(self) -> str:
        return "ascending" if self.algorithm == "yake" else "descending"

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise HiveError(f"unknown extraction algorithm {self.algorithm!r}")
        if self.max_phrase_len < 1:
            raise HiveError("max_phrase_len must be >= 1")
        if self.top_k < 1:
            raise HiveError("top_k must be >= 1")


def tokenize(text: str) -> list[list[Token]]:
    """Split text into sentences of word tokens with character offsets.

    Sentences break on ``. ! ?`` and newlines; words are maximal letter/digit
    runs, so hyphens and underscores separate tokens. Sentences without any
    word token are dropped.
    """
    sentences: list[list[Token]] = []
    pos = 0
    for m in _SENTENCE_BREAK.finditer(text):
        _add_sentence(text, pos, m.start(), sentences)
        pos = m.end()
    _add_sentence(text, pos, len(text), sentences)
    return sentences


def _add_sentence(text: str, start: int, end: int, out: list[list[Token]]) -> None:
    tokens = [
        Token(
            text=m.group(),
            lower=m.group().lower(),
            offset=start + m.start(),
            is_number=m.group().isdigit(),
        )
        for m in _WORD.finditer(text, start, end)
    ]
    if tokens:
        out.append(tokens)


@lru_cache(maxsize=8)
def load_stopwords(list_id: str = "smart") -> frozenset[str]:
    """Load a bundled stopword list: one lowercase token per line, # comments."""
    ref = resources.files("hive").joinpath(f"data/stopwords/{list_id}.txt")
    try:
        raw = ref.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError):
        raise HiveError(f"unknown stopword list {list_id!r}") from None
    words = set()
    for line in raw.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def _trim_numbers(run: list[Token]) -> list[Token]:
    start, end = 0, len(run)
    while start < end and run[start].is_number:
        start += 1
    while end > start and run[end - 1].is_number:
        end -= 1
    return run[start:end]


def _candidate_runs(
    sentences: list[list[Token]], stopwords: frozenset[str], max_len: int
) -> list[list[Token]]:
    """Maximal stopword-free runs per sentence, number-trimmed and capped."""
    runs: list[list[Token]] = []
    for sentence in sentences:
        current: list[Token] = []
        for token in sentence + [None]:  # type: ignore[list-item]
            if token is not None and token.lower not in stopwords:
                current.append(token)
                continue
            if current:
                trimmed = _trim_numbers(_trim_numbers(current)[:max_len])
                if trimmed:
                    runs.append(trimmed)
                current = []
    return runs


def _phrase_of(run: list[Token]) -> tuple[str, str]:
    return (
        " ".join(t.text for t in run),
        " ".join(t.lower for t in run),
    )


def _ranked(
    scored: dict[str, tuple[str, float, int, int]], descending: bool, top_k: int
) -> list[CandidatePhrase]:
    phrases = [
        CandidatePhrase(
            text=text,
            normalized=normalized,
            score=score,
            token_count=count,
            first_offset=offset,
        )
        for normalized, (text, score, count, offset) in scored.items()
    ]
    sign = -1.0 if descending else 1.0
    phrases.sort(key=lambda p: (sign * p.score, p.first_offset, p.normalized))
    return phrases[:top_k]


def rake_extract(text: str, config: ExtractionConfig | None = None) -> list[CandidatePhrase]:
    """RAKE keyword extraction; higher scores rank first."""
    config = config or ExtractionConfig(algorithm="rake")
    config.validate()
    stopwords = load_stopwords(config.stopword_list_id)
    runs = _candidate_runs(tokenize(text), stopwords, config.max_phrase_len)
    if not runs:
        return []

    freq: dict[str, int] = {}
    degree: dict[str, int] = {}
    for run in runs:
        for token in run:
            freq[token.lower] = freq.get(token.lower, 0) + 1
            # own occurrence plus co-occurrence with every other position
            degree[token.lower] = degree.get(token.lower, 0) + len(run)

    scored: dict[str, tuple[str, float, int, int]] = {}
    for run in runs:
        original, normalized = _phrase_of(run)
        if normalized in scored:
            continue
        score = sum(degree[t.lower] / freq[t.lower] for t in run)
        scored[normalized] = (original, score, len(run), run[0].offset)
    return _ranked(scored, descending=True, top_k=config.top_k)


# --- YAKE ---------------------------------------------------------------------


@dataclass
class _TermStats:
    tf: int = 0
    tf_upper: int = 0
    tf_acronym: int = 0
    sentence_ids: set[int] = field(default_factory=set)
    left: list[str] = field(default_factory=list)
    right: list[str] = field(default_factory=list)


def _term_scores(
    sentences: list[list[Token]], stopwords: frozenset[str]
) -> dict[str, float]:
    """Per-term YAKE feature scores; lower means a better keyword term."""
    stats: dict[str, _TermStats] = {}
    for s_idx, sentence in enumerate(sentences):
        for i, token in enumerate(sentence):
            t = stats.setdefault(token.lower, _TermStats())
            t.tf += 1
            t.sentence_ids.add(s_idx)
            if len(token.text) > 1 and token.text.isupper():
                t.tf_acronym += 1
            elif token.text[0].isupper():
                t.tf_upper += 1
            if i > 0:
                t.left.append(sentence[i - 1].lower)
            if i + 1 < len(sentence):
                t.right.append(sentence[i + 1].lower)

    max_tf = max(t.tf for t in stats.values())
    valid_tfs = [t.tf for term, t in stats.items() if term not in stopwords]
    if not valid_tfs:
        return {}
    mean_tf = sum(valid_tfs) / len(valid_tfs)
    var = sum((v - mean_tf) ** 2 for v in valid_tfs) / len(valid_tfs)
    std_tf = math.sqrt(var)
    n_sentences = len(sentences)

    scores: dict[str, float] = {}
    for term, t in stats.items():
        if term in stopwords:
            continue
        w_case = max(t.tf_upper, t.tf_acronym) / (1.0 + math.log(t.tf))
        w_pos = math.log(3.0 + median(sorted(t.sentence_ids)))
        w_freq = t.tf / (mean_tf + std_tf)
        pwl = len(set(t.left)) / len(t.left) if t.left else 0.0
        pwr = len(set(t.right)) / len(t.right) if t.right else 0.0
        w_rel = 1.0 + (pwl + pwr) * (t.tf / max_tf)
        w_spread = len(t.sentence_ids) / n_sentences
        scores[term] = (w_pos * w_rel) / (w_case + w_freq / w_rel + w_spread / w_rel)
    return scores


def yake_extract(text: str, config: ExtractionConfig | None = None) -> list[CandidatePhrase]:
    """YAKE keyword extraction; lower scores rank first."""
    config = config or ExtractionConfig(algorithm="yake")
    config.validate()
    stopwords = load_stopwords(config.stopword_list_id)
    sentences = tokenize(text)
    if not sentences:
        return []
    term_score = _term_scores(sentences, stopwords)
    if not term_score:
        return []

    # candidate n-grams: contiguous stopword-free windows, numbers not at edges
    occurrences: dict[str, tuple[str, int, int, int]] = {}  # norm -> (text, count, len, offset)
    for sentence in sentences:
        n = len(sentence)
        for size in range(1, config.max_phrase_len + 1):
            for start in range(0, n - size + 1):
                window = sentence[start : start + size]
                if any(t.lower in stopwords for t in window):
                    continue
                if window[0].is_number or window[-1].is_number:
                    continue
                original, normalized = _phrase_of(window)
                if normalized in occurrences:
                    text0, count, size0, offset0 = occurrences[normalized]
                    occurrences[normalized] = (text0, count + 1, size0, offset0)
                else:
                    occurrences[normalized] = (original, 1, size, window[0].offset)

    scored: dict[str, tuple[str, float, int, int]] = {}
    for normalized, (original, count, size, offset) in occurrences.items():
        terms = normalized.split(" ")
        if any(t not in term_score for t in terms):
            continue  # number-only terms have no score
        product = 1.0
        total = 0.0
        for t in terms:
            product *= term_score[t]
            total += term_score[t]
        score = product / (count * (1.0 + total))
        scored[normalized] = (original, score, size, offset)
    return _ranked(scored, descending=False, top_k=config.top_k)


def extract(text: str, config: ExtractionConfig) -> list[CandidatePhrase]:
    """Dispatch on the configured algorithm."""
    config.validate()
    if config.algorithm == "yake":
        return yake_extract(text, config)
    return rake_extract(text, config)
