"""Shared text normalization.

Matching and search compare phrases through one canonical form: lowercase,
punctuation replaced by spaces, runs of whitespace collapsed. Keeping this in
one place guarantees the label index, extracted candidates, and search queries
can never disagree on what "the same term" means.
"""

from __future__ import annotations

import re

# Any run of characters that is not a letter or digit acts as a separator.
# Underscore is deliberately a separator, not a word character.
_SEPARATORS = re.compile(r"[\W_]+", re.UNICODE)


def normalize(text: str) -> str:
    """Canonical form used for label/phrase equality and substring search."""
    return _SEPARATORS.sub(" ", text.lower()).strip()
