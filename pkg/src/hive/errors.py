"""Exception types shared across the package."""

from __future__ import annotations


class HiveError(Exception):
    """Base class for all errors raised by this package."""


class UnknownFormatError(HiveError):
    """An RDF syntax or encoding name outside the supported set."""


class RdfParseError(HiveError):
    """Malformed RDF input. Carries the position where parsing failed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class EmptyOntologyError(HiveError):
    """Conversion produced no concepts."""


class UnknownOntologyError(HiveError):
    def __init__(self, ontology_id: str):
        self.ontology_id = ontology_id
        super().__init__(f"unknown ontology: {ontology_id!r}")


class ConceptNotFoundError(HiveError):
    def __init__(self, ontology_id: str, uri: str):
        self.ontology_id = ontology_id
        self.uri = uri
        super().__init__(f"no concept {uri!r} in ontology {ontology_id!r}")


class StoreError(HiveError):
    """Persistence failure (corruption, rejected commit, unusable path)."""


class InvariantViolation(StoreError):
    """A commit was rejected because the concept set breaks a model invariant."""


class DocumentError(HiveError):
    """Document acquisition failure (I/O, decode, fetch)."""


class FetchError(DocumentError):
    """URL retrieval failed: network error, bad status, or wrong content type."""


class UnsupportedFormatError(DocumentError):
    """A binary document extension with no registered converter."""


class ConverterError(DocumentError):
    """A registered converter hook raised while extracting text."""


class EncodingError(HiveError):
    """Malformed input handed to a concept decoder."""


class EvalInputError(HiveError):
    """Malformed or inconsistent evaluation inputs (results/judgments)."""
