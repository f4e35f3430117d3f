"""Durable ontology storage over a single embedded SQLite file.

Layout: a store is a directory holding ``hive.sqlite3``. All reads are served
from an immutable in-memory snapshot loaded at open time and republished
copy-on-write after every commit, so readers never block the writer and a
snapshot never changes under a reader. Writes (commit/delete of a whole
ontology) serialize on one lock and are atomic on disk via SQLite
transactions.

``kill_point_hook`` exists for crash-safety tests: when set, it is called at
named points inside the write path and may raise to simulate a crash between
the database commit and the in-memory publish (or before the commit).
"""

from __future__ import annotations

import json
import logging
import os
import sqlite3
import threading
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Mapping

from .errors import InvariantViolation, StoreError, UnknownOntologyError
from .model import Concept, ConceptGraph, LoadedOntology, OntologyRecord

log = logging.getLogger(__name__)

DB_FILENAME = "hive.sqlite3"
SCHEMA_VERSION = 1
STORE_ENV_VAR = "HIVE_STORE"

_SCHEMA = """
CREATE TABLE IF NOT EXISTS meta (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS ontologies (
    id TEXT PRIMARY KEY,
    display_name TEXT NOT NULL,
    source_format TEXT NOT NULL,
    concept_count INTEGER NOT NULL,
    root_uris TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS concepts (
    ontology_id TEXT NOT NULL,
    uri TEXT NOT NULL,
    payload TEXT NOT NULL,
    PRIMARY KEY (ontology_id, uri)
);
CREATE TABLE IF NOT EXISTS pref_label_index (
    ontology_id TEXT NOT NULL,
    normalized_label TEXT NOT NULL,
    uri TEXT NOT NULL,
    PRIMARY KEY (ontology_id, normalized_label, uri)
);
"""


def default_store_path() -> str:
    """Store directory from the HIVE_STORE env var, else ./hive-store."""
    return os.environ.get(STORE_ENV_VAR) or "hive-store"


@dataclass(frozen=True)
class StoreSnapshot:
    """Immutable view of every ontology at one committed version."""

    version: int
    ontologies: Mapping[str, LoadedOntology] = field(default_factory=dict)

    def ids(self) -> list[str]:
        return sorted(self.ontologies)

    def records(self) -> list[OntologyRecord]:
        return [self.ontologies[oid].record for oid in self.ids()]

    def get(self, ontology_id: str) -> LoadedOntology:
        try:
            return self.ontologies[ontology_id]
        except KeyError:
            raise UnknownOntologyError(ontology_id) from None


class Store:
    """Handle on one store directory; thread-safe for many readers, one writer."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.db_path = self.directory / DB_FILENAME
        self._write_lock = threading.Lock()
        self.kill_point_hook: Callable[[str], None] | None = None
        self._conn = self._open_db()
        self._snapshot = self._load_snapshot()

    @classmethod
    def open(cls, directory: str | Path) -> "Store":
        return cls(directory)

    def _open_db(self) -> sqlite3.Connection:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StoreError(f"cannot create store directory {self.directory}: {exc}") from exc
        try:
            conn = sqlite3.connect(self.db_path, check_same_thread=False, isolation_level=None)
            conn.execute("PRAGMA journal_mode=WAL")
            conn.execute("PRAGMA foreign_keys=ON")
            conn.executescript(_SCHEMA)
            row = conn.execute(
                "SELECT value FROM meta WHERE key='schema_version'"
            ).fetchone()
            if row is None:
                conn.execute(
                    "INSERT INTO meta (key, value) VALUES ('schema_version', ?)",
                    (str(SCHEMA_VERSION),),
                )
                conn.execute(
                    "INSERT OR IGNORE INTO meta (key, value) VALUES ('version', '0')"
                )
            elif int(row[0]) != SCHEMA_VERSION:
                conn.close()
                raise StoreError(
                    f"store at {self.db_path} has schema version {row[0]}, "
                    f"this build expects {SCHEMA_VERSION}"
                )
            # force a full integrity pass so a damaged file is refused up front
            check = conn.execute("PRAGMA integrity_check").fetchone()
            if check is None or check[0] != "ok":
                conn.close()
                raise StoreError(f"store at {self.db_path} failed integrity check: {check}")
            return conn
        except sqlite3.DatabaseError as exc:
            raise StoreError(f"cannot open store at {self.db_path}: {exc}") from exc

    def _load_snapshot(self) -> StoreSnapshot:
        try:
            version_row = self._conn.execute(
                "SELECT value FROM meta WHERE key='version'"
            ).fetchone()
            version = int(version_row[0]) if version_row else 0
            loaded: dict[str, LoadedOntology] = {}
            for oid, display_name, source_format, concept_count, root_uris in self._conn.execute(
                "SELECT id, display_name, source_format, concept_count, root_uris"
                " FROM ontologies ORDER BY id"
            ):
                record = OntologyRecord(
                    id=oid,
                    display_name=display_name,
                    source_format=source_format,
                    concept_count=concept_count,
                    root_uris=tuple(json.loads(root_uris)),
                )
                concepts = [
                    Concept.from_dict(json.loads(payload))
                    for (payload,) in self._conn.execute(
                        "SELECT payload FROM concepts WHERE ontology_id=? ORDER BY uri",
                        (oid,),
                    )
                ]
                graph = ConceptGraph(oid, concepts)
                if len(graph) != record.concept_count:
                    raise StoreError(
                        f"store row count mismatch for ontology {oid!r}: "
                        f"{len(graph)} concepts vs recorded {record.concept_count}"
                    )
                loaded[oid] = LoadedOntology(record=record, graph=graph)
            return StoreSnapshot(version=version, ontologies=MappingProxyType(loaded))
        except (sqlite3.DatabaseError, ValueError, KeyError) as exc:
            raise StoreError(f"cannot load store at {self.db_path}: {exc}") from exc

    # -- public API

    def snapshot(self) -> StoreSnapshot:
        """Current immutable snapshot; safe to hold across later commits."""
        return self._snapshot

    def commit_ontology(self, loaded: LoadedOntology) -> int:
        """Atomically insert or replace one ontology; returns the new version."""
        self._validate(loaded)
        with self._write_lock:
            record = loaded.record
            new_version = self._snapshot.version + 1
            cur = self._conn.cursor()
            try:
                cur.execute("BEGIN IMMEDIATE")
                cur.execute("DELETE FROM ontologies WHERE id=?", (record.id,))
                cur.execute("DELETE FROM concepts WHERE ontology_id=?", (record.id,))
                cur.execute(
                    "DELETE FROM pref_label_index WHERE ontology_id=?", (record.id,)
                )
                cur.execute(
                    "INSERT INTO ontologies"
                    " (id, display_name, source_format, concept_count, root_uris)"
                    " VALUES (?, ?, ?, ?, ?)",
                    (
                        record.id,
                        record.display_name,
                        record.source_format,
                        record.concept_count,
                        json.dumps(list(record.root_uris)),
                    ),
                )
                cur.executemany(
                    "INSERT INTO concepts (ontology_id, uri, payload) VALUES (?, ?, ?)",
                    [
                        (record.id, c.uri, json.dumps(c.to_dict(), ensure_ascii=False))
                        for c in loaded.graph.concepts()
                    ],
                )
                cur.executemany(
                    "INSERT INTO pref_label_index (ontology_id, normalized_label, uri)"
                    " VALUES (?, ?, ?)",
                    [
                        (record.id, label, uri)
                        for label, uris in loaded.graph.label_index().items()
                        for uri in uris
                    ],
                )
                cur.execute(
                    "UPDATE meta SET value=? WHERE key='version'", (str(new_version),)
                )
                self._kill_point("before_commit")
                cur.execute("COMMIT")
            except BaseException:
                try:
                    cur.execute("ROLLBACK")
                except sqlite3.DatabaseError:
                    pass
                raise
            self._kill_point("after_commit_before_publish")
            ontologies = dict(self._snapshot.ontologies)
            ontologies[record.id] = loaded
            self._snapshot = StoreSnapshot(
                version=new_version, ontologies=MappingProxyType(ontologies)
            )
            log.info("committed ontology %r at version %d", record.id, new_version)
            return new_version

    def delete_ontology(self, ontology_id: str) -> int:
        """Remove one ontology; returns the new version. Unknown id is an error."""
        with self._write_lock:
            if ontology_id not in self._snapshot.ontologies:
                raise UnknownOntologyError(ontology_id)
            new_version = self._snapshot.version + 1
            cur = self._conn.cursor()
            try:
                cur.execute("BEGIN IMMEDIATE")
                cur.execute("DELETE FROM ontologies WHERE id=?", (ontology_id,))
                cur.execute("DELETE FROM concepts WHERE ontology_id=?", (ontology_id,))
                cur.execute(
                    "DELETE FROM pref_label_index WHERE ontology_id=?", (ontology_id,)
                )
                cur.execute(
                    "UPDATE meta SET value=? WHERE key='version'", (str(new_version),)
                )
                self._kill_point("before_commit")
                cur.execute("COMMIT")
            except BaseException:
                try:
                    cur.execute("ROLLBACK")
                except sqlite3.DatabaseError:
                    pass
                raise
            self._kill_point("after_commit_before_publish")
            ontologies = dict(self._snapshot.ontologies)
            del ontologies[ontology_id]
            self._snapshot = StoreSnapshot(
                version=new_version, ontologies=MappingProxyType(ontologies)
            )
            log.info("deleted ontology %r at version %d", ontology_id, new_version)
            return new_version

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    # -- internals

    def _kill_point(self, name: str) -> None:
        if self.kill_point_hook is not None:
            self.kill_point_hook(name)

    @staticmethod
    def _validate(loaded: LoadedOntology) -> None:
        record = loaded.record
        if not record.id:
            raise InvariantViolation("ontology id must be non-empty")
        graph = loaded.graph
        if record.concept_count != len(graph):
            raise InvariantViolation(
                f"record concept_count {record.concept_count} != {len(graph)} concepts"
            )
        root_uris = tuple(c.uri for c in graph.roots())
        if tuple(record.root_uris) != root_uris:
            raise InvariantViolation("record root_uris do not match graph roots")
        for concept in graph.concepts():
            if not concept.pref_label:
                raise InvariantViolation(f"concept {concept.uri} has empty pref_label")
            if concept.ontology_id != record.id:
                raise InvariantViolation(
                    f"concept {concept.uri} belongs to {concept.ontology_id!r}, "
                    f"not {record.id!r}"
                )
        graph.check_invariants()
