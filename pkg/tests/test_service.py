from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from hive.encoders import encode_concept
from hive.ingest import ingest_file
from hive.service import (
    create_app,
    ontologies_payload,
    roots_payload,
    search_payload,
)
from hive.store import Store


@pytest.fixture
def loaded_store(tmp_path, rdf_dir):
    store = Store.open(tmp_path / "store")
    ingest_file(store, str(rdf_dir / "twelve.ttl"), ontology_id="twelve")
    ingest_file(store, str(rdf_dir / "search.ttl"), ontology_id="silica")
    yield store
    store.close()


@pytest.fixture
def client(loaded_store):
    return TestClient(create_app(loaded_store))


def _error_code(response) -> str:
    body = response.json()
    assert set(body) == {"error"}
    assert set(body["error"]) == {"code", "message"}
    return body["error"]["code"]


def test_healthz(client):
    response = client.get("/healthz")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["ontologies"] == 2


def test_empty_store_lists_no_ontologies(tmp_path):
    store = Store.open(tmp_path / "empty")
    client = TestClient(create_app(store))
    assert client.get("/ontologies").json()["ontologies"] == []
    store.close()


def test_list_ontologies(client):
    body = client.get("/ontologies").json()
    ids = [record["id"] for record in body["ontologies"]]
    assert ids == ["silica", "twelve"]
    twelve = body["ontologies"][1]
    assert twelve["concept_count"] == 3
    assert twelve["source_format"] == "skos-native"


def test_roots(client):
    body = client.get("/ontologies/twelve/roots").json()
    assert body["ontology_id"] == "twelve"
    assert [c["pref_label"] for c in body["roots"]] == ["Material"]


def test_unknown_ontology_404_names_id(client):
    response = client.get("/ontologies/nope/roots")
    assert response.status_code == 404
    assert _error_code(response) == "unknown-ontology"
    assert "nope" in response.json()["error"]["message"]


def test_concept_lookup(client):
    response = client.get(
        "/ontologies/twelve/concept",
        params={"uri": "http://example.org/mat/zeolite"},
    )
    body = response.json()
    assert body["pref_label"] == "Zeolite"
    assert body["alt_labels"] == ["Molecular sieve"]
    missing = client.get(
        "/ontologies/twelve/concept", params={"uri": "http://example.org/mat/nope"}
    )
    assert missing.status_code == 404
    assert _error_code(missing) == "concept-not-found"


def test_children_sorted_and_paginated(client):
    params = {"uri": "http://example.org/mat/material"}
    body = client.get("/ontologies/twelve/children", params=params).json()
    assert [c["pref_label"] for c in body["children"]] == ["Aerogel", "Zeolite"]
    assert body["total"] == 2 and body["offset"] == 0 and body["limit"] == 100
    page = client.get(
        "/ontologies/twelve/children", params={**params, "offset": 1, "limit": 1}
    ).json()
    assert [c["pref_label"] for c in page["children"]] == ["Zeolite"]
    assert page["total"] == 2


def test_search_grouped_and_filtered(client):
    # "silica" also sits inside twelve's "aluminosilicate" note
    body = client.get("/search", params={"q": "silica"}).json()
    assert [g["ontology_id"] for g in body["groups"]] == ["silica", "twelve"]
    labels = [c["pref_label"] for c in body["groups"][0]["concepts"]]
    assert labels == ["Silica", "Silica gel", "Quartz"]
    assert [c["pref_label"] for c in body["groups"][1]["concepts"]] == ["Zeolite"]
    filtered = client.get("/search", params={"q": "quartz", "onts": "twelve"}).json()
    assert filtered["groups"] == []


def test_search_pagination_is_per_group(client):
    body = client.get("/search", params={"q": "silica", "limit": 2}).json()
    group = body["groups"][0]
    assert group["total"] == 3
    assert len(group["concepts"]) == 2


def test_search_requires_query(client):
    response = client.get("/search")
    assert response.status_code == 400
    assert _error_code(response) == "validation"
    blank = client.get("/search", params={"q": "!!!"})
    assert blank.status_code == 400
    assert _error_code(blank) == "bad-request"


def test_index_document(client):
    response = client.post(
        "/index",
        json={"text": "Zeolite. Aerogel insulation.", "ontologies": ["twelve"]},
    )
    body = response.json()
    assert body["candidates_total"] == 2
    hits = body["hits_by_ontology"]["twelve"]
    assert [h["pref_label"] for h in hits] == ["Zeolite"]
    assert hits[0]["display_weight"] == 5
    assert body["arranged"]["mode"] == "score"


def test_index_unknown_ontology_404(client):
    response = client.post(
        "/index", json={"text": "zeolite", "ontologies": ["missing"]}
    )
    assert response.status_code == 404
    assert "missing" in response.json()["error"]["message"]


def test_index_body_validation(client):
    both = client.post(
        "/index",
        json={"text": "a", "url": "http://x", "ontologies": ["twelve"]},
    )
    assert both.status_code == 400
    neither = client.post("/index", json={"ontologies": ["twelve"]})
    assert neither.status_code == 400
    no_onts = client.post("/index", json={"text": "a", "ontologies": []})
    assert no_onts.status_code == 400
    bad_sort = client.post(
        "/index",
        json={"text": "a", "ontologies": ["twelve"], "sort": "chaos"},
    )
    assert bad_sort.status_code == 400
    bad_algo = client.post(
        "/index",
        json={"text": "a", "ontologies": ["twelve"], "algorithm": "textrank"},
    )
    assert bad_algo.status_code == 400


def test_index_merged_sort(client):
    response = client.post(
        "/index",
        json={
            "text": "Zeolite. Aerogel insulation.",
            "ontologies": ["twelve", "silica"],
            "sort": "merged",
        },
    )
    arranged = response.json()["arranged"]
    assert arranged["mode"] == "merged"
    assert "hits" in arranged


def test_encoding_endpoint_bytes(client, loaded_store):
    concept = loaded_store.snapshot().get("twelve").graph.get(
        "http://example.org/mat/zeolite"
    )
    for fmt, media in (
        ("json-ld", "application/ld+json"),
        ("skos-rdf-xml", "application/rdf+xml"),
        ("dc-xml", "application/xml"),
        ("plain-xml", "application/xml"),
    ):
        response = client.get(
            "/concept/encoding",
            params={"uri": concept.uri, "ont": "twelve", "format": fmt},
        )
        assert response.status_code == 200
        assert response.headers["content-type"].startswith(media)
        assert response.content == encode_concept(concept, fmt).encode("utf-8")
    bad = client.get(
        "/concept/encoding",
        params={"uri": concept.uri, "ont": "twelve", "format": "yaml"},
    )
    assert bad.status_code == 400
    assert _error_code(bad) == "unknown-format"


def test_upload_and_delete_ontology(client, rdf_dir):
    with open(rdf_dir / "six_classes.owl", "rb") as fh:
        response = client.post(
            "/ontologies",
            files={"file": ("six_classes.owl", fh, "application/rdf+xml")},
            data={"id": "matonto", "display_name": "Materials Ontology"},
        )
    assert response.status_code == 201
    body = response.json()
    assert body["ontology"]["id"] == "matonto"
    assert body["ontology"]["concept_count"] == 6
    assert body["report"]["concepts_emitted"] == 6
    ids = [r["id"] for r in client.get("/ontologies").json()["ontologies"]]
    assert "matonto" in ids
    deleted = client.delete("/ontologies/matonto")
    assert deleted.status_code == 200
    assert deleted.json()["deleted"] == "matonto"
    ids = [r["id"] for r in client.get("/ontologies").json()["ontologies"]]
    assert "matonto" not in ids
    again = client.delete("/ontologies/matonto")
    assert again.status_code == 404


def test_upload_malformed_file_rejected(client):
    response = client.post(
        "/ontologies",
        files={"file": ("junk.ttl", b"@prefix broken", "text/turtle")},
        data={"id": "junk"},
    )
    assert response.status_code == 400
    assert _error_code(response) == "parse-error"
    ids = [r["id"] for r in client.get("/ontologies").json()["ontologies"]]
    assert "junk" not in ids


def test_endpoint_json_equals_payload_builders(client, loaded_store):
    snapshot = loaded_store.snapshot()
    assert client.get("/ontologies").json() == ontologies_payload(snapshot)
    assert client.get("/ontologies/twelve/roots").json() == roots_payload(
        snapshot, "twelve"
    )
    assert client.get("/search", params={"q": "silica"}).json() == search_payload(
        snapshot, "silica", None
    )


def test_ui_not_mounted_without_build(loaded_store, monkeypatch, tmp_path):
    # the repo may contain built UI assets; point the override at an empty
    # spot so the no-assets path is what gets exercised
    monkeypatch.setenv("HIVE_UI_DIR", str(tmp_path / "nowhere"))
    bare = TestClient(create_app(loaded_store))
    assert bare.get("/ui/").status_code == 404
    assert bare.get("/healthz").status_code == 200


def test_writes_visible_to_later_requests(client, rdf_dir):
    before = client.get("/healthz").json()["version"]
    with open(rdf_dir / "trees.ttl", "rb") as fh:
        client.post(
            "/ontologies",
            files={"file": ("trees.ttl", fh, "text/turtle")},
            data={"id": "trees"},
        )
    after = client.get("/healthz").json()
    assert after["version"] == before + 1
    roots = client.get("/ontologies/trees/roots").json()["roots"]
    assert [c["pref_label"] for c in roots] == ["Alpha", "Delta"]
