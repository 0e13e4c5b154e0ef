"""HTTP endpoints via the in-process test client."""
from __future__ import annotations

from fastapi.testclient import TestClient

from wildsat.service import app

from helpers import CNF_A, mu

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_solve():
    resp = client.post("/solve", json={"dimacs": CNF_A})
    assert resp.status_code == 200
    body = resp.json()
    assert body["models"] == "705"
    assert len(body["rows"]) == 10
    assert sum(int(r["count"]) for r in body["rows"]) == 705
    assert body["stats"]["impositions"] > 0


def test_solve_no_prune():
    on = client.post("/solve", json={"dimacs": CNF_A, "prune": True}).json()
    off = client.post("/solve", json={"dimacs": CNF_A, "prune": False}).json()
    assert on["models"] == off["models"]
    assert off["stats"]["prune_calls"] == 0


def test_count():
    resp = client.post("/count", json={"dimacs": mu(5)})
    assert resp.status_code == 200
    assert resp.json() == {"rows": 1, "models": "30"}


def test_enumerate():
    resp = client.post("/enumerate", json={"dimacs": mu(2)})
    assert resp.status_code == 200
    body = resp.json()
    assert sorted(body["models"]) == ["01", "10"]
    assert body["count"] == "2"


def test_enumerate_cap():
    resp = client.post("/enumerate", json={"dimacs": CNF_A, "max_models": 100})
    assert resp.status_code == 422
    assert "max_models" in resp.json()["detail"]


def test_verify():
    resp = client.post("/verify", json={"dimacs": CNF_A})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    assert body["oracle_count"] == "705"
    assert body["solver_count"] == "705"
    assert body["overlap_rows"] is None


def test_verify_oracle_limit():
    resp = client.post("/verify", json={"dimacs": CNF_A, "oracle_limit": 4})
    assert resp.status_code == 422
    assert "limit" in resp.json()["detail"]


def test_expand():
    resp = client.post("/expand", json={"dimacs": mu(2)})
    assert resp.status_code == 200
    body = resp.json()
    assert [r["symbols"] for r in body["rows"]] == [["1", "0"], ["0", "1"]]


def test_stats():
    resp = client.post("/stats", json={"dimacs": CNF_A})
    assert resp.status_code == 200
    body = resp.json()
    assert body["rows"] == 10
    assert body["models"] == "705"
    assert body["ratio"] == 70.5


def test_parse_error_is_422():
    resp = client.post("/solve", json={"dimacs": "p cnf 2 1\n9 0\n"})
    assert resp.status_code == 422
    assert resp.json()["detail"].startswith("parse error:")


def test_row_cap_is_422():
    resp = client.post("/solve", json={"dimacs": CNF_A, "max_rows": 2})
    assert resp.status_code == 422
    assert "row limit" in resp.json()["detail"]


def test_missing_body_field_is_422():
    resp = client.post("/solve", json={})
    assert resp.status_code == 422
