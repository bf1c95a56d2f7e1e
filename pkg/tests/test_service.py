import json

from fastapi.testclient import TestClient

from hilbschur.kclasses import gen_one, kclass_to_json
from hilbschur.partitions import canonical_section
from hilbschur.service import create_app

client = TestClient(create_app())


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_dims_endpoint():
    resp = client.post("/dims", json={"n": 3, "target": "3", "source": "3"})
    assert resp.status_code == 200
    assert resp.json()["dimension"] == 3
    resp = client.post("/dims", json={"n": 3, "target": "1 2|3",
                                      "source": "1|2|3"})
    assert resp.status_code == 200
    assert resp.json()["dimension"] == 3


def test_dims_rejects_bad_partition():
    resp = client.post("/dims", json={"n": 3, "target": "2,2", "source": "3"})
    assert resp.status_code == 422


def test_basis_endpoint():
    resp = client.post("/basis", json={"n": 3, "target": "2,1",
                                       "source": "2,1"})
    doc = resp.json()
    assert doc["count"] == 3
    assert doc["indices"][0]["rep"] == "1,2,3"


def test_multiply_endpoint():
    e111 = canonical_section((1, 1, 1))
    e21 = canonical_section((2, 1))
    q = kclass_to_json(gen_one(e111, e21))
    p = kclass_to_json(gen_one(e21, e111))
    resp = client.post("/multiply", json={"left": q, "right": p})
    assert resp.status_code == 200
    product = resp.json()["product"]
    assert [s["rep"] for s in product["stalks"]] == ["1,2,3", "2,1,3"]


def test_multiply_rejects_grading_mismatch():
    e21 = canonical_section((2, 1))
    e = kclass_to_json(gen_one(e21, e21))
    e111 = canonical_section((1, 1, 1))
    f = kclass_to_json(gen_one(e111, e111))
    resp = client.post("/multiply", json={"left": e, "right": f})
    assert resp.status_code == 422


def test_check_endpoint():
    resp = client.post("/check", json={"suite": "relations", "n": 2})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["ok"] is True
    assert "all relations hold" in doc["output"]
    resp = client.post("/check", json={"suite": "nope", "n": 2})
    assert resp.status_code == 422


def test_quiver_endpoint():
    resp = client.get("/quiver")
    doc = resp.json()
    assert doc["vertices"] == ["1,1,1", "2,1", "3"]
    assert all(doc["verified"].values())


def test_phi_endpoint():
    resp = client.post("/phi", json={"shape": "2,1"})
    doc = resp.json()
    assert doc["phi"]["rows"] == ["3", "2,1", "1,1,1"]
    assert doc["dual_phi"]["matrix"] == doc["phi"]["matrix"]


def test_export_endpoint_deterministic():
    r1 = client.post("/export", json={"n": 2, "reduced": True})
    r2 = client.post("/export", json={"n": 2, "reduced": True})
    assert r1.json()["document"] == r2.json()["document"]
    doc = json.loads(r1.json()["document"])
    assert doc["idempotents"] == ["1 2", "1|2"]
    assert doc["reduced"] is True
