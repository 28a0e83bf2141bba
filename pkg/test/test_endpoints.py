import pytest
from fastapi.testclient import TestClient

from catalog.graph6 import emit_graph6
from families.constructors import petersen_graph
from run import app
from utils.config import Limits, ToolkitConfig, configure


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_analyze(client):
    response = client.post("/analyze", json={"graph6": "Dhc"})
    assert response.status_code == 200
    body = response.json()
    assert body["chi"] == 3
    assert body["classification"]["finck_type"] == "b"


def test_classify(client):
    body = client.post("/classify", json={"graph6": "Cs"}).json()
    assert body["theorem_ab_exception"]["family"] == "B_n"
    assert sorted(body["multipartite_parts"]) == [1, 3]


def test_spectrum(client):
    body = client.post("/spectrum", json={"graph6": "Bw", "charpoly": True}).json()
    assert body["eigenvalues"] == pytest.approx([2.0, -1.0, -1.0])
    assert body["char_poly"] == [-2, -3, 0, 1]
    assert client.post("/spectrum", json={"graph6": "Bw"}).json()["char_poly"] is None


def test_family(client):
    body = client.get("/family", params={"spec": "family:B:4"}).json()
    assert body == {"spec": "family:B:4", "graph6": body["graph6"], "n": 6, "m": 8}


def test_bad_input_is_400(client):
    assert client.post("/analyze", json={"graph6": "B"}).status_code == 400
    assert client.get("/family", params={"spec": "family:Q:1"}).status_code == 400


def test_capacity_is_422(client):
    configure(ToolkitConfig(limits=Limits(coloring_node_budget=1)))
    response = client.post("/analyze", json={"graph6": emit_graph6(petersen_graph())})
    assert response.status_code == 422
