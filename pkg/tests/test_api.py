import httpx
import pytest

from darboux_ladder import __version__
from darboux_ladder.main import app

CHARLIER = {"family": "charlier", "params": {"mu": "1"}}
HAHN = {"family": "hahn", "params": {"alpha": "0", "beta": "0", "N": "3"}}


@pytest.fixture
async def client():
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://test") as c:
        yield c


async def test_health(client):
    for path in ("/", "/health"):
        response = await client.get(path)
        assert response.status_code == 200
        assert response.json()["status"] == "ok"
        assert __version__ in response.json()["message"]


async def test_families(client):
    response = await client.get("/families")
    assert response.status_code == 200
    names = [f["family"] for f in response.json()]
    assert names == ["charlier", "meixner", "kravchuk", "hahn"]


async def test_verify_and_stats(client):
    before = (await client.get("/stats")).json()["total_runs"]
    response = await client.post("/verify", json={**HAHN, "n_max": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "pass"
    assert "elapsed_ms" not in body
    after = (await client.get("/stats")).json()
    assert after["total_runs"] == before + 1
    assert after["uptime"] >= 0


async def test_verify_fault_is_data(client):
    response = await client.post("/verify", json={**CHARLIER, "n_max": 2, "inject_fault": "g"})
    assert response.status_code == 200
    assert response.json()["status"] == "fail"


async def test_factorize(client):
    response = await client.post("/factorize", json={**HAHN, "n": 1})
    assert response.status_code == 200
    (record,) = response.json()
    assert record["mu"] == "5"
    assert record["f"] == [1, -3, 1]


async def test_ladder(client):
    response = await client.post("/ladder", json={**CHARLIER, "n": 2, "direction": "up"})
    assert response.status_code == 200
    assert response.json()["target"] == [-1, 8, -6, 1]


async def test_generate(client):
    response = await client.post("/generate", json={**HAHN, "n_max": 2, "points": "0..2"})
    assert response.status_code == 200
    body = response.json()
    assert body["gauge"] == ["1", "2", "4"]
    assert body["rows"][2]["values"] == ["1/3", "-2/3", "1/3"]


@pytest.mark.parametrize(
    "path,payload",
    [
        ("/verify", {"family": "charlier", "params": {"mu": "0"}}),
        ("/verify", {"family": "charlier", "params": {"mu": "1.5"}}),
        ("/ladder", {**CHARLIER, "n": 0, "direction": "down"}),
        ("/ladder", {**HAHN, "n": 3, "direction": "down"}),
        ("/factorize", {"family": "custom", "sigma": "0,1,0", "tau": "0,1", "n": 1}),
    ],
)
async def test_errors_are_422(client, path, payload):
    response = await client.post(path, json=payload)
    assert response.status_code == 422
    assert "detail" in response.json()


async def test_domain_error_body(client):
    payload = {"family": "custom", "sigma": "1,0,0", "tau": "-1,0", "n_max": 3}
    response = await client.post("/generate", json=payload)
    assert response.status_code == 422
    assert response.json() == {"detail": "lambda(2) coincides with lambda(0); no monic eigenpolynomial of degree 2"}

    schema = (await client.get("/openapi.json")).json()
    documented = schema["paths"]["/ladder"]["post"]["responses"]["422"]["content"]["application/json"]["schema"]
    assert documented["$ref"].endswith("/ErrorResponse")
