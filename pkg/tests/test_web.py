from fastapi.testclient import TestClient

from xhermite.web.fastapi_app import app

client = TestClient(app)


def test_health():
    res = client.get("/")
    assert res.status_code == 200
    assert res.json()["status"] == "ok"


def test_family():
    res = client.get("/family", params={"m1": 2, "m2": 3, "max_degree": 8})
    assert res.status_code == 200
    data = res.json()
    assert data["degree_set"] == [2, 3, 6, 7, 8]
    assert data["display"]["V2"] == "x^2 + 32x^2/(4x^4 + 3) - 384x^2/(4x^4 + 3)^2 + 2"


def test_invalid_parameters_are_422():
    res = client.get("/family", params={"m1": 2, "m2": 4})
    assert res.status_code == 422
    assert "m2 odd" in res.json()["detail"]
    assert client.get("/potential").status_code == 422
    assert client.get("/ladder", params={"m1": 2, "m2": 3, "operator": "up"}).status_code == 422


def test_potential_first_order():
    res = client.get("/potential", params={"m": 2, "points": 5, "half_width": 2.0})
    assert res.status_code == 200
    assert len(res.json()["samples"]) == 5


def test_spectrum():
    res = client.get("/spectrum", params={"m1": 2, "m2": 3, "levels": 3})
    assert res.status_code == 200
    assert [lvl["exact"] for lvl in res.json()["levels"]] == [-1, 1, 7]


def test_ladder():
    res = client.get("/ladder", params={"m1": 2, "m2": 3, "operator": "c", "max_nu": 2})
    assert res.status_code == 200
    actions = res.json()["actions"]
    assert actions[1]["nu"] == -3 and actions[1]["coefficient_sq"] == "24"


def test_verify():
    res = client.post("/verify", json={"m1": 2, "m2": 3, "max_nu": 2, "max_degree": 8})
    assert res.status_code == 200
    assert res.json()["passed"] is True
    res = client.post("/verify", json={"m": 2, "max_nu": 2, "max_degree": 8})
    assert res.json()["passed"] is True
    assert client.post("/verify", json={"m1": 2, "m2": 3, "max_nu": 99}).status_code == 422
