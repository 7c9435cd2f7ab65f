import pytest
from fastapi.testclient import TestClient

from togglekit.api import app
from togglekit.errors import ConfigError
from togglekit.service import (
    CspConfig,
    RunConfig,
    WitnessConfig,
    run_csp,
    run_orbits,
    run_order,
    run_trajectory,
    run_witness,
)

client = TestClient(app)


def test_health_and_families():
    assert client.get("/v1/health").json() == {"status": "ok"}
    fams = client.get("/v1/families").json()["families"]
    assert "asm:4" in fams


def test_orbits_endpoint_payload():
    reply = client.post("/v1/orbits", json={"family": "asm:4", "action": "spro"})
    assert reply.status_code == 200
    data = reply.json()
    assert data["schema"] == 1
    assert data["order"] == 10 and data["state_count"] == 42
    assert sorted(o["size"] for o in data["orbits"]) == [2, 5, 5, 10, 10, 10]
    # representatives are canonically least, so the first is the empty ideal
    assert data["orbits"][0]["representative"] == "0" * 10


def test_order_endpoint():
    data = client.post("/v1/order", json={"family": "product:2,3,4", "action": "row"}).json()
    assert data["order"] == 8


def test_csp_endpoint():
    data = client.post(
        "/v1/csp", json={"family": "halfsquare:4", "action": "row", "poly": "halfsquare"}
    ).json()
    assert data["holds"] is True and data["group_order"] == 8
    data = client.post(
        "/v1/csp", json={"family": "product:3,3,3", "action": "row", "poly": "macmahon"}
    ).json()
    assert data["holds"] is False and data["first_mismatch"] is not None


def test_witness_endpoint():
    data = client.post("/v1/witness", json={"family": "asm:3", "kind": "height"}).json()
    assert data["verified"] is True and data["state_count"] == 7
    assert data["action"] == "gyration"
    mats = {p["witness"] for p in data["pairs"]}
    assert "0 1 2 3/1 0 1 2/2 1 0 1/3 2 1 0" in mats


def test_trajectory_endpoint():
    data = client.post("/v1/trajectory", json={"family": "asm:3", "action": "spro"}).json()
    assert data["period"] == 7 and data["period_ok"] is True
    assert data["states"][0] == "0000"


def test_config_errors_are_400():
    assert client.post("/v1/orbits", json={"family": "nope:1"}).status_code == 400
    assert client.post(
        "/v1/orbits", json={"family": "product:2,2", "action": "spro"}
    ).status_code == 400
    assert client.post(
        "/v1/csp", json={"family": "asm:3", "poly": "qbinomial"}
    ).status_code == 400


def test_large_gate_is_413():
    assert client.post("/v1/orbits", json={"family": "tsscpp:7", "action": "row"}).status_code == 413


def test_rotate_and_psi_and_sytpro_state_actions():
    data = run_orbits(RunConfig(family="product:2,2", action="rotate")).model_dump()
    assert sorted(o["size"] for o in data["orbits"]) == [2, 4]
    data = run_orbits(RunConfig(family="product:2,3,4", action="psi")).model_dump()
    assert data["order"] == 8
    data = run_orbits(RunConfig(family="interior:2,3,0", action="syt-pro")).model_dump()
    assert sorted(o["size"] for o in data["orbits"]) == [2, 3]


def test_action_validation():
    with pytest.raises(ConfigError):
        run_orbits(RunConfig(family="root:A,3", action="rotate"))
    with pytest.raises(ConfigError):
        run_orbits(RunConfig(family="product:3,3,3", action="psi"))
    with pytest.raises(ConfigError):
        run_witness(WitnessConfig(family="product:2,2", kind="height"))
    with pytest.raises(ConfigError):
        run_csp(CspConfig(family="product:2,2", poly="catalan"))


def test_run_order_and_trajectory_in_process():
    assert run_order(RunConfig(family="root:A,3", action="row")).order == 8
    resp = run_trajectory(RunConfig(family="product:2,3,4", action="pro"))
    assert resp.period == 8 and resp.period_ok
    full = "1" * 24
    assert resp.states.index(full) == 3  # the full ideal shows up at step m


def test_witness_word_verified_orbit():
    resp = run_witness(WitnessConfig(family="product:2,2", kind="word"))
    assert resp.verified and resp.verified_orbit_size == 4
    got = {(p.state, p.witness) for p in resp.pairs}
    assert ("0000", "0011") in got and ("1111", "0110") in got


def test_determinism_across_threads_and_runs():
    a = run_orbits(RunConfig(family="tsscpp:5", action="row", threads=1))
    b = run_orbits(RunConfig(family="tsscpp:5", action="row", threads=5))
    assert a.model_dump_json() == b.model_dump_json()
